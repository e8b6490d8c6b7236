#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "synchrolab/errors.hpp"

namespace synchrolab {

/// Exact rational in canonical form (positive denominator, reduced).
using Rational = boost::multiprecision::cpp_rational;
/// Arbitrary-precision integer used for L and the bound formulas.
using Natural = boost::multiprecision::cpp_int;

using RationalVector = std::vector<Rational>;

/// Always "num/den", including integers ("1/1").
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const Natural& n) { return n.str(); }

/// Decimal rendering for humans; never used for computation.
inline std::string to_approx(const Rational& r, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << r.convert_to<double>();
  return os.str();
}

/// Accepts "p/q", "p" or a decimal-free integer with optional sign.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw InputError("malformed rational '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw InputError("malformed rational '" + std::string(text) + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InputError("malformed rational '" + std::string(text) + "'");
    }
    return Natural(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Natural den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline Natural lcm(const Natural& a, const Natural& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

inline Rational dot(const RationalVector& x, const RationalVector& y) {
  if (x.size() != y.size()) throw InputError("vector dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

namespace detail {

/// In-place reduced row echelon form with the first nonzero entry of each
/// column as pivot. Returns the pivot columns.
inline std::vector<std::size_t> rref(std::vector<RationalVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

}  // namespace synchrolab
