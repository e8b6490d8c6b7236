#pragma once

#include <algorithm>
#include <map>
#include <string_view>

#include "synchrolab/automaton.hpp"
#include "synchrolab/digraph_exponents.hpp"
#include "synchrolab/rational.hpp"

namespace synchrolab {

/// Strictly positive distribution on the alphabet. Zero weights would change
/// the support of S(A, p) and can break primitivity, so they are rejected.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(RationalVector p) : p_(std::move(p)) {
    if (p_.empty()) throw InputError("probability vector is empty");
    Rational sum = 0;
    for (const auto& x : p_) {
      if (x <= 0) throw InputError("probability weights must be strictly positive");
      sum += x;
    }
    if (sum != 1) throw InputError("probability weights must sum to 1, got " + to_string(sum));
  }

  static ProbabilityVector uniform(std::size_t k) {
    return ProbabilityVector(RationalVector(k, Rational(1, static_cast<long>(k))));
  }

  /// Comma-separated exact fractions, e.g. "1/3,2/3".
  static ProbabilityVector parse(std::string_view text) {
    RationalVector p;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      p.push_back(parse_rational(text.substr(pos, end - pos)));
      pos = end + 1;
    }
    return ProbabilityVector(std::move(p));
  }

  std::size_t size() const { return p_.size(); }
  const Rational& operator[](std::size_t a) const { return p_.at(a); }
  const RationalVector& values() const { return p_; }

  friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

 private:
  RationalVector p_;
};

/// p(v) = product of the letter weights; p(empty) = 1.
inline Rational word_probability(const ProbabilityVector& p, const Word& v) {
  Rational r = 1;
  for (Letter a : v) r *= p[a];
  return r;
}

/// Column-stochastic n x n matrix S(A, p) = sum_a p(a) [a], where entry (i, j)
/// is the probability of moving from j to i.
class StochasticMatrix {
 public:
  StochasticMatrix(std::size_t n, RationalVector entries) : n_(n), s_(std::move(entries)) {
    if (s_.size() != n_ * n_) throw InputError("stochastic matrix has wrong entry count");
    for (std::size_t j = 0; j < n_; ++j) {
      Rational col = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if ((*this)(i, j) < 0) throw InputError("stochastic matrix has a negative entry");
        col += (*this)(i, j);
      }
      if (col != 1) throw InputError("column " + std::to_string(j + 1) + " does not sum to 1");
    }
  }

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return s_.at(i * n_ + j); }

  RationalVector apply(const RationalVector& x) const {
    RationalVector y(n_, Rational(0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x.at(j);
    }
    return y;
  }

  AdjacencyMatrix support() const {
    AdjacencyMatrix M(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) M(i, j) = (*this)(i, j) > 0 ? 1 : 0;
    }
    return M;
  }

 private:
  std::size_t n_;
  RationalVector s_;
};

inline StochasticMatrix transition_matrix(const Automaton& A, const ProbabilityVector& p) {
  if (p.size() != A.letters()) throw InputError("probability vector length differs from alphabet size");
  const std::size_t n = A.states();
  RationalVector s(n * n, Rational(0));
  for (Letter a = 0; a < A.letters(); ++a) {
    for (State j = 0; j < n; ++j) s[A.letter_map(a)[j] * n + j] += p[a];
  }
  return StochasticMatrix(n, std::move(s));
}

struct SteadyState {
  RationalVector alpha;
  /// Least common multiple of the denominators of alpha.
  Natural L;
};

inline Natural lcm_denominators(const RationalVector& alpha) {
  Natural L = 1;
  for (const auto& x : alpha) L = lcm(L, boost::multiprecision::denominator(x));
  return L;
}

inline Natural lcm_denominators(const SteadyState& ss) { return lcm_denominators(ss.alpha); }

/// Unique stochastic solution of S x = x, by exact elimination on (S - I)
/// stacked with the row sum(x) = 1.
inline SteadyState steady_state(const StochasticMatrix& S) {
  const std::size_t n = S.size();
  if (!is_primitive(S.support())) throw DomainError("transition matrix is not primitive");

  std::vector<RationalVector> rows(n + 1, RationalVector(n + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = S(i, j) - (i == j ? 1 : 0);
  }
  {
    auto kernel_rows = std::vector<RationalVector>(rows.begin(), rows.begin() + static_cast<long>(n));
    if (detail::rref(kernel_rows, n).size() != n - 1) {
      throw InvariantViolation("S - I does not have rank n - 1 for a primitive S");
    }
  }
  for (std::size_t j = 0; j <= n; ++j) rows[n][j] = 1;
  const auto pivots = detail::rref(rows, n + 1);
  if (pivots.size() != n || pivots.back() != n - 1) {
    throw InvariantViolation("steady state system has no unique solution");
  }
  SteadyState ss;
  ss.alpha.resize(n);
  for (std::size_t i = 0; i < n; ++i) ss.alpha[i] = rows[i][n];
  for (const auto& x : ss.alpha) {
    if (x <= 0) throw InvariantViolation("steady state has a non-positive component");
  }
  if (S.apply(ss.alpha) != ss.alpha) throw InvariantViolation("steady state is not a fixed vector");
  ss.L = lcm_denominators(ss.alpha);
  return ss;
}

/// c = n minus the largest multiplicity among the components of alpha.
inline std::size_t equal_value_deficiency(const RationalVector& alpha) {
  std::map<Rational, std::size_t> counts;
  std::size_t best = 0;
  for (const auto& x : alpha) best = std::max(best, ++counts[x]);
  return alpha.size() - best;
}

inline std::size_t equal_value_deficiency(const SteadyState& ss) {
  return equal_value_deficiency(ss.alpha);
}

/// [a] v, the image-action matrix of a letter applied to a vector:
/// ([a] v)_i = sum of v_j over j with j.a = i.
inline RationalVector letter_action(const Automaton& A, Letter a, const RationalVector& v) {
  RationalVector out(A.states(), Rational(0));
  const auto& map = A.letter_map(a);
  for (State j = 0; j < A.states(); ++j) out[map[j]] += v.at(j);
  return out;
}

/// Dimension of span{[u] alpha : |u| <= n - 1}. The span is grown one word
/// length at a time; only vectors added at the previous length are pushed
/// through the letters again, and growth stops once a level adds nothing.
inline std::size_t orbit_span_dimension(const Automaton& A, const SteadyState& ss) {
  const std::size_t n = A.states();
  if (ss.alpha.size() != n) throw InputError("steady state dimension differs from automaton");

  struct Row {
    RationalVector v;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  auto try_add = [&](RationalVector v) {
    for (const auto& b : basis) {
      if (v[b.pivot] == 0) continue;
      const Rational f = v[b.pivot];
      for (std::size_t i = 0; i < n; ++i) v[i] -= f * b.v[i];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - v.begin());
    const Rational inv = 1 / *it;
    for (auto& x : v) x *= inv;
    basis.push_back({std::move(v), pivot});
    return true;
  };
  try_add(ss.alpha);
  std::vector<RationalVector> frontier{ss.alpha};
  for (std::size_t len = 1; len < n && !frontier.empty() && basis.size() < n; ++len) {
    std::vector<RationalVector> next;
    for (const auto& v : frontier) {
      for (Letter a = 0; a < A.letters(); ++a) {
        auto w = letter_action(A, a, v);
        if (try_add(w)) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return basis.size();
}

/// Sum over all words u of length r of p(u) * ([u]^t x, alpha), where
/// alpha is the steady state of S(A, p). Zero whenever (x, alpha) = 0.
inline Rational verify_balance(const Automaton& A, const ProbabilityVector& p,
                               const RationalVector& x, std::size_t r) {
  const std::size_t n = A.states();
  if (x.size() != n) throw InputError("vector dimension differs from automaton");
  const auto ss = steady_state(transition_matrix(A, p));
  if (dot(x, ss.alpha) != 0) throw DomainError("(x, alpha) must be zero");

  const std::size_t k = A.letters();
  Word u(r, 0);
  Rational total = 0;
  while (true) {
    // ([u]^t x)_j = x_{j.u}
    Rational pairing = 0;
    for (State j = 0; j < n; ++j) {
      State q = j;
      for (Letter a : u) q = A.letter_map(a)[q];
      pairing += ss.alpha[j] * x[q];
    }
    total += word_probability(p, u) * pairing;
    std::size_t pos = r;
    while (pos > 0 && ++u[pos - 1] == k) u[--pos] = 0;
    if (pos == 0) break;
  }
  return total;
}

}  // namespace synchrolab
