#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "synchrolab/automaton.hpp"

namespace synchrolab {

/// Non-negative integer matrix. Entry (i, j) counts edges j -> i; for an
/// automaton it counts letters a with j.a = i, so M is the sum of the 0-1
/// letter matrices and M^t(i, j) counts paths of length t from j to i.
///
/// Exponents depend only on the support of M.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {
    if (n == 0) throw InputError("matrix dimension must be positive");
  }

  std::size_t size() const { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }

  /// Same support, entries clamped to 1.
  AdjacencyMatrix support() const {
    AdjacencyMatrix out(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] > 0 ? 1 : 0;
    return out;
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (auto e : entries_) c += e;
    return c;
  }

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> entries_;
};

inline AdjacencyMatrix underlying_matrix(const Automaton& A) {
  AdjacencyMatrix M(A.states());
  for (Letter a = 0; a < A.letters(); ++a) {
    for (State j = 0; j < A.states(); ++j) ++M(A.letter_map(a)[j], j);
  }
  return M;
}

namespace detail {

/// Boolean matrix with bit-packed rows.
class BoolMatrix {
 public:
  explicit BoolMatrix(const AdjacencyMatrix& M)
      : n_(M.size()), words_((n_ + 63) / 64), bits_(n_ * words_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (M(i, j) > 0) bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }

  bool get(std::size_t i, std::size_t j) const {
    return ((bits_[i * words_ + j / 64] >> (j % 64)) & 1U) != 0;
  }

  /// (this * rhs) in the boolean semiring.
  BoolMatrix times(const BoolMatrix& rhs) const {
    BoolMatrix out(*this);
    std::fill(out.bits_.begin(), out.bits_.end(), 0);
    for (std::size_t i = 0; i < n_; ++i) {
      auto* dst = &out.bits_[i * words_];
      for (std::size_t l = 0; l < n_; ++l) {
        if (!get(i, l)) continue;
        const auto* src = &rhs.bits_[l * words_];
        for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
      }
    }
    return out;
  }

  bool row_full(std::size_t i) const {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!get(i, j)) return false;
    }
    return true;
  }

  bool any_row_full() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (row_full(i)) return true;
    }
    return false;
  }

  bool all_full() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!row_full(i)) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct Exponents {
  std::size_t exp;
  std::size_t wexp;
};

/// Scans boolean powers M, M^2, ... up to (n-1)^2 + 1. Any primitive matrix
/// is positive by then, so running past it means M is not primitive.
inline std::optional<Exponents> scan_powers(const AdjacencyMatrix& M) {
  const std::size_t n = M.size();
  const std::size_t limit = (n - 1) * (n - 1) + 1;
  const BoolMatrix base(M);
  BoolMatrix power = base;
  std::optional<std::size_t> wexp;
  for (std::size_t m = 1; m <= limit; ++m) {
    if (m > 1) power = power.times(base);
    if (!wexp && power.any_row_full()) wexp = m;
    if (wexp && power.all_full()) return Exponents{m, *wexp};
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_primitive(const AdjacencyMatrix& M) { return detail::scan_powers(M).has_value(); }

/// Least m with M^m positive.
inline std::size_t exponent(const AdjacencyMatrix& M) {
  auto e = detail::scan_powers(M);
  if (!e) throw DomainError("matrix is not primitive");
  return e->exp;
}

/// Least m such that M^m has a positive row, i.e. some vertex is reached from
/// every vertex by a path of length exactly m.
inline std::size_t weak_exponent(const AdjacencyMatrix& M) {
  auto e = detail::scan_powers(M);
  if (!e) throw DomainError("matrix is not primitive");
  return e->wexp;
}

}  // namespace synchrolab
