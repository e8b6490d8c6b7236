#pragma once

#include <optional>
#include <vector>

#include "synchrolab/rational.hpp"

namespace synchrolab {

struct LinearProgram {
  /// Equality constraints: rows of A x = b, with x >= 0.
  std::vector<RationalVector> A;
  RationalVector b;
  /// Objective to maximize.
  RationalVector c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RationalVector x;
  Rational value = 0;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::vector<RationalVector> rows, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t cols() const { return rows_.empty() ? 0 : rows_[0].size() - 1; }

  /// Maximizes cost . x over the columns flagged in `allowed`, using Bland's
  /// rule for both entering and leaving choices. Returns false if unbounded.
  bool maximize(const RationalVector& cost, const std::vector<bool>& allowed) {
    const std::size_t m = rows_.size();
    const std::size_t rhs = cols();
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < rhs && !enter; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < m; ++i) reduced -= cost[basis_[i]] * rows_[i][j];
        if (reduced > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (rows_[i][*enter] <= 0) continue;
        Rational ratio = rows_[i][rhs] / rows_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& v : rows_[r]) v *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<long>(r));
    basis_.erase(basis_.begin() + static_cast<long>(r));
  }

  std::vector<RationalVector>& rows() { return rows_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  RationalVector solution(std::size_t vars) const {
    RationalVector x(vars, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < vars) x[basis_[i]] = rows_[i][cols()];
    }
    return x;
  }

 private:
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Two-phase exact simplex. Phase one minimizes the sum of artificial
/// variables; artificials left basic at level zero are pivoted out, or their
/// row is dropped as redundant.
inline LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.A.size();
  const std::size_t vars = lp.c.size();
  if (lp.b.size() != m) throw InputError("LP right-hand side has wrong length");
  for (const auto& row : lp.A) {
    if (row.size() != vars) throw InputError("LP constraint row has wrong length");
  }
  const std::size_t cols = vars + m;
  std::vector<RationalVector> rows(m, RationalVector(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = lp.b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < vars; ++j) rows[i][j] = sign * lp.A[i][j];
    rows[i][vars + i] = 1;
    rows[i][cols] = sign * lp.b[i];
    basis[i] = vars + i;
  }
  detail::Tableau tab(std::move(rows), std::move(basis));

  RationalVector phase1(cols, Rational(0));
  for (std::size_t j = vars; j < cols; ++j) phase1[j] = -1;
  tab.maximize(phase1, std::vector<bool>(cols, true));
  for (std::size_t i = 0; i < tab.rows().size(); ++i) {
    if (tab.basis()[i] >= vars && tab.rows()[i][cols] != 0) return {LpStatus::infeasible, {}, 0};
  }
  for (std::size_t i = tab.rows().size(); i-- > 0;) {
    if (tab.basis()[i] < vars) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < vars && !col; ++j) {
      if (tab.rows()[i][j] != 0) col = j;
    }
    if (col) tab.pivot(i, *col); else tab.drop_row(i);
  }

  RationalVector phase2(cols, Rational(0));
  for (std::size_t j = 0; j < vars; ++j) phase2[j] = lp.c[j];
  std::vector<bool> allowed(cols, false);
  for (std::size_t j = 0; j < vars; ++j) allowed[j] = true;
  if (!tab.maximize(phase2, allowed)) return {LpStatus::unbounded, {}, 0};

  LpResult result{LpStatus::optimal, tab.solution(vars), 0};
  result.value = dot(result.x, lp.c);
  return result;
}

}  // namespace synchrolab
