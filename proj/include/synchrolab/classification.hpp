#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "synchrolab/automaton.hpp"
#include "synchrolab/exact_lp.hpp"
#include "synchrolab/markov_spectral.hpp"

namespace synchrolab {

/// indeg[a][q] = #{q' | q'.a = q}.
struct IndegreeProfile {
  std::vector<std::vector<std::uint32_t>> indeg;

  std::size_t letters() const { return indeg.size(); }
  std::size_t states() const { return indeg.empty() ? 0 : indeg[0].size(); }

  std::uint32_t total(State q) const {
    std::uint32_t t = 0;
    for (const auto& row : indeg) t += row.at(q);
    return t;
  }

  /// Row sum of S(A, p) at q: sum_a p(a) indeg[a][q].
  Rational row_sum(const ProbabilityVector& p, State q) const {
    Rational s = 0;
    for (std::size_t a = 0; a < indeg.size(); ++a) s += p[a] * indeg[a].at(q);
    return s;
  }
};

inline IndegreeProfile indegree_profile(const Automaton& A) {
  IndegreeProfile prof;
  prof.indeg.assign(A.letters(), std::vector<std::uint32_t>(A.states(), 0));
  for (Letter a = 0; a < A.letters(); ++a) {
    for (State q = 0; q < A.states(); ++q) ++prof.indeg[a][A.letter_map(a)[q]];
  }
  return prof;
}

/// Strongly connected with total in-degree k at every state.
inline bool is_eulerian(const Automaton& A) {
  if (!is_strongly_connected(A)) return false;
  const auto prof = indegree_profile(A);
  for (State q = 0; q < A.states(); ++q) {
    if (prof.total(q) != A.letters()) return false;
  }
  return true;
}

namespace detail {

/// Strictly positive p making the listed rows of S(A, p) sum to 1, or none.
/// LP over (p_1..p_k, t, s_1..s_k): maximize t subject to p_a - t - s_a = 0,
/// sum p = 1 and the row equations; a positive optimum t means p > 0.
inline std::optional<ProbabilityVector> positive_row_stochastic_weights(
    const IndegreeProfile& prof, const std::vector<State>& rows) {
  const std::size_t k = prof.letters();
  const std::size_t vars = 2 * k + 1;
  const std::size_t t = k;
  LinearProgram lp;
  lp.c.assign(vars, Rational(0));
  lp.c[t] = 1;
  for (std::size_t a = 0; a < k; ++a) {
    RationalVector row(vars, Rational(0));
    row[a] = 1;
    row[t] = -1;
    row[k + 1 + a] = -1;
    lp.A.push_back(std::move(row));
    lp.b.emplace_back(0);
  }
  {
    RationalVector row(vars, Rational(0));
    for (std::size_t a = 0; a < k; ++a) row[a] = 1;
    lp.A.push_back(std::move(row));
    lp.b.emplace_back(1);
  }
  for (State q : rows) {
    RationalVector row(vars, Rational(0));
    for (std::size_t a = 0; a < k; ++a) row[a] = prof.indeg[a][q];
    lp.A.push_back(std::move(row));
    lp.b.emplace_back(1);
  }
  const auto result = solve_lp(lp);
  if (result.status != LpStatus::optimal || result.value <= 0) return std::nullopt;
  return ProbabilityVector(RationalVector(result.x.begin(), result.x.begin() + static_cast<long>(k)));
}

}  // namespace detail

/// Strictly positive p with S(A, p) doubly stochastic, if one exists.
inline std::optional<ProbabilityVector> find_pseudo_eulerian_weights(const Automaton& A) {
  std::vector<State> rows(A.states());
  for (State q = 0; q < A.states(); ++q) rows[q] = q;
  return detail::positive_row_stochastic_weights(indegree_profile(A), rows);
}

struct QuasiEulerianWitness {
  StateSet E;
  /// Enter state: the only state of E with arrows from outside E.
  State s;
  ProbabilityVector p;
  /// n - |E|
  std::size_t c;
};

/// Checks that every arrow from Q \ E into E ends at s, and that the rows of
/// S(A, p) for E \ {s} sum to 1. The row of s itself is unconstrained.
inline bool verify_quasi_eulerian(const Automaton& A, const StateSet& E, State s,
                                  const ProbabilityVector& p) {
  if (E.ambient() != A.states()) throw InputError("state set size differs from automaton");
  if (!E.contains(s)) throw InputError("enter state must belong to E");
  if (p.size() != A.letters()) throw InputError("probability vector length differs from alphabet size");
  for (State q = 0; q < A.states(); ++q) {
    if (E.contains(q)) continue;
    for (Letter a = 0; a < A.letters(); ++a) {
      const State r = A.letter_map(a)[q];
      if (E.contains(r) && r != s) return false;
    }
  }
  const auto prof = indegree_profile(A);
  for (State q : E.members()) {
    if (q != s && prof.row_sum(p, q) != 1) return false;
  }
  return true;
}

/// Smallest-c witness with c <= c_max. Sets E of size n - c are visited in
/// lexicographic order of their members, enter states in increasing order.
/// Automata that are not strongly connected have no witness.
inline std::optional<QuasiEulerianWitness> find_quasi_eulerian_witness(
    const Automaton& A, std::size_t c_max, std::size_t cap = kDefaultSubsetCap) {
  const std::size_t n = A.states();
  require_subset_cap(n, cap, "find_quasi_eulerian_witness");
  if (!is_strongly_connected(A)) return std::nullopt;
  const auto prof = indegree_profile(A);

  for (std::size_t c = 0; c <= std::min(c_max, n - 1); ++c) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n - c), true);
    do {
      StateSet E(n);
      for (State q = 0; q < n; ++q) {
        if (pick[q]) E.insert(q);
      }
      // all arrows entering E from outside must share one target
      StateSet targets(n);
      for (State q = 0; q < n; ++q) {
        if (E.contains(q)) continue;
        for (Letter a = 0; a < A.letters(); ++a) {
          const State r = A.letter_map(a)[q];
          if (E.contains(r)) targets.insert(r);
        }
      }
      if (targets.size() > 1) continue;
      const auto candidates = targets.empty() ? E.members() : targets.members();
      for (State s : candidates) {
        std::vector<State> rows;
        for (State q : E.members()) {
          if (q != s) rows.push_back(q);
        }
        if (auto p = detail::positive_row_stochastic_weights(prof, rows)) {
          return QuasiEulerianWitness{E, s, std::move(*p), c};
        }
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

/// (n - 1)^2
inline Natural cerny_bound(std::size_t n) {
  const Natural m = n == 0 ? 0 : n - 1;
  return m * m;
}

/// (n^3 - n) / 6
inline Natural pin_bound(std::size_t n) {
  const Natural m = n;
  return (m * m * m - m) / 6;
}

/// 1 + (n - 1)(L - 2), floored at 0.
inline Natural lcm_bound(std::size_t n, const Natural& L) {
  const boost::multiprecision::cpp_int v = 1 + boost::multiprecision::cpp_int(n - 1) * (L - 2);
  return v < 0 ? Natural(0) : v;
}

/// 2^c (n - c + 1)(n - 1), floored at 0.
inline Natural deficiency_bound(std::size_t n, std::size_t c) {
  if (c > n + 1 || n == 0) return 0;
  return (Natural(1) << c) * Natural(n - c + 1) * Natural(n - 1);
}

}  // namespace synchrolab
