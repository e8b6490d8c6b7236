#pragma once

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "synchrolab/classification.hpp"
#include "synchrolab/exact_sync.hpp"
#include "synchrolab/markov_spectral.hpp"

namespace synchrolab {

/// Extension method, alpha-weighted.
///
/// A reset word is built backwards: starting from the preimage K_1 of one
/// state under a seed letter, each step prepends the shortest word v whose
/// preimage K.v^{-1} has strictly larger alpha-weight than K, until the
/// preimage is all of Q. With x = [K] - (alpha-weight of K) [Q] we have
/// (x, alpha) = 0 for every alpha, and "weight increases" is exactly
/// (v^t x, alpha) > 0, so each v has length at most n - 1.

struct ExtensionStep {
  Word segment;
  StateSet preimage;
  Rational weight;
};

struct ExtensionTrace {
  Letter seed_letter = 0;
  State seed_state = 0;
  /// steps[0] is the seed; steps[i].preimage = preimage(steps[i-1].preimage, steps[i].segment).
  std::vector<ExtensionStep> steps;
  /// Segments in reverse step order: w_d ... w_2 w_1.
  Word final_word;
  /// 1 + (n - 1)(L - 2), the length ceiling checked against final_word.
  Natural bound_used = 0;
  Natural L = 1;
  std::size_t orbit_span_dimension = 1;
};

/// alpha-weight of a state set: ([K], alpha).
inline Rational alpha_weight(const StateSet& K, const RationalVector& alpha) {
  Rational w = 0;
  for (State q : K.members()) w += alpha.at(q);
  return w;
}

namespace detail {

class MaskWeigher {
 public:
  explicit MaskWeigher(const SteadyState& ss) : scaled_(ss.alpha.size()) {
    for (std::size_t i = 0; i < ss.alpha.size(); ++i) {
      scaled_[i] = boost::multiprecision::numerator(Rational(ss.alpha[i] * ss.L));
    }
  }
  /// L times the alpha-weight, an integer.
  Natural operator()(std::uint64_t mask) const {
    Natural w = 0;
    while (mask != 0) {
      w += scaled_[static_cast<std::size_t>(std::countr_zero(mask))];
      mask &= mask - 1;
    }
    return w;
  }

 private:
  std::vector<Natural> scaled_;
};

inline std::uint64_t preimage_mask(const Automaton& A, std::uint64_t mask, Letter a) {
  const auto& map = A.letter_map(a);
  std::uint64_t out = 0;
  for (State q = 0; q < A.states(); ++q) {
    if ((mask >> map[q]) & 1U) out |= std::uint64_t{1} << q;
  }
  return out;
}

}  // namespace detail

/// Shortest v with alpha-weight(K.v^{-1}) > alpha-weight(K), lexicographically
/// smallest among those. Preimages compose by prepending letters, so the
/// search builds layers T_j = {K.u^{-1} : |u| = j} and then fixes the word's
/// letters from the front: a prefix P is extendable iff some X in the layer
/// of the remaining length has a heavy enough X.P^{-1}.
inline Word shortest_extension_word(const Automaton& A, const StateSet& K, const SteadyState& ss,
                                    std::size_t cap = kDefaultSubsetCap) {
  const std::size_t n = A.states();
  if (K.ambient() != n || ss.alpha.size() != n) throw InputError("dimension mismatch");
  if (K.empty() || K.is_full()) throw InputError("extension needs a proper nonempty subset");
  require_subset_cap(n, cap, "shortest_extension_word");

  const detail::MaskWeigher weigh(ss);
  const std::uint64_t start = K.to_mask();
  const Natural base = weigh(start);

  std::vector<std::vector<std::uint64_t>> layers{{start}};
  std::size_t depth = 0;
  for (std::size_t j = 1; j <= n - 1 && depth == 0; ++j) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> layer;
    for (auto X : layers.back()) {
      for (Letter a = 0; a < A.letters(); ++a) {
        const auto Y = detail::preimage_mask(A, X, a);
        if (seen.insert(Y).second) layer.push_back(Y);
        if (weigh(Y) > base) depth = j;
      }
    }
    layers.push_back(std::move(layer));
  }
  if (depth == 0) {
    if (!is_synchronizing(A)) throw DomainError("automaton is not synchronizing");
    throw InvariantViolation("no weight-increasing extension word of length <= n - 1");
  }

  // state -> state.P for the fixed prefix P
  std::vector<State> prefix_map(n);
  for (State q = 0; q < n; ++q) prefix_map[q] = q;
  Word word;
  for (std::size_t i = 1; i <= depth; ++i) {
    const auto& layer = layers[depth - i];
    bool extended = false;
    for (Letter a = 0; a < A.letters() && !extended; ++a) {
      std::vector<State> map(n);
      for (State q = 0; q < n; ++q) map[q] = A.letter_map(a)[prefix_map[q]];
      extended = std::any_of(layer.begin(), layer.end(), [&](std::uint64_t X) {
        std::uint64_t Y = 0;
        for (State q = 0; q < n; ++q) {
          if ((X >> map[q]) & 1U) Y |= std::uint64_t{1} << q;
        }
        return weigh(Y) > base;
      });
      if (extended) {
        word.push_back(a);
        prefix_map = std::move(map);
      }
    }
    if (!extended) throw InvariantViolation("extension word reconstruction failed");
  }
  return word;
}

/// Step-count ceilings from one steady state: (L - 2, 2^c (n - c + 1)),
/// both floored at 0.
inline std::pair<Natural, Natural> chain_step_count_bounds(const SteadyState& ss) {
  const std::size_t n = ss.alpha.size();
  const std::size_t c = equal_value_deficiency(ss);
  Natural lcm_steps = ss.L >= 2 ? Natural(ss.L - 2) : Natural(0);
  Natural value_steps = (Natural(1) << c) * Natural(n - c + 1);
  return {lcm_steps, value_steps};
}

/// Runs the extension method with weights alpha = steady state of S(A, p)
/// and checks every guarantee along the way; a violated guarantee raises
/// InvariantViolation.
inline std::pair<ResetCertificate, ExtensionTrace> synthesize_reset_word(
    const Automaton& A, const ProbabilityVector& p, std::size_t cap = kDefaultSubsetCap) {
  const std::size_t n = A.states();
  ExtensionTrace trace;
  if (p.size() != A.letters()) throw InputError("probability vector length differs from alphabet size");
  if (n == 1) return {ResetCertificate{}, trace};
  require_subset_cap(n, cap, "synthesize_reset_word");
  if (!is_strongly_connected(A)) throw DomainError("automaton is not strongly connected");
  if (!is_synchronizing(A)) throw DomainError("automaton is not synchronizing");

  const auto ss = steady_state(transition_matrix(A, p));
  trace.L = ss.L;
  trace.orbit_span_dimension = orbit_span_dimension(A, ss);
  trace.bound_used = lcm_bound(n, ss.L);

  // seed: heaviest preimage of a single state under a single letter
  std::optional<ExtensionStep> seed;
  for (Letter a = 0; a < A.letters(); ++a) {
    for (State q = 0; q < n; ++q) {
      auto pre = preimage(A, StateSet(n, {q}), Word{a});
      if (pre.size() < 2) continue;
      auto w = alpha_weight(pre, ss.alpha);
      if (!seed || w > seed->weight) {
        seed = ExtensionStep{Word{a}, std::move(pre), std::move(w)};
        trace.seed_letter = a;
        trace.seed_state = q;
      }
    }
  }
  if (!seed) throw InvariantViolation("synchronizing automaton without a merging letter");
  trace.steps.push_back(*seed);

  const Rational step_floor = Rational(1) / Rational(ss.L);
  if (seed->weight < 2 * step_floor) throw InvariantViolation("seed weight below 2/L");
  while (!trace.steps.back().preimage.is_full()) {
    const auto& prev = trace.steps.back();
    Word v = shortest_extension_word(A, prev.preimage, ss, cap);
    if (v.size() + 1 > trace.orbit_span_dimension) {
      throw InvariantViolation("extension word longer than orbit span dimension - 1");
    }
    auto pre = preimage(A, prev.preimage, v);
    auto w = alpha_weight(pre, ss.alpha);
    if (w - prev.weight < step_floor) throw InvariantViolation("weight increment below 1/L");
    trace.steps.push_back(ExtensionStep{std::move(v), std::move(pre), std::move(w)});
  }
  if (trace.steps.back().weight != 1) throw InvariantViolation("final preimage weight differs from 1");

  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    trace.final_word.insert(trace.final_word.end(), it->segment.begin(), it->segment.end());
  }
  const auto [lcm_steps, value_steps] = chain_step_count_bounds(ss);
  // weights run from >= 2/L up to 1 in increments >= 1/L: at most L - 2
  // steps after the seed. The whole chain takes distinct weight values, of
  // which there are at most 2^c (n - c + 1).
  if (Natural(trace.steps.size() - 1) > lcm_steps) {
    throw InvariantViolation("more than L - 2 extension steps after the seed");
  }
  if (Natural(trace.steps.size()) > value_steps) {
    throw InvariantViolation("extension chain longer than 2^c (n - c + 1)");
  }
  if (Natural(trace.final_word.size()) > trace.bound_used) {
    throw InvariantViolation("synthesized word exceeds 1 + (n - 1)(L - 2)");
  }
  auto cert = detail::make_certificate(A, trace.final_word);
  if (!verify_reset(A, cert.word) || cert.sink != trace.seed_state) {
    throw InvariantViolation("synthesized word does not reset the automaton");
  }
  return {std::move(cert), std::move(trace)};
}

}  // namespace synchrolab
