#pragma once

#include <json.hpp>

#include <limits>
#include <optional>
#include <string>

#include "synchrolab/classification.hpp"
#include "synchrolab/digraph_exponents.hpp"
#include "synchrolab/exact_sync.hpp"
#include "synchrolab/extension_synth.hpp"
#include "synchrolab/markov_spectral.hpp"

namespace synchrolab {

// Machine-readable analysis report. Rationals are "num/den" strings, states
// are 1-based, words use the automaton's letter names. Naturals are JSON
// numbers unless they exceed 64 bits, in which case they are decimal strings.
// Object keys are sorted, so equal inputs give byte-identical documents.

using Json = nlohmann::json;

struct AnalysisOptions {
  std::optional<ProbabilityVector> p;  // uniform when absent
  std::size_t c_max = 2;
  std::size_t cap = kDefaultSubsetCap;
  bool approx = false;
  std::string source = "-";
};

namespace report {

inline Json natural(const Natural& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

inline Json rationals(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Json approx(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_approx(x));
  return out;
}

inline Json states(const StateSet& K) {
  Json out = Json::array();
  for (State q : K.members()) out.push_back(q + 1);
  return out;
}

inline ProbabilityVector weights(const Automaton& A, const AnalysisOptions& opts) {
  if (!opts.p) return ProbabilityVector::uniform(A.letters());
  if (opts.p->size() != A.letters()) throw InputError("--p needs one weight per letter");
  return *opts.p;
}

inline Json automaton(const Automaton& A, const AnalysisOptions& opts) {
  return {{"n", A.states()}, {"k", A.letters()}, {"source", opts.source}, {"letters", A.letter_names()}};
}

inline Json classification(const Automaton& A, const AnalysisOptions& opts) {
  Json out;
  out["strongly_connected"] = is_strongly_connected(A);
  out["synchronizing"] = is_synchronizing(A);
  out["eulerian"] = is_eulerian(A);
  const auto pe = find_pseudo_eulerian_weights(A);
  out["pseudo_eulerian"] = {{"holds", pe.has_value()}, {"p", pe ? rationals(pe->values()) : Json(nullptr)}};
  const auto qe = find_quasi_eulerian_witness(A, opts.c_max, opts.cap);
  Json q = {{"holds", qe.has_value()}, {"c_max", opts.c_max}};
  if (qe) {
    if (!verify_quasi_eulerian(A, qe->E, qe->s, qe->p)) {
      throw InvariantViolation("quasi-Eulerian witness fails its own check");
    }
    q["witness"] = {{"c", qe->c}, {"E", states(qe->E)}, {"s", qe->s + 1}, {"p", rationals(qe->p.values())}};
  } else {
    q["witness"] = nullptr;
  }
  out["quasi_eulerian"] = q;
  return out;
}

inline Json exponents(const AdjacencyMatrix& M) {
  const auto e = detail::scan_powers(M);
  if (!e) return {{"primitive", false}, {"exp", nullptr}, {"wexp", nullptr}};
  return {{"primitive", true}, {"exp", e->exp}, {"wexp", e->wexp}};
}

/// Null when S(A, p) is not primitive.
inline Json spectral(const Automaton& A, const AnalysisOptions& opts) {
  const auto p = weights(A, opts);
  const auto S = transition_matrix(A, p);
  if (!is_primitive(S.support())) return nullptr;
  const auto ss = steady_state(S);
  Json out = {{"p", rationals(p.values())},
              {"alpha", rationals(ss.alpha)},
              {"L", natural(ss.L)},
              {"c", equal_value_deficiency(ss)},
              {"orbit_span_dim", orbit_span_dimension(A, ss)}};
  if (opts.approx) {
    out["alpha_approx"] = approx(ss.alpha);
    out["p_approx"] = approx(p.values());
  }
  return out;
}

inline Json certificate(const Automaton& A, const ResetCertificate& cert) {
  if (!verify_reset(A, cert.word)) throw InvariantViolation("reported word does not reset the automaton");
  return {{"word", word_to_string(A, cert.word)}, {"length", cert.length()}, {"sink", cert.sink + 1}};
}

inline Json trace(const Automaton& A, const ExtensionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"segment", word_to_string(A, s.segment)},
                     {"preimage", states(s.preimage)},
                     {"weight", to_string(s.weight)}});
  }
  return {{"seed", {{"letter", A.letter_names().at(t.seed_letter)}, {"state", t.seed_state + 1}}},
          {"steps", steps},
          {"step_count", t.steps.size()},
          {"L", natural(t.L)},
          {"orbit_span_dim", t.orbit_span_dimension},
          {"bound_used", natural(t.bound_used)}};
}

/// Exact, greedy and extension reset words. Null when not synchronizing; the
/// extension part is null when the automaton is not strongly connected.
inline Json synthesis(const Automaton& A, const AnalysisOptions& opts) {
  if (!is_synchronizing(A)) return nullptr;
  const auto exact = shortest_reset_word(A, opts.cap);
  Json out = {{"exact_length", exact.length()},
              {"exact_word", word_to_string(A, exact.word)},
              {"greedy", certificate(A, greedy_compress(A))}};
  certificate(A, exact);
  if (A.states() == 1 || is_strongly_connected(A)) {
    const auto [cert, t] = synthesize_reset_word(A, weights(A, opts), opts.cap);
    out["extension_word"] = certificate(A, cert)["word"];
    out["extension_length"] = cert.length();
    out["trace"] = trace(A, t);
  } else {
    out["extension_word"] = nullptr;
    out["extension_length"] = nullptr;
    out["trace"] = nullptr;
  }
  return out;
}

/// Bound values with satisfied = (exact reset length <= value); the flag is
/// null when no exact length is known.
inline Json bounds(std::size_t n, const std::optional<std::size_t>& exact_length, const Json& spectral_section) {
  auto entry = [&](const Natural& value) -> Json {
    Json e = {{"value", natural(value)}};
    e["satisfied"] = exact_length ? Json(Natural(*exact_length) <= value) : Json(nullptr);
    return e;
  };
  Json out = {{"cerny", entry(cerny_bound(n))}, {"pin", entry(pin_bound(n))}};
  if (spectral_section.is_null()) {
    out["lcm_bound"] = nullptr;
    out["deficiency_bound"] = nullptr;
  } else {
    const auto& L = spectral_section["L"];
    const Natural l = L.is_string() ? Natural(L.get<std::string>()) : Natural(L.get<std::uint64_t>());
    out["lcm_bound"] = entry(lcm_bound(n, l));
    out["deficiency_bound"] = entry(deficiency_bound(n, spectral_section["c"].get<std::size_t>()));
  }
  return out;
}

}  // namespace report

/// Full analysis report for one automaton.
inline Json analyze(const Automaton& A, const AnalysisOptions& opts) {
  require_subset_cap(A.states(), opts.cap, "analyze");
  Json out;
  out["automaton"] = report::automaton(A, opts);
  out["classification"] = report::classification(A, opts);
  out["exponents"] = report::exponents(underlying_matrix(A));
  out["spectral"] = report::spectral(A, opts);
  out["synthesis"] = report::synthesis(A, opts);
  std::optional<std::size_t> exact;
  if (!out["synthesis"].is_null()) exact = out["synthesis"]["exact_length"].get<std::size_t>();
  out["bounds"] = report::bounds(A.states(), exact, out["spectral"]);
  return out;
}

}  // namespace synchrolab
