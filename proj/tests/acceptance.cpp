// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "synchrolab/synchrolab.hpp"

using namespace synchrolab;

namespace {

// Wall-clock ceilings, seconds.
constexpr double kCernyBudget = 10.0;
constexpr double kWielandtBudget = 5.0;

constexpr std::size_t kPrimitiveCases = 500;
constexpr std::size_t kBridgeCases = 200;
constexpr std::size_t kEulerianCases = 100;
constexpr std::size_t kBalanceCases = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  if (!o.pass) ++failures;
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name;
  const auto d = o.detail.str();
  if (!d.empty()) std::cout << "  (" << d << ")";
  std::cout << std::endl;
}

void cerny_lengths(Outcome& o) {
  const auto t0 = Clock::now();
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto len = reset_length(cerny(n));
    if (len != (n - 1) * (n - 1)) o.fail("n=" + std::to_string(n) + " gave " + std::to_string(len));
  }
  const double t = seconds_since(t0);
  if (t >= kCernyBudget) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail << t << " s";
}

void c4_spectral(Outcome& o) {
  const auto A = cerny(4);
  const auto p = ProbabilityVector::uniform(2);
  const auto ss = steady_state(transition_matrix(A, p));
  const RationalVector expected{Rational(2, 7), Rational(2, 7), Rational(2, 7), Rational(1, 7)};
  if (ss.alpha != expected) o.fail("alpha differs from 2/7 2/7 2/7 1/7");
  if (oracle::steady_state(A, p.values()) != expected) o.fail("cofactor oracle disagrees");
  if (ss.L != 7) o.fail("L != 7");
  if (equal_value_deficiency(ss) != 1) o.fail("c != 1");
}

void c4_extension(Outcome& o) {
  const auto A = cerny(4);
  const auto [cert, trace] = synthesize_reset_word(A, ProbabilityVector::uniform(2));
  if (word_to_string(A, cert.word) != "baaabaaab") o.fail("word " + word_to_string(A, cert.word));
  if (oracle::reset_length(A) != 9 || !verify_reset(A, cert.word)) o.fail("word does not reset");
  const std::vector<Rational> weights{Rational(3, 7), Rational(4, 7), Rational(5, 7), Rational(6, 7), Rational(1)};
  std::vector<Rational> got;
  for (const auto& s : trace.steps) got.push_back(s.weight);
  if (got != weights) o.fail("trace weights differ");
  if (Natural(trace.steps.size()) != trace.L - 2) o.fail("step count != L - 2");
  if (lcm_bound(4, 7) != 16 || cert.length() > 16) o.fail("length above 16");
}

void wielandt(Outcome& o) {
  const auto t0 = Clock::now();
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto M = wielandt_digraph(n);
    if (exponent(M) != (n - 1) * (n - 1) + 1) o.fail("exp wrong at n=" + std::to_string(n));
    if (weak_exponent(M) != n * n - 3 * n + 3) o.fail("wexp wrong at n=" + std::to_string(n));
  }
  const double t = seconds_since(t0);
  if (t >= kWielandtBudget) o.fail("took " + std::to_string(t) + " s");
}

void exponent_inequalities(Outcome& o) {
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; seed < kPrimitiveCases; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const auto M = random_primitive_digraph(n, 1000 + seed);
    const auto e = exponent(M);
    const auto w = weak_exponent(M);
    const bool ok = w <= e && e <= w + n - 1 && e <= (n - 1) * (n - 1) + 1 && w <= (n - 1) * (n - 1);
    if (!ok) ++violations;
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
}

void bridge(Outcome& o) {
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; seed < kBridgeCases; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const auto A = random_automaton(n, 2 + seed % 3, 2000 + seed, {true, true});
    if (weak_exponent(underlying_matrix(A)) > reset_length(A)) ++violations;
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
}

void eulerian(Outcome& o) {
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; seed < kEulerianCases; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const auto A = random_eulerian_automaton(n, 2 + seed % 2, 3000 + seed, true);
    const auto [cert, trace] = synthesize_reset_word(A, ProbabilityVector::uniform(A.letters()));
    const std::size_t bound = 1 + (n - 1) * (n - 2);
    bool ok = verify_reset(A, cert.word) && cert.length() <= bound && reset_length(A) <= bound;
    for (const auto& s : trace.steps) ok = ok && s.segment.size() <= n - 1;
    if (!ok) ++violations;
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
}

void balance(Outcome& o) {
  std::size_t checked = 0, nonzero = 0;
  for (std::uint64_t seed = 0; checked < kBalanceCases; ++seed) {
    Rng rng(4000 + seed);
    const std::size_t n = 2 + rng.below(9);
    const std::size_t k = 2 + rng.below(2);
    const auto A = random_automaton(n, k, 4000 + seed, {true, false});
    if (!is_primitive(underlying_matrix(A))) continue;
    RationalVector raw(k);
    Rational sum = 0;
    for (auto& x : raw) sum += (x = Rational(1 + static_cast<long>(rng.below(6))));
    for (auto& x : raw) x /= sum;
    const ProbabilityVector p(raw);
    StateSet K(n);
    while (K.empty() || K.is_full()) {
      K = StateSet(n);
      for (State q = 0; q < n; ++q) {
        if (rng.below(2)) K.insert(q);
      }
    }
    const auto alpha = oracle::steady_state(A, p.values());
    const Rational w = alpha_weight(K, alpha);
    RationalVector x(n);
    for (State q = 0; q < n; ++q) x[q] = (K.contains(q) ? Rational(1) : Rational(0)) - w;
    const std::size_t r = 1 + rng.below(3);
    if (verify_balance(A, p, x, r) != 0) ++nonzero;
    ++checked;
  }
  if (nonzero) o.fail(std::to_string(nonzero) + " nonzero sums");
}

void quasi_eulerian(Outcome& o) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto A = cerny(n);
    const auto w = find_quasi_eulerian_witness(A, 1);
    const std::string at = " at n=" + std::to_string(n);
    if (!w || w->c != 1) {
      o.fail("no c=1 witness" + at);
      continue;
    }
    const auto alpha = steady_state(transition_matrix(A, w->p)).alpha;
    const auto members = w->E.members();
    for (State q : members) {
      if (alpha[q] != alpha[members.front()]) o.fail("alpha not constant on E" + at);
    }
    const auto [cert, trace] = synthesize_reset_word(A, w->p);
    if (deficiency_bound(n, 1) != Natural(2 * n * (n - 1))) o.fail("deficiency_bound(n,1) != 2n(n-1)" + at);
    if (!verify_reset(A, cert.word) || Natural(cert.length()) > deficiency_bound(n, 1)) o.fail("length" + at);
  }
}

std::string run_command(const std::string& command, int& code) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void determinism(Outcome& o) {
  std::vector<Automaton> corpus{cerny(4), cerny(6)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    corpus.push_back(random_automaton(3 + seed % 6, 2 + seed % 2, 5000 + seed, {true, true}));
  }
  corpus.push_back(random_eulerian_automaton(7, 2, 5100, true));
  for (const auto& A : corpus) {
    AnalysisOptions opts;
    if (analyze(A, opts).dump(2) != analyze(A, opts).dump(2)) o.fail("library report differs between runs");
  }

  const std::string cli = SYNCHROLAB_CLI;
  const std::string gen = cli + " generate random 7 2 --seed 9 --strongly-connected --synchronizing";
  const std::vector<std::string> commands{
      cli + " generate cerny 5 | " + cli + " analyze --json --approx",
      gen + " | " + cli + " analyze --json --p 1/3,2/3",
      gen + " | " + cli + " reset-word --json --method exact",
      gen + " | " + cli + " reset-word --json --method greedy",
      gen + " | " + cli + " reset-word --json --method extension",
      gen + " | " + cli + " classify --json",
      gen + " | " + cli + " exponent --json",
      cli + " generate wielandt 6 | " + cli + " exponent --json",
      gen + " | " + cli + " steady-state --json --approx",
      gen + " | " + cli + " verify-bounds --json",
      cli + " generate eulerian 8 3 --seed 4 --synchronizing | " + cli + " analyze --json",
  };
  for (const auto& cmd : commands) {
    int c1 = 0, c2 = 0;
    const auto a = run_command(cmd, c1);
    const auto b = run_command(cmd, c2);
    if (c1 != 0 || c2 != 0) o.fail("nonzero exit from: " + cmd);
    else if (a.empty() || a != b) o.fail("output differs for: " + cmd);
  }
}

}  // namespace

int main() {
  criterion(1, "Cerny reset lengths (n-1)^2 for n = 2..10", cerny_lengths);
  criterion(2, "C4 steady state, L and c", c4_spectral);
  criterion(3, "C4 extension synthesis trace", c4_extension);
  criterion(4, "Wielandt exponents for n = 4..8", wielandt);
  criterion(5, "exponent inequalities on 500 primitive digraphs", exponent_inequalities);
  criterion(6, "wexp <= reset length on 200 synchronizing automata", bridge);
  criterion(7, "Eulerian extension bounds on 100 automata", eulerian);
  criterion(8, "balance sums vanish on 100 triples", balance);
  criterion(9, "quasi-Eulerian witnesses for Cerny n = 3..8", quasi_eulerian);
  criterion(10, "byte-identical JSON on re-runs", determinism);
  return failures == 0 ? 0 : 1;
}
