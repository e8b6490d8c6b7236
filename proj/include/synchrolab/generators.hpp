#pragma once

#include <cstdint>
#include <numeric>
#include <random>

#include "synchrolab/automaton.hpp"
#include "synchrolab/digraph_exponents.hpp"

namespace synchrolab {

/// Cerny automaton C_n: a cycles i -> i + 1 (n -> 1); b fixes every state
/// except n, which it sends to 1. Reset length (n - 1)^2.
inline Automaton cerny(std::size_t n) {
  if (n < 2) throw InputError("cerny(n) needs n >= 2");
  std::vector<State> a(n), b(n);
  for (State q = 0; q < n; ++q) {
    a[q] = static_cast<State>((q + 1) % n);
    b[q] = q + 1 == n ? 0 : q;
  }
  return Automaton(n, {a, b}, {"a", "b"});
}

/// n-cycle 1 -> 2 -> ... -> n -> 1 plus the chord n -> 2.
inline AdjacencyMatrix wielandt_digraph(std::size_t n) {
  if (n < 3) throw InputError("wielandt_digraph(n) needs n >= 3");
  AdjacencyMatrix M(n);
  for (std::size_t j = 0; j < n; ++j) M((j + 1) % n, j) = 1;
  M(1, n - 1) = 1;
  return M;
}

/// Reproducible randomness. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; bounded draws and shuffles are
/// implemented here rather than with std::uniform_int_distribution or
/// std::shuffle, whose algorithms vary between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), by rejection of the biased low range.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InputError("Rng::below needs a positive bound");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  /// Fisher-Yates, from the back.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomOptions {
  bool strongly_connected = false;
  bool synchronizing = false;
};

/// Each q.a drawn uniformly; the whole table is redrawn from the same stream
/// until the requested filters hold.
inline Automaton random_automaton(std::size_t n, std::size_t k, std::uint64_t seed,
                                  RandomOptions opts = {}) {
  if (n == 0 || k == 0) throw InputError("random_automaton needs n >= 1 and k >= 1");
  if (opts.strongly_connected && opts.synchronizing && n > 1 && k == 1) {
    throw DomainError("a strongly connected one-letter automaton is a permutation");
  }
  Rng rng(seed);
  while (true) {
    std::vector<std::vector<State>> delta(k, std::vector<State>(n));
    for (auto& row : delta) {
      for (auto& q : row) q = static_cast<State>(rng.below(n));
    }
    Automaton A(n, std::move(delta));
    if (opts.strongly_connected && !is_strongly_connected(A)) continue;
    if (opts.synchronizing && !is_synchronizing(A)) continue;
    return A;
  }
}

/// k-in/k-out digraph from a uniform matching of out-stubs to in-stubs, with
/// each state's k out-edges dealt to the letters by a random permutation.
/// Redrawn until strongly connected (and synchronizing, if requested).
inline Automaton random_eulerian_automaton(std::size_t n, std::size_t k, std::uint64_t seed,
                                           bool synchronizing = false) {
  if (n == 0 || k < 2) throw InputError("random_eulerian_automaton needs n >= 1 and k >= 2");
  Rng rng(seed);
  std::vector<State> in_stubs(n * k);
  for (std::size_t i = 0; i < in_stubs.size(); ++i) in_stubs[i] = static_cast<State>(i / k);
  while (true) {
    auto targets = in_stubs;
    rng.shuffle(targets);
    std::vector<std::vector<State>> delta(k, std::vector<State>(n));
    std::vector<Letter> letters(k);
    for (State q = 0; q < n; ++q) {
      std::iota(letters.begin(), letters.end(), Letter{0});
      rng.shuffle(letters);
      for (std::size_t i = 0; i < k; ++i) delta[letters[i]][q] = targets[q * k + i];
    }
    Automaton A(n, std::move(delta));
    if (!is_strongly_connected(A)) continue;
    if (synchronizing && !is_synchronizing(A)) continue;
    return A;
  }
}

/// Sparse random primitive digraph: a random Hamiltonian cycle plus between
/// 1 and n random extra edges, redrawn until primitive. Sparse graphs keep
/// exponents spread over the whole range up to the Wielandt value.
inline AdjacencyMatrix random_primitive_digraph(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("random_primitive_digraph needs n >= 1");
  Rng rng(seed);
  while (true) {
    AdjacencyMatrix M(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    for (std::size_t i = 0; i < n; ++i) M(order[(i + 1) % n], order[i]) = 1;
    const auto extra = 1 + rng.below(n);
    for (std::uint64_t e = 0; e < extra; ++e) {
      const auto from = rng.below(n);
      const auto to = rng.below(n);
      M(to, from) = 1;
    }
    if (is_primitive(M)) return M;
  }
}

}  // namespace synchrolab
