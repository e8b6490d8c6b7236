#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "synchrolab/automaton.hpp"

namespace synchrolab {

struct ResetCertificate {
  Word word;
  State sink = 0;
  std::size_t length() const { return word.size(); }
};

/// True iff every state is sent to one state by `w`.
inline bool verify_reset(const Automaton& A, const Word& w) {
  return image(A, StateSet::full(A.states()), w).size() == 1;
}

namespace detail {

inline std::uint64_t image_mask(const Automaton& A, std::uint64_t mask, Letter a) {
  const auto& map = A.letter_map(a);
  std::uint64_t out = 0;
  while (mask != 0) {
    out |= std::uint64_t{1} << map[static_cast<std::size_t>(std::countr_zero(mask))];
    mask &= mask - 1;
  }
  return out;
}

inline ResetCertificate make_certificate(const Automaton& A, Word w) {
  ResetCertificate cert;
  cert.sink = apply_word(A, 0, w);
  cert.word = std::move(w);
  return cert;
}

}  // namespace detail

/// Shortest reset word by breadth-first search over images of Q. Letters are
/// expanded in input order, so the first singleton reached carries the
/// lexicographically smallest word among the shortest ones.
inline ResetCertificate shortest_reset_word(const Automaton& A,
                                            std::size_t cap = kDefaultSubsetCap) {
  const std::size_t n = A.states();
  if (n == 1) return {};
  require_subset_cap(n, cap, "shortest_reset_word");
  if (!is_synchronizing(A)) throw DomainError("automaton is not synchronizing");

  struct Parent {
    std::uint64_t from;
    Letter letter;
  };
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::unordered_map<std::uint64_t, Parent> parent;
  parent.emplace(full, Parent{full, 0});
  std::deque<std::uint64_t> frontier{full};
  std::uint64_t found = 0;
  while (!frontier.empty() && found == 0) {
    const auto cur = frontier.front();
    frontier.pop_front();
    for (Letter a = 0; a < A.letters(); ++a) {
      const auto next = detail::image_mask(A, cur, a);
      if (!parent.emplace(next, Parent{cur, a}).second) continue;
      if (std::has_single_bit(next)) {
        found = next;
        break;
      }
      frontier.push_back(next);
    }
  }
  Word w;
  for (auto cur = found; cur != full; cur = parent.at(cur).from) w.push_back(parent.at(cur).letter);
  std::reverse(w.begin(), w.end());
  return detail::make_certificate(A, std::move(w));
}

inline std::size_t reset_length(const Automaton& A, std::size_t cap = kDefaultSubsetCap) {
  return shortest_reset_word(A, cap).length();
}

/// Pair-merging baseline. While the current image has two or more states,
/// append the shortest merging word of the closest pair in it; among pairs at
/// the same distance, take the one whose word leaves the smallest image.
inline ResetCertificate greedy_compress(const Automaton& A) {
  const std::size_t n = A.states();
  if (n == 1) return {};
  detail::PairMergeTable table(A);
  if (!table.all_mergeable()) throw DomainError("automaton is not synchronizing");

  StateSet current = StateSet::full(n);
  Word w;
  while (current.size() > 1) {
    const auto members = current.members();
    std::uint32_t best_dist = detail::PairMergeTable::kUnreachable;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        best_dist = std::min(best_dist, table.distance(members[i], members[j]));
      }
    }
    Word best_word;
    std::size_t best_size = n + 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (table.distance(members[i], members[j]) != best_dist) continue;
        Word u = table.merging_word(members[i], members[j]);
        const auto size = image(A, current, u).size();
        if (size < best_size) {
          best_size = size;
          best_word = std::move(u);
        }
      }
    }
    current = image(A, current, best_word);
    w.insert(w.end(), best_word.begin(), best_word.end());
  }
  return detail::make_certificate(A, std::move(w));
}

}  // namespace synchrolab
