#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "synchrolab/errors.hpp"
#include "synchrolab/state_set.hpp"

namespace synchrolab {

using Letter = std::uint32_t;

/// Letters are applied left to right: q.(uv) = (q.u).v.
using Word = std::vector<Letter>;

/// Default ceiling on n for operations that walk the subset lattice.
inline constexpr std::size_t kDefaultSubsetCap = 24;
/// Hard ceiling: subset search encodes sets in one 64-bit word.
inline constexpr std::size_t kMaxSubsetCap = 63;

inline void require_subset_cap(std::size_t n, std::size_t cap, std::string_view what) {
  if (cap > kMaxSubsetCap) {
    throw ResourceError("subset cap " + std::to_string(cap) + " exceeds hard limit " +
                        std::to_string(kMaxSubsetCap));
  }
  if (n > cap) {
    throw ResourceError(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds subset cap " + std::to_string(cap));
  }
}

/// Complete deterministic automaton. States are 0-based internally; every
/// external format is 1-based.
class Automaton {
 public:
  /// `delta[a][q]` is the state q.a.
  Automaton(std::size_t n, std::vector<std::vector<State>> delta,
            std::vector<std::string> letter_names = {})
      : n_(n), delta_(std::move(delta)), names_(std::move(letter_names)) {
    if (n_ == 0) throw InputError("automaton needs at least one state");
    if (delta_.empty()) throw InputError("automaton needs at least one letter");
    for (const auto& row : delta_) {
      if (row.size() != n_) throw InputError("transition row length differs from state count");
      for (State q : row) {
        if (q >= n_) throw InputError("transition target out of range");
      }
    }
    if (names_.empty()) names_ = default_letter_names(delta_.size());
    if (names_.size() != delta_.size()) throw InputError("letter name count differs from letter count");
    std::set<std::string> seen;
    for (const auto& name : names_) {
      if (name.empty()) throw InputError("empty letter name");
      if (!seen.insert(name).second) throw InputError("duplicate letter name '" + name + "'");
    }
  }

  std::size_t states() const { return n_; }
  std::size_t letters() const { return delta_.size(); }
  const std::vector<std::string>& letter_names() const { return names_; }
  const std::vector<State>& letter_map(Letter a) const { return delta_.at(a); }

  State step(State q, Letter a) const {
    if (a >= delta_.size()) throw InputError("letter index out of range");
    if (q >= n_) throw InputError("state index out of range");
    return delta_[a][q];
  }

  friend bool operator==(const Automaton&, const Automaton&) = default;

  static std::vector<std::string> default_letter_names(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) {
      out.push_back(k <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<State>> delta_;
  std::vector<std::string> names_;
};

inline void check_word(const Automaton& A, const Word& w) {
  for (Letter a : w) {
    if (a >= A.letters()) throw InputError("letter index out of range");
  }
}

inline State apply_word(const Automaton& A, State q, const Word& w) {
  if (q >= A.states()) throw InputError("state index out of range");
  check_word(A, w);
  for (Letter a : w) q = A.letter_map(a)[q];
  return q;
}

/// K.w = {q.w | q in K}.
inline StateSet image(const Automaton& A, const StateSet& K, const Word& w) {
  if (K.ambient() != A.states()) throw InputError("state set size differs from automaton");
  check_word(A, w);
  StateSet out(A.states());
  for (State q : K.members()) {
    for (Letter a : w) q = A.letter_map(a)[q];
    out.insert(q);
  }
  return out;
}

/// K.w^{-1} = {q | q.w in K}.
inline StateSet preimage(const Automaton& A, const StateSet& K, const Word& w) {
  if (K.ambient() != A.states()) throw InputError("state set size differs from automaton");
  check_word(A, w);
  StateSet out(A.states());
  for (State q = 0; q < A.states(); ++q) {
    State r = q;
    for (Letter a : w) r = A.letter_map(a)[r];
    if (K.contains(r)) out.insert(q);
  }
  return out;
}

/// Rendering of a word using the automaton's letter names. Single-character
/// names are concatenated, longer names are space separated.
inline std::string word_to_string(const Automaton& A, const Word& w) {
  bool compact = true;
  for (const auto& name : A.letter_names()) compact = compact && name.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += A.letter_names().at(w[i]);
  }
  return out;
}

/// Inverse of word_to_string.
inline Word word_from_string(const Automaton& A, std::string_view text) {
  const auto& names = A.letter_names();
  auto lookup = [&](std::string_view tok) -> Letter {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == tok) return static_cast<Letter>(i);
    }
    throw InputError("unknown letter '" + std::string(tok) + "'");
  };
  Word w;
  if (text.find(' ') == std::string_view::npos) {
    bool compact = true;
    for (const auto& name : names) compact = compact && name.size() == 1;
    if (compact) {
      for (char c : text) w.push_back(lookup(std::string_view(&c, 1)));
      return w;
    }
    if (!text.empty()) w.push_back(lookup(text));
    return w;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    if (end > pos) w.push_back(lookup(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  return w;
}

inline bool is_strongly_connected(const Automaton& A) {
  const std::size_t n = A.states();
  auto reaches_all = [&](bool reverse) {
    std::vector<std::vector<State>> adj(n);
    for (Letter a = 0; a < A.letters(); ++a) {
      for (State q = 0; q < n; ++q) {
        State r = A.letter_map(a)[q];
        if (reverse) adj[r].push_back(q); else adj[q].push_back(r);
      }
    }
    std::vector<char> seen(n, 0);
    std::vector<State> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      for (State r : adj[q]) {
        if (!seen[r]) {
          seen[r] = 1;
          ++count;
          stack.push_back(r);
        }
      }
    }
    return count == n;
  };
  return reaches_all(false) && reaches_all(true);
}

namespace detail {

/// Shortest merging words for every unordered pair of states, found by a
/// backward breadth-first search over pairs starting from the diagonal.
class PairMergeTable {
 public:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  explicit PairMergeTable(const Automaton& A) : A_(&A), n_(A.states()) {
    const std::size_t k = A.letters();
    dist_.assign(n_ * n_, kUnreachable);
    first_.assign(n_ * n_, 0);
    // pred[a] as CSR: states q' with q'.a = q
    std::vector<std::vector<std::size_t>> start(k, std::vector<std::size_t>(n_ + 1, 0));
    std::vector<std::vector<State>> pred(k, std::vector<State>(n_));
    for (Letter a = 0; a < k; ++a) {
      for (State q = 0; q < n_; ++q) ++start[a][A.letter_map(a)[q] + 1];
      for (std::size_t i = 0; i < n_; ++i) start[a][i + 1] += start[a][i];
      auto fill = start[a];
      for (State q = 0; q < n_; ++q) pred[a][fill[A.letter_map(a)[q]]++] = q;
    }
    std::queue<std::pair<State, State>> queue;
    for (State q = 0; q < n_; ++q) {
      dist_[idx(q, q)] = 0;
      queue.emplace(q, q);
    }
    while (!queue.empty()) {
      auto [p, q] = queue.front();
      queue.pop();
      const auto d = dist_[idx(p, q)];
      for (Letter a = 0; a < k; ++a) {
        for (auto i = start[a][p]; i < start[a][p + 1]; ++i) {
          for (auto j = start[a][q]; j < start[a][q + 1]; ++j) {
            State pp = pred[a][i], qq = pred[a][j];
            if (pp == qq || dist_[idx(pp, qq)] != kUnreachable) continue;
            dist_[idx(pp, qq)] = dist_[idx(qq, pp)] = d + 1;
            first_[idx(pp, qq)] = first_[idx(qq, pp)] = a;
            queue.emplace(pp, qq);
          }
        }
      }
    }
  }

  std::uint32_t distance(State p, State q) const { return dist_[idx(p, q)]; }

  bool all_mergeable() const {
    for (auto d : dist_) {
      if (d == kUnreachable) return false;
    }
    return true;
  }

  Word merging_word(State p, State q) const {
    Word w;
    while (p != q) {
      Letter a = first_[idx(p, q)];
      w.push_back(a);
      p = A_->letter_map(a)[p];
      q = A_->letter_map(a)[q];
    }
    return w;
  }

 private:
  std::size_t idx(State p, State q) const { return static_cast<std::size_t>(p) * n_ + q; }

  const Automaton* A_;
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
  std::vector<Letter> first_;
};

}  // namespace detail

/// A reset word exists iff every pair of states can be merged.
inline bool is_synchronizing(const Automaton& A) {
  return detail::PairMergeTable(A).all_mergeable();
}

}  // namespace synchrolab
