#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "synchrolab/errors.hpp"

namespace synchrolab {

using State = std::uint32_t;

/// Subset of {0..n-1}, stored as a fixed-width bitset with one 64-bit word
/// per 64 states. The ambient size n is part of the value.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  StateSet(std::size_t n, std::initializer_list<State> members) : StateSet(n) {
    for (State q : members) insert(q);
  }

  static StateSet full(std::size_t n) {
    StateSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.insert(static_cast<State>(i));
    return s;
  }

  static StateSet from_mask(std::size_t n, std::uint64_t mask) {
    StateSet s(n);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  std::size_t ambient() const { return n_; }

  bool contains(State q) const {
    return q < n_ && ((words_[q / 64] >> (q % 64)) & 1U) != 0;
  }

  void insert(State q) {
    check(q);
    words_[q / 64] |= std::uint64_t{1} << (q % 64);
  }

  void erase(State q) {
    check(q);
    words_[q / 64] &= ~(std::uint64_t{1} << (q % 64));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool is_full() const { return size() == n_; }

  /// Members in increasing order.
  std::vector<State> members() const {
    std::vector<State> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      auto w = words_[wi];
      while (w != 0) {
        out.push_back(static_cast<State>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Characteristic 0-1 vector [T].
  std::vector<int> characteristic() const {
    std::vector<int> v(n_, 0);
    for (State q : members()) v[q] = 1;
    return v;
  }

  /// Bit-encoded form; only valid for n <= 64.
  std::uint64_t to_mask() const {
    if (n_ > 64) throw ResourceError("StateSet::to_mask requires n <= 64");
    return words_.empty() ? 0 : words_[0];
  }

  friend bool operator==(const StateSet&, const StateSet&) = default;

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(n_);
    for (auto w : words_) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  void check(State q) const {
    if (q >= n_) throw InputError("state index out of range");
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace synchrolab

template <>
struct std::hash<synchrolab::StateSet> {
  std::size_t operator()(const synchrolab::StateSet& s) const { return s.hash(); }
};
