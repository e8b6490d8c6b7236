#include <gtest/gtest.h>

#include "oracles.hpp"
#include "synchrolab/synchrolab.hpp"

using namespace synchrolab;

TEST(ShortestResetWord, CernyFour) {
  const auto A = cerny(4);
  const auto cert = shortest_reset_word(A);
  EXPECT_EQ(word_to_string(A, cert.word), "baaabaaab");
  EXPECT_EQ(cert.length(), 9U);
  EXPECT_EQ(cert.sink, 0U);
}

TEST(ShortestResetWord, CernyThree) {
  const auto A = cerny(3);
  const auto cert = shortest_reset_word(A);
  EXPECT_EQ(cert.length(), 4U);
  EXPECT_EQ(word_to_string(A, cert.word), "baab");
  EXPECT_TRUE(verify_reset(A, cert.word));
}

TEST(ShortestResetWord, SingleState) {
  const Automaton A(1, {{0}, {0}});
  EXPECT_TRUE(shortest_reset_word(A).word.empty());
  EXPECT_EQ(reset_length(A), 0U);
}

TEST(ShortestResetWord, Errors) {
  EXPECT_THROW(shortest_reset_word(Automaton(3, {{1, 2, 0}})), DomainError);
  EXPECT_THROW(shortest_reset_word(cerny(30)), ResourceError);
  EXPECT_THROW(shortest_reset_word(cerny(5), 4), ResourceError);
  EXPECT_THROW(shortest_reset_word(cerny(5), 64), ResourceError);
}

TEST(ResetLength, CernySeries) {
  EXPECT_EQ(reset_length(cerny(4)), 9U);
  EXPECT_EQ(reset_length(cerny(5)), 16U);
  for (std::size_t n = 2; n <= 10; ++n) EXPECT_EQ(reset_length(cerny(n)), (n - 1) * (n - 1));
}

TEST(ShortestResetWord, LexicographicTieBreak) {
  // both letters are constant maps; "a" must win
  const Automaton A(3, {{0, 0, 0}, {1, 1, 1}});
  EXPECT_EQ(shortest_reset_word(A).word, (Word{0}));
}

TEST(ShortestResetWord, MatchesNaiveOracle) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t n = 2 + seed % 9, k = 2 + seed % 2;
    const auto A = random_automaton(n, k, seed * 7919);
    const auto expected = oracle::reset_length(A);
    if (!expected) continue;
    const auto cert = shortest_reset_word(A);
    ASSERT_EQ(static_cast<int>(cert.length()), *expected) << "seed " << seed;
    ASSERT_TRUE(verify_reset(A, cert.word));
    // lexicographically smallest among words of that length
    const auto t = oracle::table_of(A);
    if (cert.length() <= 6) {
      for (const auto& w : oracle::words_of_length(static_cast<int>(k), static_cast<int>(cert.length()))) {
        std::set<int> img;
        for (int q = 0; q < static_cast<int>(n); ++q) img.insert(oracle::run(t, q, w));
        if (img.size() == 1) {
          EXPECT_EQ(Word(w.begin(), w.end()), cert.word) << "seed " << seed;
          break;
        }
      }
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(GreedyCompress, Examples) {
  const auto A = cerny(4);
  const auto g = greedy_compress(A);
  EXPECT_TRUE(verify_reset(A, g.word));
  EXPECT_GE(g.length(), 9U);
  EXPECT_TRUE(greedy_compress(Automaton(1, {{0}})).word.empty());
  // letter b has rank 1, a merges only one pair
  const Automaton R(3, {{0, 0, 2}, {1, 1, 1}});
  EXPECT_EQ(greedy_compress(R).word, (Word{1}));
  EXPECT_THROW(greedy_compress(Automaton(3, {{1, 2, 0}})), DomainError);
}

TEST(GreedyCompress, NeverShorterThanExact) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto A = random_automaton(2 + seed % 10, 2, seed, {true, true});
    const auto g = greedy_compress(A);
    EXPECT_TRUE(verify_reset(A, g.word));
    EXPECT_GE(g.length(), reset_length(A));
  }
}
