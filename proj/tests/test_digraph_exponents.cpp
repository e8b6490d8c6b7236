#include <gtest/gtest.h>

#include "oracles.hpp"
#include "synchrolab/synchrolab.hpp"

using namespace synchrolab;

namespace {

oracle::IntMatrix to_int(const AdjacencyMatrix& M) {
  oracle::IntMatrix out(M.size(), std::vector<long>(M.size()));
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j) out[i][j] = M(i, j);
  return out;
}

AdjacencyMatrix ones(std::size_t n) {
  AdjacencyMatrix M(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M(i, j) = 1;
  return M;
}

}  // namespace

TEST(UnderlyingMatrix, CernyFour) {
  const auto M = underlying_matrix(cerny(4));
  EXPECT_EQ(M(0, 3), 2U);  // (1,4): both letters send 4 to 1
  EXPECT_EQ(M(1, 0), 1U);  // (2,1)
  EXPECT_EQ(M(0, 0), 1U);  // (1,1)
  for (std::size_t j = 0; j < 4; ++j) {
    std::uint32_t col = 0;
    for (std::size_t i = 0; i < 4; ++i) col += M(i, j);
    EXPECT_EQ(col, 2U);
  }
}

TEST(UnderlyingMatrix, IdentityLetter) {
  const auto M = underlying_matrix(Automaton(3, {{0, 1, 2}}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(M(i, j), i == j ? 1U : 0U);
}

TEST(Primitivity, Examples) {
  EXPECT_TRUE(is_primitive(wielandt_digraph(4)));
  EXPECT_FALSE(is_primitive(underlying_matrix(Automaton(5, {{1, 2, 3, 4, 0}}))));
  EXPECT_TRUE(is_primitive(ones(2)));
  EXPECT_FALSE(is_primitive(AdjacencyMatrix(1)));
}

TEST(Exponent, Examples) {
  EXPECT_EQ(exponent(wielandt_digraph(4)), 10U);
  EXPECT_EQ(exponent(underlying_matrix(cerny(4))), 4U);
  EXPECT_EQ(exponent(ones(2)), 1U);
  EXPECT_THROW(exponent(underlying_matrix(Automaton(3, {{1, 2, 0}}))), DomainError);
}

TEST(WeakExponent, Examples) {
  EXPECT_EQ(weak_exponent(wielandt_digraph(4)), 7U);
  EXPECT_EQ(weak_exponent(underlying_matrix(cerny(4))), 3U);
  EXPECT_EQ(weak_exponent(ones(2)), 1U);
  EXPECT_THROW(weak_exponent(underlying_matrix(Automaton(3, {{1, 2, 0}}))), DomainError);
}

TEST(Exponent, DependsOnlyOnSupport) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto M = random_primitive_digraph(2 + seed % 9, seed);
    const auto e = exponent(M), w = weak_exponent(M);
    for (std::size_t i = 0; i < M.size(); ++i)
      for (std::size_t j = 0; j < M.size(); ++j)
        if (M(i, j) > 0) M(i, j) = static_cast<std::uint32_t>(1 + (i * 7 + j) % 5);
    EXPECT_EQ(exponent(M), e);
    EXPECT_EQ(weak_exponent(M), w);
  }
}

TEST(Exponent, MatchesIntegerPowerOracle) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto M = random_primitive_digraph(1 + seed % 10, seed);
    const auto expected = oracle::exponents(to_int(M));
    ASSERT_TRUE(expected);
    EXPECT_EQ(static_cast<int>(exponent(M)), expected->first) << "seed " << seed;
    EXPECT_EQ(static_cast<int>(weak_exponent(M)), expected->second) << "seed " << seed;
  }
}

TEST(Exponent, InequalitiesAndLoopBound) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const auto M = random_primitive_digraph(n, seed * 31);
    const auto e = exponent(M), w = weak_exponent(M);
    EXPECT_LE(w, e);
    EXPECT_LE(e, w + n - 1);
    EXPECT_LE(e, (n - 1) * (n - 1) + 1);
    EXPECT_LE(w, std::max<std::size_t>((n - 1) * (n - 1), 1));
    bool loop = false;
    for (std::size_t i = 0; i < n; ++i) loop = loop || M(i, i) > 0;
    if (loop) {
      EXPECT_LE(w, std::max<std::size_t>(n - 1, 1)) << "seed " << seed;
    }
  }
}

TEST(Exponent, WeakExponentBelowResetLength) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const auto A = random_automaton(2 + seed % 11, 2, seed, {true, true});
    EXPECT_LE(weak_exponent(underlying_matrix(A)), reset_length(A)) << "seed " << seed;
  }
}
