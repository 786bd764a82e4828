#include <gtest/gtest.h>

#include <set>

#include "hyperperm/factorization.hpp"
#include "hyperperm/hypergraph.hpp"
#include "hyperperm/latin.hpp"
#include "hyperperm/permanent.hpp"
#include "support/oracles.hpp"

using namespace hyperperm;

TEST(Latin, CountsMatchBruteForce) {
  for (unsigned n = 1; n <= 4; ++n) {
    EXPECT_EQ(count_latin_squares(n), oracle::latin_squares(n, false)) << n;
    EXPECT_EQ(count_latin_fixed_column(n), oracle::latin_squares(n, true)) << n;
  }
}

TEST(Latin, KnownCounts) {
  const std::vector<BigCount> l{1, 2, 12, 576, 161280};
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(count_latin_squares(n), l[n - 1]);
    EXPECT_EQ(count_latin_squares(n), factorial(n) * count_latin_fixed_column(n));
  }
  SearchOptions two;
  two.threads = 2;
  EXPECT_EQ(count_latin_squares(5, two), 161280);
}

TEST(Latin, EnumerationIsDistinctAndValid) {
  std::set<LatinSquare> seen;
  for_each_latin_square(4, [&](const LatinSquare& s) { EXPECT_TRUE(seen.insert(s).second); });
  EXPECT_EQ(seen.size(), 576U);
  std::size_t fixed = 0;
  for_each_latin_square(4, [&](const LatinSquare& s) {
    for (unsigned r = 0; r < 4; ++r) EXPECT_EQ(s.at(r, 0), r);
    ++fixed;
  }, true);
  EXPECT_EQ(fixed, 24U);
}

TEST(Latin, RejectsInvalidGrid) {
  EXPECT_THROW(LatinSquare(2, {0, 0, 1, 1}), ValidationError);
  EXPECT_THROW(LatinSquare(2, {0, 1, 0, 1}), ValidationError);
  EXPECT_THROW(LatinSquare(2, {0, 1, 1}), ValidationError);
  EXPECT_NO_THROW(LatinSquare(2, {0, 1, 1, 0}));
}

TEST(UTensor, PermanentEqualsFixedColumnCount) {
  const std::vector<BigCount> q{1, 2, 24, 1344};
  for (unsigned d = 2; d <= 5; ++d) {
    const auto u = build_U(d);
    EXPECT_EQ(u.size(), static_cast<std::size_t>(factorial(d)));
    EXPECT_EQ(permanent(u), q[d - 2]);
    EXPECT_EQ(permanent(u), count_latin_fixed_column(d));
    EXPECT_EQ(count_latin_squares(d), factorial(d) * permanent(u));
  }
  EXPECT_EQ(oracle::permanent(build_U(3)), 2);
  EXPECT_EQ(oracle::permanent(build_U(4)), 24);
}

TEST(UTensor, DiagonalsAreLatinSquares) {
  for (unsigned d = 2; d <= 4; ++d) {
    const auto u = build_U(d);
    std::vector<std::vector<Coord>> perms;
    std::vector<Coord> p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // every (d-1)-tuple of permutations, odometer style
    std::set<LatinSquare> from_diagonals;
    std::vector<std::size_t> pick(d - 1, 0);
    while (true) {
      std::vector<MultiIndex> entries(d, MultiIndex(d));
      for (unsigned i = 0; i < d; ++i) {
        entries[i][0] = i;
        for (unsigned k = 1; k < d; ++k) entries[i][k] = perms[pick[k - 1]][i];
      }
      Diagonal diag(d, d, entries);
      if (is_unit_diagonal(u, diag)) {
        const auto s = latin_square_from_diagonal(diag);
        for (unsigned r = 0; r < d; ++r) EXPECT_EQ(s.at(r, 0), r);
        from_diagonals.insert(s);
      }
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == perms.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
    std::set<LatinSquare> direct;
    for_each_latin_square(d, [&](const LatinSquare& s) { direct.insert(s); }, true);
    EXPECT_EQ(from_diagonals, direct);
  }
}

TEST(UTensor, IsAdjacencyOfSingleEdge) {
  for (unsigned d = 2; d <= 5; ++d) {
    std::vector<Vertex> e(d);
    std::iota(e.begin(), e.end(), 0);
    EXPECT_EQ(adjacency_tensor(Hypergraph(d, d, {e})), build_U(d));
  }
  EXPECT_THROW(build_U(1), ValidationError);
}

TEST(LatinLowerBound, Values) {
  EXPECT_EQ(latin_lower_bound(1), 1);
  EXPECT_EQ(latin_lower_bound(3), BigRational(46656, 19683));
  EXPECT_EQ(latin_lower_bound(4), BigRational(ipow(BigCount(24), 8), ipow(BigCount(4), 16)));
  for (unsigned n = 1; n <= 5; ++n) EXPECT_LE(latin_lower_bound(n), BigRational(count_latin_squares(n)));
}

TEST(LatinLowerBound, CompleteBipartiteColorings) {
  // proper d-colorings of K_{d,d} are latin squares
  for (unsigned d = 2; d <= 4; ++d) {
    std::vector<std::pair<Vertex, Vertex>> adj;
    for (Vertex x = 0; x < d; ++x) {
      for (Vertex y = 0; y < d; ++y) adj.emplace_back(x, y);
    }
    EXPECT_EQ(count_proper_edge_colorings(BipartiteGraph(d, d, adj)), count_latin_squares(d));
  }
}
