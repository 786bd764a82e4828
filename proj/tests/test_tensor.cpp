#include <gtest/gtest.h>

#include <random>

#include "hyperperm/generators.hpp"
#include "hyperperm/tensor.hpp"
#include "support/oracles.hpp"

using namespace hyperperm;

TEST(Tensor, FullTwoByTwo) {
  auto t = make_tensor(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EXPECT_EQ(t.size(), 4U);
  EXPECT_EQ(t, full_tensor(2, 2));
}

TEST(Tensor, EmptyAndDuplicates) {
  auto t = make_tensor(3, 2, {});
  EXPECT_EQ(t.size(), 0U);
  EXPECT_EQ(t.hyperplane_ones(0, 0), 0U);
  auto u = make_tensor(2, 2, {{0, 1}, {0, 1}});
  EXPECT_EQ(u.size(), 1U);
}

TEST(Tensor, RejectsBadIndices) {
  try {
    make_tensor(3, 3, {{0, 1, 3}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(0,1,3)"), std::string::npos);
  }
  EXPECT_THROW(make_tensor(3, 3, {{0, 1}}), ValidationError);
  EXPECT_THROW(make_tensor(1, 3, {}), ValidationError);
  EXPECT_THROW(make_tensor(2, 0, {}), ValidationError);
}

TEST(Tensor, HyperplaneCounts) {
  auto t = full_tensor(3, 2);
  for (unsigned axis = 0; axis < 3; ++axis) {
    for (Coord i = 0; i < 2; ++i) EXPECT_EQ(t.hyperplane_ones(axis, i), 4U);
  }
  EXPECT_THROW(t.hyperplane_ones(3, 0), ValidationError);
}

TEST(Tensor, DiagonalExamples) {
  std::vector<MultiIndex> id{{0, 0}, {1, 1}};
  std::vector<MultiIndex> shared{{0, 0}, {1, 0}};
  std::vector<MultiIndex> cyc{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  EXPECT_TRUE(is_diagonal(2, 2, id));
  EXPECT_FALSE(is_diagonal(2, 2, shared));
  EXPECT_TRUE(is_diagonal(3, 3, cyc));
  EXPECT_THROW(Diagonal(2, 2, shared), ValidationError);
}

TEST(Tensor, HyperplaneSumsEqualOnes) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned d = 2 + trial % 3;
    const unsigned n = 1 + trial % 4;
    auto t = random_tensor(d, n, 0.4, rng);
    for (unsigned axis = 0; axis < d; ++axis) {
      std::uint64_t s = 0;
      for (Coord i = 0; i < n; ++i) s += t.hyperplane_ones(axis, i);
      EXPECT_EQ(s, t.size());
    }
  }
}

TEST(Tensor, DiagonalCharacterizationsAgree) {
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned d = 2 + trial % 3;
    const unsigned n = 1 + trial % 4;
    std::vector<MultiIndex> entries(n, MultiIndex(d));
    // half the time a genuine diagonal, half the time noise
    if (trial % 2 == 0) {
      for (unsigned k = 0; k < d; ++k) {
        std::vector<Coord> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        for (unsigned i = 0; i < n; ++i) entries[i][k] = p[i];
      }
    } else {
      for (auto& e : entries) {
        for (auto& c : e) c = static_cast<Coord>(rng() % n);
      }
    }
    EXPECT_EQ(is_diagonal(d, n, entries), oracle::is_diagonal(d, n, entries));
  }
}

TEST(Tensor, CanonicalDiagonalForm) {
  Diagonal diag(3, 3, {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
  for (unsigned i = 0; i < 3; ++i) EXPECT_EQ(diag.entries()[i][0], i);
  EXPECT_EQ(diag.permutation(1), (std::vector<Coord>{1, 2, 0}));
}

TEST(Tensor, PermuteAxesAndRelabel) {
  auto t = make_tensor(3, 3, {{0, 1, 2}});
  std::vector<unsigned> axes{2, 0, 1};
  auto p = permute_axes(t, axes);
  EXPECT_TRUE(p.contains(MultiIndex{2, 0, 1}));
  std::vector<Coord> map{1, 2, 0};
  auto r = relabel(t, map);
  EXPECT_TRUE(r.contains(MultiIndex{1, 2, 0}));
}
