#include <gtest/gtest.h>

#include "hyperperm/generators.hpp"
#include "hyperperm/hypergraph.hpp"
#include "hyperperm/latin.hpp"

using namespace hyperperm;

namespace {

Hypergraph triple_edge() { return Hypergraph(3, 3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}); }

}  // namespace

TEST(Hypergraph, ValidatesEdges) {
  EXPECT_THROW(Hypergraph(3, 2, {{0, 0}}), ValidationError);
  EXPECT_THROW(Hypergraph(3, 2, {{0, 3}}), ValidationError);
  EXPECT_THROW(Hypergraph(3, 2, {{0, 1, 2}}), ValidationError);
  Hypergraph g(4, 2, {{3, 1}, {0, 2}});
  EXPECT_EQ(g.edges().front(), (Edge{0, 2}));
  EXPECT_EQ(g.edges().back(), (Edge{1, 3}));
}

TEST(Hypergraph, AdjacencyTensorExamples) {
  auto t = adjacency_tensor(Hypergraph(2, 2, {{0, 1}}));
  EXPECT_EQ(t.ones(), (std::vector<MultiIndex>{{0, 1}, {1, 0}}));
  EXPECT_EQ(adjacency_tensor(Hypergraph(3, 3, {{0, 1, 2}})), build_U(3));
  EXPECT_EQ(adjacency_tensor(complete_hypergraph(6, 3)).size(), 120U);
  EXPECT_THROW(adjacency_tensor(triple_edge()), ValidationError);
}

TEST(Hypergraph, IncidenceMatrix) {
  auto m = incidence_matrix(Hypergraph(3, 2, {{0, 1}}));
  ASSERT_EQ(m.size(), 3U);
  EXPECT_EQ(m[0][0], 1);
  EXPECT_EQ(m[1][0], 1);
  EXPECT_EQ(m[2][0], 0);
  auto tri = incidence_matrix(triple_edge());
  for (const auto& row : tri) EXPECT_EQ(row, (std::vector<std::uint8_t>{1, 1, 1}));
  auto k3 = incidence_matrix(complete_hypergraph(3, 2));
  for (std::size_t j = 0; j < 3; ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < 3; ++i) ones += k3[i][j];
    EXPECT_EQ(ones, 2);
  }
}

TEST(Hypergraph, BipartiteRepresentation) {
  auto b = bipartite_representation(triple_edge());
  EXPECT_EQ(b.left_size(), 3U);
  EXPECT_EQ(b.right_size(), 3U);
  EXPECT_EQ(b.edges().size(), 9U);  // K_{3,3}
  EXPECT_EQ(b.regular_degree(), 3U);
  auto path = bipartite_representation(Hypergraph(2, 2, {{0, 1}}));
  EXPECT_EQ(path.right_size(), 1U);
  EXPECT_TRUE(path.is_connected());
  // biadjacency equals incidence
  auto g = complete_hypergraph(5, 3);
  auto inc = incidence_matrix(g);
  auto bg = bipartite_representation(g);
  for (Vertex x = 0; x < 5; ++x) {
    for (Vertex y = 0; y < bg.right_size(); ++y) {
      const auto& nb = bg.left_neighbors(x);
      const bool adj = std::find(nb.begin(), nb.end(), y) != nb.end();
      EXPECT_EQ(adj, inc[x][y] == 1);
    }
  }
  EXPECT_EQ(bg.as_hypergraph(3), g);
}

TEST(Hypergraph, Connectivity) {
  EXPECT_TRUE(is_connected(Hypergraph(3, 3, {{0, 1, 2}})));
  EXPECT_FALSE(is_connected(Hypergraph(4, 2, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(complete_hypergraph(6, 3)));
  EXPECT_FALSE(is_connected(Hypergraph(3, 2, {{0, 1}})));
}

TEST(Hypergraph, ConnectedImpliesConnectedRepresentation) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_hypergraph(6, 2 + trial % 3, 0.3, rng);
    if (g.edge_count() > 0 && is_connected(g)) EXPECT_TRUE(bipartite_representation(g).is_connected());
  }
}

TEST(Hypergraph, Degrees) {
  EXPECT_EQ(degrees(triple_edge()), (std::vector<std::uint64_t>{3, 3, 3}));
  for (auto r : degrees(complete_hypergraph(6, 3))) EXPECT_EQ(r, 10U);
  EXPECT_EQ(degrees(Hypergraph(4, 2, {})), (std::vector<std::uint64_t>{0, 0, 0, 0}));
}

TEST(Hypergraph, DegreeSumAndHyperplaneCounts) {
  Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned d = 2 + trial % 3;
    auto g = random_hypergraph(7, d, 0.4, rng);
    std::uint64_t sum = 0;
    for (auto r : degrees(g)) sum += r;
    EXPECT_EQ(sum, d * g.edge_count());
    if (g.edge_count() == 0) continue;
    auto t = adjacency_tensor(g);
    const auto deg = degrees(g);
    const auto fact = static_cast<std::uint64_t>(factorial(d - 1));
    for (unsigned axis = 0; axis < d; ++axis) {
      for (Vertex v = 0; v < 7; ++v) EXPECT_EQ(t.hyperplane_ones(axis, v), deg[v] * fact);
    }
    // symmetric under every axis permutation
    std::vector<unsigned> axes(d);
    std::iota(axes.begin(), axes.end(), 0);
    do {
      EXPECT_EQ(permute_axes(t, axes), t);
    } while (std::next_permutation(axes.begin(), axes.end()));
  }
}

TEST(Hypergraph, CompleteHypergraph) {
  EXPECT_EQ(complete_hypergraph(4, 2).edge_count(), 6U);
  EXPECT_EQ(complete_hypergraph(6, 3).edge_count(), 20U);
  EXPECT_EQ(complete_hypergraph(3, 3).edge_count(), 1U);
  EXPECT_THROW(complete_hypergraph(2, 3), ValidationError);
}

TEST(Hypergraph, PartiteStructure) {
  auto k22 = complete_partite_hypergraph(2, 2);
  EXPECT_EQ(k22.graph.edge_count(), 4U);
  EXPECT_NO_THROW(balanced_partite_hypergraph(1, 3, {{0, 1, 2}}));
  try {
    balanced_partite_hypergraph(2, 2, {{0, 1}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("{0,1}"), std::string::npos);
  }
}

TEST(Hypergraph, RandomRegularBipartiteIsConnectedAndRegular) {
  Rng rng(33);
  for (unsigned d = 2; d <= 4; ++d) {
    for (unsigned n = d; n <= 8; n += d) {
      auto b = random_regular_bipartite(n, d, rng);
      EXPECT_EQ(b.regular_degree(), d);
      EXPECT_TRUE(b.is_connected());
    }
  }
}
