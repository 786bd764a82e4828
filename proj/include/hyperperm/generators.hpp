#pragma once

// Seeded random instances for property checks and the `gen` command.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hyperperm/hypergraph.hpp"
#include "hyperperm/permanent.hpp"
#include "hyperperm/tensor.hpp"

namespace hyperperm {

using Rng = std::mt19937_64;

namespace detail {

/// Calls fn(subset) for every d-subset of 0..n-1 in lexicographic order.
template <typename Fn>
void for_each_subset(unsigned n, unsigned d, Fn&& fn) {
  if (d > n) return;
  std::vector<Vertex> s(d);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    fn(static_cast<const std::vector<Vertex>&>(s));
    std::size_t i = d;
    while (i > 0 && s[i - 1] == n - d + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < d; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace detail

/// Simple d-uniform hypergraph; each d-subset kept with probability p.
inline Hypergraph random_hypergraph(unsigned n, unsigned d, double p, Rng& rng) {
  if (d < 1 || d > n) throw ValidationError("random hypergraph needs 1 <= d <= n");
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  detail::for_each_subset(n, d, [&](const std::vector<Vertex>& s) {
    if (keep(rng)) edges.push_back(s);
  });
  return Hypergraph(n, d, std::move(edges));
}

/// Balanced d-partite hypergraph with parts of `part_size`; each cross-part
/// d-set kept with probability p.
inline PartiteHypergraph random_partite_hypergraph(unsigned part_size, unsigned d, double p, Rng& rng) {
  const PartiteHypergraph full = complete_partite_hypergraph(part_size, d);
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (const auto& e : full.graph.edges()) {
    if (keep(rng)) edges.push_back(e);
  }
  return balanced_partite_hypergraph(part_size, d, std::move(edges));
}

/// Connected simple d-regular bipartite graph on n + n vertices, as a union
/// of d random perfect matchings, resampled until simple and connected.
inline BipartiteGraph random_regular_bipartite(unsigned n, unsigned d, Rng& rng,
                                               unsigned max_attempts = 1'000'000) {
  if (d < 1 || d > n) throw ValidationError("regular bipartite graph needs 1 <= d <= n");
  std::vector<Vertex> perm(n);
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::pair<Vertex, Vertex>> adj;
    for (unsigned k = 0; k < d; ++k) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (Vertex x = 0; x < n; ++x) adj.emplace_back(x, perm[x]);
    }
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) continue;
    BipartiteGraph b(n, n, std::move(adj));
    if (b.is_connected()) return b;
  }
  throw ValidationError("no connected simple regular bipartite graph found");
}

/// Sparse tensor; each index set with probability p.
inline BoolTensor random_tensor(unsigned dim, unsigned order, double p, Rng& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<MultiIndex> ones;
  const auto full = full_tensor(dim, order);
  for (const auto& idx : full.ones()) {
    if (keep(rng)) ones.push_back(idx);
  }
  return BoolTensor(dim, order, std::move(ones));
}

/// Sum of k random permutation matrices: k-regular, entries may exceed 1.
inline IntMatrix2D random_regular_matrix(unsigned n, unsigned k, Rng& rng) {
  if (n == 0) throw ValidationError("matrix order must be positive");
  std::vector<std::uint64_t> entries(std::size_t{n} * n, 0);
  std::vector<unsigned> perm(n);
  for (unsigned t = 0; t < k; ++t) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (unsigned i = 0; i < n; ++i) ++entries[i * n + perm[i]];
  }
  return IntMatrix2D(n, std::move(entries));
}

}  // namespace hyperperm
