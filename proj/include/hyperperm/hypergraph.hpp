#pragma once

// d-uniform hypergraphs with hyperedge multiplicities, their adjacency and
// incidence matrices, and the vertex/hyperedge bipartite representation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperperm/search.hpp"
#include "hyperperm/tensor.hpp"

namespace hyperperm {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;  // sorted, distinct vertices

inline std::string format_edge(const Edge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "}";
}

/// A d-uniform hypergraph on vertices 0..n-1. The edge list is a multiset in
/// canonical form: each edge sorted, the list sorted, so copies are adjacent
/// and multiset equality is `==`.
class Hypergraph {
 public:
  Hypergraph(unsigned n, unsigned d, std::vector<Edge> edges) : n_(n), d_(d), edges_(std::move(edges)) {
    if (d < 1) throw ValidationError("uniformity must be at least 1");
    if (n > 64) throw ValidationError("at most 64 vertices are supported");
    for (auto& e : edges_) {
      std::sort(e.begin(), e.end());
      if (e.size() != d) {
        throw ValidationError("hyperedge " + format_edge(e) + " has " + std::to_string(e.size()) +
                              " vertices, expected " + std::to_string(d));
      }
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw ValidationError("hyperedge " + format_edge(e) + " repeats a vertex");
      }
      if (!e.empty() && e.back() >= n) {
        throw ValidationError("hyperedge " + format_edge(e) + " uses a vertex outside 0.." +
                              std::to_string(n == 0 ? 0 : n - 1));
      }
    }
    std::sort(edges_.begin(), edges_.end());
  }

  unsigned vertex_count() const { return n_; }
  unsigned uniformity() const { return d_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool is_simple() const {
    return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
  }

  /// Distinct edges with their multiplicities, in canonical order.
  std::vector<std::pair<Edge, std::uint32_t>> distinct_edges() const {
    std::vector<std::pair<Edge, std::uint32_t>> r;
    for (const auto& e : edges_) {
      if (!r.empty() && r.back().first == e) {
        ++r.back().second;
      } else {
        r.emplace_back(e, 1);
      }
    }
    return r;
  }

  /// The underlying simple hypergraph (each distinct edge once).
  Hypergraph support() const {
    std::vector<Edge> e(edges_);
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return Hypergraph(n_, d_, std::move(e));
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
  friend auto operator<=>(const Hypergraph& a, const Hypergraph& b) {
    return std::tie(a.n_, a.d_, a.edges_) <=> std::tie(b.n_, b.d_, b.edges_);
  }

 private:
  unsigned n_;
  unsigned d_;
  std::vector<Edge> edges_;
};

inline std::uint64_t edge_mask(const Edge& e) {
  std::uint64_t m = 0;
  for (Vertex v : e) m |= std::uint64_t{1} << v;
  return m;
}

/// Unit entries at every ordering of every hyperedge.
inline BoolTensor adjacency_tensor(const Hypergraph& g) {
  if (!g.is_simple()) {
    throw ValidationError("adjacency matrix needs a simple hypergraph (multiplicities are not representable)");
  }
  if (g.uniformity() < 2) throw ValidationError("adjacency matrix needs uniformity >= 2");
  if (g.vertex_count() == 0) throw ValidationError("adjacency matrix needs at least one vertex");
  std::vector<MultiIndex> ones;
  for (const auto& e : g.edges()) {
    MultiIndex p(e.begin(), e.end());
    do {
      ones.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return BoolTensor(g.uniformity(), g.vertex_count(), std::move(ones));
}

/// |X| x |W| (0,1)-matrix, columns in canonical edge order.
inline std::vector<std::vector<std::uint8_t>> incidence_matrix(const Hypergraph& g) {
  std::vector<std::vector<std::uint8_t>> b(g.vertex_count(),
                                           std::vector<std::uint8_t>(g.edge_count(), 0));
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    for (Vertex v : g.edges()[j]) b[v][j] = 1;
  }
  return b;
}

inline std::vector<std::uint64_t> degrees(const Hypergraph& g) {
  std::vector<std::uint64_t> deg(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    for (Vertex v : e) ++deg[v];
  }
  return deg;
}

inline bool is_connected(const Hypergraph& g) {
  const unsigned n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
  }
  const Vertex root = find(0);
  for (Vertex v = 1; v < n; ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

/// Connected components as vertex lists (ascending), each with its edges.
inline std::vector<Hypergraph> components(const Hypergraph& g, std::vector<std::vector<Vertex>>* vertex_sets = nullptr) {
  const unsigned n = g.vertex_count();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
  }
  std::vector<int> comp_of_root(n, -1);
  std::vector<std::vector<Vertex>> sets;
  std::vector<Vertex> local(n);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = find(v);
    if (comp_of_root[r] < 0) {
      comp_of_root[r] = static_cast<int>(sets.size());
      sets.emplace_back();
    }
    auto& s = sets[static_cast<std::size_t>(comp_of_root[r])];
    local[v] = static_cast<Vertex>(s.size());
    s.push_back(v);
  }
  std::vector<std::vector<Edge>> comp_edges(sets.size());
  for (const auto& e : g.edges()) {
    Edge le;
    for (Vertex v : e) le.push_back(local[v]);
    comp_edges[static_cast<std::size_t>(comp_of_root[find(e[0])])].push_back(std::move(le));
  }
  std::vector<Hypergraph> out;
  for (std::size_t c = 0; c < sets.size(); ++c) {
    out.emplace_back(static_cast<unsigned>(sets[c].size()), g.uniformity(), std::move(comp_edges[c]));
  }
  if (vertex_sets) *vertex_sets = std::move(sets);
  return out;
}

inline Hypergraph complete_hypergraph(unsigned n, unsigned d) {
  if (d < 1 || d > n) {
    throw ValidationError("complete hypergraph needs 1 <= d <= n, got n=" + std::to_string(n) +
                          " d=" + std::to_string(d));
  }
  std::vector<Edge> edges;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + d, true);
  do {
    Edge e;
    for (Vertex v = 0; v < n; ++v) {
      if (pick[v]) e.push_back(v);
    }
    edges.push_back(std::move(e));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Hypergraph(n, d, std::move(edges));
}

/// A k-balanced d-partite hypergraph. Part p is the vertex block
/// {p*k, ..., p*k + k - 1}.
struct PartiteHypergraph {
  Hypergraph graph;
  unsigned part_size;

  unsigned part_of(Vertex v) const { return v / part_size; }
};

inline PartiteHypergraph balanced_partite_hypergraph(unsigned part_size, unsigned d,
                                                     std::vector<Edge> edges) {
  if (part_size < 1) throw ValidationError("part size must be at least 1");
  Hypergraph g(part_size * d, d, std::move(edges));
  for (const auto& e : g.edges()) {
    std::vector<bool> seen(d, false);
    for (Vertex v : e) {
      const unsigned p = v / part_size;
      if (seen[p]) {
        throw ValidationError("hyperedge " + format_edge(e) + " has two vertices in part " +
                              std::to_string(p));
      }
      seen[p] = true;
    }
  }
  return PartiteHypergraph{std::move(g), part_size};
}

/// All d-tuples with one vertex per part.
inline PartiteHypergraph complete_partite_hypergraph(unsigned part_size, unsigned d) {
  std::vector<Edge> edges;
  std::vector<Vertex> pick(d, 0);
  while (true) {
    Edge e(d);
    for (unsigned p = 0; p < d; ++p) e[p] = p * part_size + pick[p];
    edges.push_back(std::move(e));
    unsigned p = d;
    while (p > 0 && ++pick[p - 1] == part_size) pick[--p] = 0;
    if (p == 0) break;
  }
  return balanced_partite_hypergraph(part_size, d, std::move(edges));
}

/// Bipartite graph with left part X = {0..left-1} and right part
/// Y = {0..right-1}. Right vertices built from a hypergraph remember the
/// hyperedge they stand for.
class BipartiteGraph {
 public:
  BipartiteGraph(unsigned left, unsigned right, std::vector<std::pair<Vertex, Vertex>> adjacency)
      : left_adj_(left), right_adj_(right) {
    std::sort(adjacency.begin(), adjacency.end());
    adjacency.erase(std::unique(adjacency.begin(), adjacency.end()), adjacency.end());
    for (auto [x, y] : adjacency) {
      if (x >= left || y >= right) {
        throw ValidationError("bipartite edge (" + std::to_string(x) + "," + std::to_string(y) +
                              ") out of range");
      }
      left_adj_[x].push_back(y);
      right_adj_[y].push_back(x);
    }
    edges_ = std::move(adjacency);
  }

  unsigned left_size() const { return static_cast<unsigned>(left_adj_.size()); }
  unsigned right_size() const { return static_cast<unsigned>(right_adj_.size()); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<Vertex>& left_neighbors(Vertex x) const { return left_adj_[x]; }
  const std::vector<Vertex>& right_neighbors(Vertex y) const { return right_adj_[y]; }

  /// Hyperedge each right vertex came from; empty for graphs not built by
  /// bipartite_representation.
  const std::vector<Edge>& right_labels() const { return right_labels_; }
  void set_right_labels(std::vector<Edge> labels) { right_labels_ = std::move(labels); }

  /// The common degree if every vertex on both sides has it.
  std::optional<unsigned> regular_degree() const {
    std::optional<unsigned> d;
    auto check = [&](const std::vector<std::vector<Vertex>>& adj) {
      for (const auto& a : adj) {
        if (!d) d = static_cast<unsigned>(a.size());
        if (a.size() != *d) return false;
      }
      return true;
    };
    if (!check(left_adj_) || !check(right_adj_)) return std::nullopt;
    return d;
  }

  bool is_connected() const {
    const unsigned total = left_size() + right_size();
    if (total == 0) return true;
    std::vector<char> seen(total, 0);
    std::vector<unsigned> stack{0};
    seen[0] = 1;
    unsigned visited = 1;
    while (!stack.empty()) {
      const unsigned u = stack.back();
      stack.pop_back();
      const auto& nb = u < left_size() ? left_adj_[u] : right_adj_[u - left_size()];
      for (Vertex w : nb) {
        const unsigned id = u < left_size() ? left_size() + w : w;
        if (!seen[id]) {
          seen[id] = 1;
          ++visited;
          stack.push_back(id);
        }
      }
    }
    return visited == total;
  }

  /// The hypergraph whose bipartite representation this is: right vertex y
  /// becomes the hyperedge N(y). Requires every right degree to equal d.
  Hypergraph as_hypergraph(unsigned d) const {
    std::vector<Edge> edges;
    for (const auto& nb : right_adj_) {
      if (nb.size() != d) throw ValidationError("right vertex degree differs from uniformity");
      edges.emplace_back(nb.begin(), nb.end());
    }
    return Hypergraph(left_size(), d, std::move(edges));
  }

 private:
  std::vector<std::vector<Vertex>> left_adj_;
  std::vector<std::vector<Vertex>> right_adj_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<Edge> right_labels_;
};

/// B(G): x ~ w iff vertex x lies on hyperedge w. Each edge copy is its own
/// right vertex, in canonical edge order.
inline BipartiteGraph bipartite_representation(const Hypergraph& g) {
  std::vector<std::pair<Vertex, Vertex>> adj;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    for (Vertex v : g.edges()[j]) adj.emplace_back(v, static_cast<Vertex>(j));
  }
  BipartiteGraph b(g.vertex_count(), static_cast<unsigned>(g.edge_count()), std::move(adj));
  b.set_right_labels(g.edges());
  return b;
}

}  // namespace hyperperm
