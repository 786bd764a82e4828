#pragma once

// Brute-force reference implementations. Each one enumerates the raw
// definition with no pruning beyond what keeps it finite, and shares no search
// code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hyperperm/hypergraph.hpp"
#include "hyperperm/permanent.hpp"
#include "hyperperm/tensor.hpp"

namespace oracle {

using hyperperm::BigCount;
using hyperperm::BipartiteGraph;
using hyperperm::BoolTensor;
using hyperperm::Edge;
using hyperperm::Hypergraph;
using hyperperm::MultiIndex;
using hyperperm::Vertex;

/// Sum over all (d-1)-tuples of permutations of prod_i t[i, s1(i), ..., s_{d-1}(i)].
inline BigCount permanent(const BoolTensor& t) {
  const unsigned n = t.order();
  const unsigned d = t.dim();
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::size_t> pick(d - 1, 0);
  BigCount total = 0;
  MultiIndex idx(d);
  while (true) {
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i) {
      idx[0] = i;
      for (unsigned k = 1; k < d; ++k) idx[k] = perms[pick[k - 1]][i];
      ok = t.contains(idx);
    }
    if (ok) ++total;
    std::size_t k = pick.size();
    while (k > 0 && ++pick[k - 1] == perms.size()) pick[--k] = 0;
    if (k == 0) break;
  }
  return total;
}

inline BigCount permanent_2d(const hyperperm::IntMatrix2D& m) {
  const unsigned n = m.order();
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigCount total = 0;
  do {
    BigCount prod = 1;
    for (unsigned i = 0; i < n; ++i) prod *= m.at(i, p[i]);
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// n entries, pairwise at Hamming distance d (no coordinate shared).
inline bool is_diagonal(unsigned d, unsigned n, const std::vector<MultiIndex>& entries) {
  if (entries.size() != n) return false;
  for (const auto& e : entries) {
    if (e.size() != d) return false;
    for (auto c : e) {
      if (c >= n) return false;
    }
  }
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      for (unsigned k = 0; k < d; ++k) {
        if (entries[a][k] == entries[b][k]) return false;
      }
    }
  }
  return true;
}

/// All (n/d)-subsets of the distinct edges that cover every vertex once.
inline std::vector<std::vector<Edge>> one_factors(const Hypergraph& g) {
  std::vector<Edge> dist;
  for (const auto& [e, m] : g.distinct_edges()) dist.push_back(e);
  std::vector<std::vector<Edge>> out;
  const unsigned n = g.vertex_count();
  const unsigned d = g.uniformity();
  if (n % d != 0) return out;
  const std::size_t k = n / d;
  if (k > dist.size()) return out;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    std::vector<int> cover(n, 0);
    for (auto i : c) {
      for (auto v : dist[i]) ++cover[v];
    }
    if (std::all_of(cover.begin(), cover.end(), [](int x) { return x == 1; })) {
      std::vector<Edge> f;
      for (auto i : c) f.push_back(dist[i]);
      out.push_back(f);
    }
    std::size_t i = k;
    while (i > 0 && c[i - 1] == dist.size() - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

/// Ordered factorizations: all sequences of 1-factors whose multiset sum is
/// the edge multiset.
inline BigCount ordered_factorizations(const Hypergraph& g) {
  if (g.edge_count() == 0) return 1;
  const auto fs = one_factors(g.support());
  const std::size_t per = g.vertex_count() / g.uniformity();
  if (fs.empty() || g.edge_count() % per != 0) return 0;
  const std::size_t k = g.edge_count() / per;
  const auto target = g.edges();  // sorted
  std::vector<std::size_t> pick(k, 0);
  BigCount total = 0;
  while (true) {
    std::vector<Edge> all;
    for (auto i : pick) all.insert(all.end(), fs[i].begin(), fs[i].end());
    std::sort(all.begin(), all.end());
    if (all == target) ++total;
    std::size_t p = k;
    while (p > 0 && ++pick[p - 1] == fs.size()) pick[--p] = 0;
    if (p == 0) break;
  }
  return total;
}

/// Proper orientations as distinct multisets of oriented tuples, found by
/// orienting every labelled copy independently and deduplicating.
inline std::set<std::vector<MultiIndex>> proper_orientations(const Hypergraph& f) {
  const unsigned d = f.uniformity();
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto& edges = f.edges();
  std::set<std::vector<MultiIndex>> out;
  std::vector<std::size_t> pick(edges.size(), 0);
  while (true) {
    std::vector<MultiIndex> tuples;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      MultiIndex t(d);
      for (unsigned pos = 0; pos < d; ++pos) t[pos] = edges[j][perms[pick[j]][pos]];
      tuples.push_back(t);
    }
    std::set<std::pair<Vertex, unsigned>> seen;
    bool proper = true;
    for (const auto& t : tuples) {
      for (unsigned pos = 0; pos < d && proper; ++pos) proper = seen.insert({t[pos], pos}).second;
    }
    if (proper) {
      std::sort(tuples.begin(), tuples.end());
      out.insert(tuples);
    }
    std::size_t q = pick.size();
    while (q > 0 && ++pick[q - 1] == perms.size()) pick[--q] = 0;
    if (q == 0) break;
  }
  return out;
}

/// colors^|E| assignments checked for properness.
inline BigCount edge_colorings(const BipartiteGraph& b, unsigned colors) {
  const auto& e = b.edges();
  std::vector<unsigned> c(e.size(), 0);
  BigCount total = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < e.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < e.size() && ok; ++j) {
        if (c[i] == c[j] && (e[i].first == e[j].first || e[i].second == e[j].second)) ok = false;
      }
    }
    if (ok) ++total;
    std::size_t q = c.size();
    while (q > 0 && ++c[q - 1] == colors) c[--q] = 0;
    if (q == 0) break;
  }
  return total;
}

/// d^|Y| class assignments; each left vertex must meet every class once.
inline BigCount decompositions(const BipartiteGraph& b, unsigned d) {
  std::vector<unsigned> cls(b.right_size(), 0);
  BigCount total = 0;
  while (true) {
    bool ok = true;
    for (Vertex x = 0; x < b.left_size() && ok; ++x) {
      std::vector<int> seen(d, 0);
      for (Vertex y : b.left_neighbors(x)) ++seen[cls[y]];
      ok = std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
    }
    if (ok) ++total;
    std::size_t q = cls.size();
    while (q > 0 && ++cls[q - 1] == d) cls[--q] = 0;
    if (q == 0) break;
  }
  return total;
}

/// Latin squares built row by row from whole permutations.
inline BigCount latin_squares(unsigned n, bool fix_first_column) {
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::size_t> rows;
  BigCount total = 0;
  auto rec = [&](auto&& self) -> void {
    if (rows.size() == n) {
      ++total;
      return;
    }
    for (std::size_t r = 0; r < perms.size(); ++r) {
      if (fix_first_column && perms[r][0] != rows.size()) continue;
      bool ok = true;
      for (auto prev : rows) {
        for (unsigned c = 0; c < n && ok; ++c) ok = perms[prev][c] != perms[r][c];
      }
      if (!ok) continue;
      rows.push_back(r);
      self(self);
      rows.pop_back();
    }
  };
  rec(rec);
  return total;
}

/// prod of factorials of edge multiplicities, by counting equal neighbours.
inline BigCount multiplicity_product(const Hypergraph& g) {
  std::map<Edge, unsigned> m;
  for (const auto& e : g.edges()) ++m[e];
  BigCount r = 1;
  for (const auto& [e, c] : m) {
    for (unsigned i = 2; i <= c; ++i) r *= i;
  }
  return r;
}

}  // namespace oracle
