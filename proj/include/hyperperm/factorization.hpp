#pragma once

// 1-factors, 1-factorizations, proper orientations, proper edge colorings and
// proper decompositions.
//
// Multiset conventions: a 1-factor is a set of edge values, so identical
// copies of an edge give one factor. A factorization is a sequence of 1-factors
// whose multiset union is the edge multiset. An orientation assigns an ordering
// to every edge copy, with copies indistinguishable; labelled copies are what
// proper edge colorings of the bipartite representation count.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "hyperperm/exact.hpp"
#include "hyperperm/hypergraph.hpp"
#include "hyperperm/search.hpp"
#include "hyperperm/tensor.hpp"

namespace hyperperm {

/// n/d hyperedges covering every vertex exactly once. Edges sorted.
struct OneFactor {
  std::vector<Edge> edges;

  friend auto operator<=>(const OneFactor&, const OneFactor&) = default;
};

namespace detail {

inline std::uint64_t full_mask(unsigned n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Distinct edges indexed by their smallest vertex, for exact cover with
/// "lowest uncovered vertex first" branching.
struct CoverIndex {
  explicit CoverIndex(const Hypergraph& g) : n(g.vertex_count()), by_min(g.vertex_count()) {
    for (const auto& [e, mult] : g.distinct_edges()) {
      by_min[e.front()].push_back(edges.size());
      masks.push_back(edge_mask(e));
      edges.push_back(e);
    }
  }
  unsigned n;
  std::vector<Edge> edges;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<std::size_t>> by_min;
};

/// Calls visit(chosen distinct-edge indices) for each 1-factor, in
/// lexicographic order of the choice sequence.
template <typename Visit>
void exact_cover(const CoverIndex& idx, std::uint64_t covered, std::vector<std::size_t>& chosen,
                 NodeMeter& meter, Visit& visit) {
  meter.tick();
  const std::uint64_t full = full_mask(idx.n);
  if (covered == full) {
    visit(static_cast<const std::vector<std::size_t>&>(chosen));
    return;
  }
  const unsigned v = static_cast<unsigned>(std::countr_one(covered));
  for (std::size_t e : idx.by_min[v]) {
    if (idx.masks[e] & covered) continue;
    chosen.push_back(e);
    exact_cover(idx, covered | idx.masks[e], chosen, meter, visit);
    chosen.pop_back();
  }
}

inline bool factor_possible(const Hypergraph& g) {
  const unsigned d = g.uniformity();
  return g.vertex_count() % d == 0;
}

}  // namespace detail

/// All 1-factors, duplicate-free, in the deterministic order of the exact
/// cover search (lowest uncovered vertex, its edges ascending).
inline std::vector<OneFactor> enumerate_one_factors(const Hypergraph& g, const SearchOptions& opts = {}) {
  std::vector<OneFactor> out;
  if (!detail::factor_possible(g)) return out;
  detail::CoverIndex idx(g);
  NodeBudget budget(opts.node_budget);
  NodeMeter meter(budget);
  std::vector<std::size_t> chosen;
  auto visit = [&](const std::vector<std::size_t>& c) {
    OneFactor f;
    for (std::size_t e : c) f.edges.push_back(idx.edges[e]);
    out.push_back(std::move(f));
  };
  detail::exact_cover(idx, 0, chosen, meter, visit);
  meter.flush();
  return out;
}

inline BigCount count_one_factors(const Hypergraph& g, const SearchOptions& opts = {}) {
  if (!detail::factor_possible(g)) return 0;
  detail::CoverIndex idx(g);
  NodeBudget budget(opts.node_budget);
  if (g.vertex_count() == 0) return 1;
  const auto& top = idx.by_min[0];
  auto parts = run_indexed<BigCount>(top.size(), opts.threads, [&](std::size_t i) {
    NodeMeter meter(budget);
    std::uint64_t found = 0;
    auto visit = [&](const std::vector<std::size_t>&) { ++found; };
    std::vector<std::size_t> chosen{top[i]};
    detail::exact_cover(idx, idx.masks[top[i]], chosen, meter, visit);
    meter.flush();
    return BigCount(found);
  });
  BigCount total = 0;
  for (const auto& p : parts) total += p;
  return total;
}

struct FactorizationCount {
  BigCount ordered;
  BigCount unordered;
};

/// Counts 1-factorizations by enumerating multisets of 1-factors of the
/// support whose sum is the edge multiset. Each step covers the lowest edge
/// with copies left; the factors chosen for one edge are taken in
/// nondecreasing index, so every multiset is produced once. A multiset with
/// factor multiplicities m_j contributes k!/prod m_j! ordered factorizations.
inline FactorizationCount count_factorizations_both(const Hypergraph& g, const SearchOptions& opts = {}) {
  const unsigned n = g.vertex_count();
  const unsigned d = g.uniformity();
  if (g.edge_count() == 0) return {1, 1};
  if (n % d != 0) return {0, 0};
  const std::size_t per_factor = n / d;
  if (g.edge_count() % per_factor != 0) return {0, 0};
  const std::size_t k = g.edge_count() / per_factor;

  const auto dist = g.distinct_edges();
  std::vector<std::uint32_t> remaining;
  for (const auto& [e, m] : dist) remaining.push_back(m);

  // Factors of the support as lists of distinct-edge indices. The support's
  // edge order matches dist.
  std::vector<std::vector<std::size_t>> factors;
  {
    detail::CoverIndex idx(g.support());
    NodeBudget budget(opts.node_budget);
    NodeMeter meter(budget);
    std::vector<std::size_t> chosen;
    auto visit = [&](const std::vector<std::size_t>& c) { factors.push_back(c); };
    detail::exact_cover(idx, 0, chosen, meter, visit);
    meter.flush();
  }
  std::vector<std::vector<std::size_t>> containing(dist.size());
  for (std::size_t j = 0; j < factors.size(); ++j) {
    for (std::size_t e : factors[j]) containing[e].push_back(j);
  }

  NodeBudget budget(opts.node_budget);
  NodeMeter meter(budget);
  const BigCount k_fact = factorial(k);
  FactorizationCount result{0, 0};
  std::vector<std::size_t> picked;

  auto fits = [&](std::size_t j) {
    for (std::size_t e : factors[j]) {
      if (remaining[e] == 0) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t low, std::size_t low_min) -> void {
    meter.tick();
    while (low < remaining.size() && remaining[low] == 0) ++low;
    if (low == remaining.size()) {
      result.unordered += 1;
      std::vector<std::size_t> sorted(picked);
      std::sort(sorted.begin(), sorted.end());
      BigCount denom = 1;
      std::size_t run = 1;
      for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
          ++run;
        } else {
          denom *= factorial(run);
          run = 1;
        }
      }
      result.ordered += k_fact / denom;
      return;
    }
    for (std::size_t j : containing[low]) {
      if (j < low_min || !fits(j)) continue;
      for (std::size_t e : factors[j]) --remaining[e];
      picked.push_back(j);
      // while `low` still has copies, later picks for it start at j
      self(self, low, remaining[low] > 0 ? j : 0);
      picked.pop_back();
      for (std::size_t e : factors[j]) ++remaining[e];
    }
  };
  rec(rec, 0, 0);
  meter.flush();
  return result;
}

/// Ordered (the default convention) or unordered count of 1-factorizations.
inline BigCount count_factorizations(const Hypergraph& g, bool ordered = true,
                                     const SearchOptions& opts = {}) {
  auto c = count_factorizations_both(g, opts);
  return ordered ? c.ordered : c.unordered;
}

/// The ordered d-tuples of 1-factors of a simple hypergraph, repetition
/// allowed, in odometer order (last position fastest).
class FactorTupleRange {
 public:
  FactorTupleRange(std::vector<OneFactor> factors, unsigned d) : factors_(std::move(factors)), d_(d) {}

  class iterator {
   public:
    using value_type = std::vector<const OneFactor*>;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const FactorTupleRange* range, bool end) : range_(range), done_(end) {
      if (range_->factors_.empty() && range_->d_ > 0) done_ = true;
      if (!done_) {
        digits_.assign(range_->d_, 0);
        refresh();
      }
    }
    const value_type& operator*() const { return current_; }
    const value_type* operator->() const { return &current_; }
    iterator& operator++() {
      std::size_t p = digits_.size();
      while (p > 0) {
        --p;
        if (++digits_[p] < range_->factors_.size()) {
          refresh();
          return *this;
        }
        digits_[p] = 0;
      }
      done_ = true;
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || digits_ == o.digits_); }
    const std::vector<std::size_t>& indices() const { return digits_; }

   private:
    void refresh() {
      current_.resize(digits_.size());
      for (std::size_t i = 0; i < digits_.size(); ++i) current_[i] = &range_->factors_[digits_[i]];
    }
    const FactorTupleRange* range_ = nullptr;
    bool done_ = true;
    std::vector<std::size_t> digits_;
    value_type current_;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

  const std::vector<OneFactor>& factors() const { return factors_; }
  unsigned arity() const { return d_; }
  /// phi^d
  BigCount size() const { return ipow(BigCount(factors_.size()), d_); }

 private:
  std::vector<OneFactor> factors_;
  unsigned d_;
};

inline FactorTupleRange d_tuples_of_factors(const Hypergraph& g, const SearchOptions& opts = {}) {
  if (!g.is_simple()) throw ValidationError("d-tuples of 1-factors need a simple hypergraph");
  return FactorTupleRange(enumerate_one_factors(g, opts), g.uniformity());
}

/// The d-uniform d-factor whose edge multiset is the union of the tuple.
inline Hypergraph d_factor_of_tuple(std::span<const OneFactor* const> tuple, unsigned n, unsigned d) {
  std::vector<Edge> edges;
  for (const OneFactor* f : tuple) {
    std::uint64_t covered = 0;
    for (const auto& e : f->edges) {
      const std::uint64_t m = edge_mask(e);
      if (covered & m) throw ValidationError("tuple entry is not a 1-factor: vertex covered twice");
      covered |= m;
      edges.push_back(e);
    }
    if (covered != detail::full_mask(n)) throw ValidationError("tuple entry is not a 1-factor: vertex uncovered");
  }
  return Hypergraph(n, d, std::move(edges));
}

inline Hypergraph d_factor_of_tuple(std::span<const OneFactor> tuple, unsigned n, unsigned d) {
  std::vector<const OneFactor*> ptrs;
  for (const auto& f : tuple) ptrs.push_back(&f);
  return d_factor_of_tuple(std::span<const OneFactor* const>(ptrs), n, d);
}

/// R(F): product of factorials of the edge multiplicities.
inline BigCount multiplicity_product(const Hypergraph& f) {
  BigCount r = 1;
  for (const auto& [e, m] : f.distinct_edges()) r *= factorial(m);
  return r;
}

/// Oriented hyperedges (each an ordered tuple of distinct vertices), sorted.
struct Orientation {
  unsigned n = 0;
  unsigned d = 0;
  std::vector<MultiIndex> tuples;

  Hypergraph underlying() const {
    std::vector<Edge> edges;
    for (const auto& t : tuples) edges.emplace_back(t.begin(), t.end());
    return Hypergraph(n, d, std::move(edges));
  }
  friend auto operator<=>(const Orientation&, const Orientation&) = default;
};

/// No vertex sits at the same position in two oriented hyperedges.
inline bool is_proper(const Orientation& o) {
  std::vector<std::uint64_t> used(o.n, 0);
  for (const auto& t : o.tuples) {
    if (t.size() != o.d) return false;
    for (unsigned p = 0; p < t.size(); ++p) {
      if (t[p] >= o.n || o.d > 64) return false;
      const std::uint64_t bit = std::uint64_t{1} << p;
      if (used[t[p]] & bit) return false;
      used[t[p]] |= bit;
    }
  }
  return true;
}

namespace detail {

/// Backtracking over distinct edges; an edge of multiplicity l takes l
/// orderings with strictly increasing permutation index (copies are
/// indistinguishable, and a proper orientation never repeats an ordering).
class OrientationSearch {
 public:
  OrientationSearch(const Hypergraph& f, const SearchOptions& opts)
      : f_(f), dist_(f.distinct_edges()), budget_(opts.node_budget), used_(f.vertex_count(), 0) {
    const unsigned d = f.uniformity();
    if (d > 10) throw ValidationError("orientation search limited to uniformity 10");
    std::vector<unsigned> p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
      // position_of[k]: where the k-th smallest vertex of the edge goes
      std::vector<unsigned> position_of(d);
      for (unsigned pos = 0; pos < d; ++pos) position_of[p[pos]] = pos;
      perms_.push_back(p);
      positions_.push_back(std::move(position_of));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  template <typename Visit>
  void run(Visit& visit) {
    for (auto deg : degrees(f_)) {
      if (deg > f_.uniformity()) return;
    }
    NodeMeter meter(budget_);
    choice_.clear();
    rec(0, 0, 0, meter, visit);
    meter.flush();
  }

  Orientation current() const {
    Orientation o{f_.vertex_count(), f_.uniformity(), {}};
    for (auto [e, perm] : choice_) {
      const Edge& edge = dist_[e].first;
      MultiIndex t(edge.size());
      for (unsigned pos = 0; pos < edge.size(); ++pos) t[pos] = edge[perms_[perm][pos]];
      o.tuples.push_back(std::move(t));
    }
    std::sort(o.tuples.begin(), o.tuples.end());
    return o;
  }

 private:
  bool fits(const Edge& e, std::size_t perm) const {
    const auto& pos = positions_[perm];
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (used_[e[k]] >> pos[k] & 1U) return false;
    }
    return true;
  }
  void toggle(const Edge& e, std::size_t perm) {
    const auto& pos = positions_[perm];
    for (std::size_t k = 0; k < e.size(); ++k) used_[e[k]] ^= std::uint32_t{1} << pos[k];
  }

  template <typename Visit>
  void rec(std::size_t edge, std::uint32_t copies_done, std::size_t min_perm, NodeMeter& meter, Visit& visit) {
    meter.tick();
    if (edge == dist_.size()) {
      visit();
      return;
    }
    const auto& [e, mult] = dist_[edge];
    if (copies_done == mult) {
      rec(edge + 1, 0, 0, meter, visit);
      return;
    }
    for (std::size_t perm = min_perm; perm < perms_.size(); ++perm) {
      if (!fits(e, perm)) continue;
      toggle(e, perm);
      choice_.emplace_back(edge, perm);
      rec(edge, copies_done + 1, perm + 1, meter, visit);
      choice_.pop_back();
      toggle(e, perm);
    }
  }

  const Hypergraph& f_;
  std::vector<std::pair<Edge, std::uint32_t>> dist_;
  NodeBudget budget_;
  std::vector<std::uint32_t> used_;
  std::vector<std::vector<unsigned>> perms_;
  std::vector<std::vector<unsigned>> positions_;
  std::vector<std::pair<std::size_t, std::size_t>> choice_;
};

}  // namespace detail

/// Calls visit(const Orientation&) for every proper orientation of f.
template <typename Visit>
void for_each_proper_orientation(const Hypergraph& f, Visit&& visit, const SearchOptions& opts = {}) {
  detail::OrientationSearch search(f, opts);
  auto leaf = [&] { visit(search.current()); };
  search.run(leaf);
}

/// Delta(F): proper orientations with identical copies indistinguishable.
inline BigCount count_proper_orientations(const Hypergraph& f, const SearchOptions& opts = {}) {
  detail::OrientationSearch search(f, opts);
  BigCount total = 0;
  std::uint64_t batch = 0;
  auto leaf = [&] {
    if (++batch == (std::uint64_t{1} << 62)) {
      total += batch;
      batch = 0;
    }
  };
  search.run(leaf);
  total += batch;
  return total;
}

namespace detail {

inline unsigned require_regular(const BipartiteGraph& b) {
  auto d = b.regular_degree();
  if (!d) throw ValidationError("bipartite graph is not regular");
  return *d;
}

/// Memo key packing `count` fields of `width` bits, if it fits in 64 bits.
inline bool packable(std::size_t count, unsigned width) { return count * width <= 64; }

template <typename Masks>
std::uint64_t pack(const Masks& masks, unsigned width) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < masks.size(); ++i) key |= std::uint64_t{masks[i]} << (i * width);
  return key;
}

}  // namespace detail

/// P(B): proper edge colorings with `colors` colors (0 means the degree).
/// Edges are colored left vertex by left vertex; at each left-vertex boundary
/// the remaining count depends only on the right vertices' used colors.
inline BigCount count_proper_edge_colorings(const BipartiteGraph& b, unsigned colors = 0,
                                            const SearchOptions& opts = {}) {
  const unsigned d = detail::require_regular(b);
  if (colors == 0) colors = d;
  if (colors > 32) throw ValidationError("at most 32 colors are supported");
  const auto& edges = b.edges();  // sorted by left vertex
  if (edges.empty()) return 1;
  NodeBudget budget(opts.node_budget);
  NodeMeter meter(budget);
  std::vector<std::uint32_t> left_used(b.left_size(), 0);
  std::vector<std::uint32_t> right_used(b.right_size(), 0);
  const bool memo_ok = detail::packable(b.right_size(), colors);
  std::vector<std::unordered_map<std::uint64_t, BigCount>> memo(b.left_size());

  auto rec = [&](auto&& self, std::size_t ei) -> BigCount {
    meter.tick();
    if (ei == edges.size()) return 1;
    const auto [x, y] = edges[ei];
    const bool boundary = ei == 0 || edges[ei - 1].first != x;
    std::uint64_t key = 0;
    if (boundary && memo_ok) {
      key = detail::pack(right_used, colors);
      if (auto it = memo[x].find(key); it != memo[x].end()) return it->second;
    }
    BigCount total = 0;
    const std::uint32_t blocked = left_used[x] | right_used[y];
    for (unsigned c = 0; c < colors; ++c) {
      if (blocked >> c & 1U) continue;
      left_used[x] |= 1U << c;
      right_used[y] |= 1U << c;
      total += self(self, ei + 1);
      left_used[x] &= ~(1U << c);
      right_used[y] &= ~(1U << c);
    }
    if (boundary && memo_ok) memo[x].emplace(key, total);
    return total;
  };
  BigCount r = rec(rec, 0);
  meter.flush();
  return r;
}

/// T(B): ordered partitions (Y_1..Y_d) of the right part such that every left
/// vertex has exactly one neighbour in each Y_i. Equivalently, classes on Y
/// such that each left vertex sees all d classes among its d neighbours.
inline BigCount count_proper_decompositions(const BipartiteGraph& b, const SearchOptions& opts = {}) {
  const unsigned d = detail::require_regular(b);
  const unsigned n = b.left_size();
  if (b.right_size() != n) throw ValidationError("proper decomposition needs parts of equal size");
  if (d == 0 || n % d != 0) throw ValidationError("proper decomposition needs d to divide n");
  if (d > 32) throw ValidationError("at most 32 classes are supported");
  NodeBudget budget(opts.node_budget);
  NodeMeter meter(budget);
  std::vector<std::uint32_t> left_used(n, 0);
  const bool memo_ok = detail::packable(n, d);
  std::vector<std::unordered_map<std::uint64_t, BigCount>> memo(n);

  auto rec = [&](auto&& self, Vertex y) -> BigCount {
    meter.tick();
    if (y == b.right_size()) return 1;
    std::uint64_t key = 0;
    if (memo_ok) {
      key = detail::pack(left_used, d);
      if (auto it = memo[y].find(key); it != memo[y].end()) return it->second;
    }
    std::uint32_t blocked = 0;
    for (Vertex x : b.right_neighbors(y)) blocked |= left_used[x];
    BigCount total = 0;
    for (unsigned c = 0; c < d; ++c) {
      if (blocked >> c & 1U) continue;
      for (Vertex x : b.right_neighbors(y)) left_used[x] |= 1U << c;
      total += self(self, y + 1);
      for (Vertex x : b.right_neighbors(y)) left_used[x] &= ~(1U << c);
    }
    if (memo_ok) memo[y].emplace(key, total);
    return total;
  };
  BigCount r = rec(rec, 0);
  meter.flush();
  return r;
}

/// The diagonal of the order-n adjacency matrix that an oriented structure
/// occupies. A proper orientation of a d-factor is its own diagonal (every
/// vertex takes every position once). An oriented 1-factor contributes the d
/// cyclic shifts of each oriented hyperedge.
inline Diagonal orientation_to_diagonal(const Orientation& o, unsigned n) {
  if (o.n != n) throw ValidationError("orientation vertex count differs from n");
  for (const auto& t : o.tuples) {
    if (t.size() != o.d) throw ValidationError("oriented hyperedge has wrong length");
    std::vector<Coord> s(t);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw ValidationError("oriented hyperedge repeats a vertex");
    }
    for (Coord c : t) {
      if (c >= n) throw ValidationError("oriented hyperedge uses a vertex outside 0..n-1");
    }
  }
  if (!is_proper(o)) throw ValidationError("orientation is not proper");
  std::vector<std::uint64_t> deg(n, 0);
  for (const auto& t : o.tuples) {
    for (Coord c : t) ++deg[c];
  }
  const bool one_factor = std::all_of(deg.begin(), deg.end(), [](auto x) { return x == 1; });
  const bool d_factor = std::all_of(deg.begin(), deg.end(), [&](auto x) { return x == o.d; });
  std::vector<MultiIndex> entries;
  if (d_factor) {
    entries = o.tuples;
  } else if (one_factor) {
    for (const auto& t : o.tuples) {
      for (unsigned s = 0; s < o.d; ++s) {
        MultiIndex shifted(o.d);
        for (unsigned p = 0; p < o.d; ++p) shifted[p] = t[(s + p) % o.d];
        entries.push_back(std::move(shifted));
      }
    }
  } else {
    throw ValidationError("orientation must cover a 1-factor or a d-factor");
  }
  return Diagonal(o.d, n, std::move(entries));
}

/// Distinct d-uniform d-factors induced by the d-tuples of 1-factors of g, in
/// sorted order. The induced factor depends only on the multiset of the
/// tuple, so multisets are enumerated instead of tuples. Stops after `cap`
/// distinct factors when cap > 0.
inline std::vector<Hypergraph> distinct_d_factors(const Hypergraph& g, const SearchOptions& opts = {},
                                                  std::size_t cap = 0) {
  if (!g.is_simple()) throw ValidationError("d-factors from 1-factor tuples need a simple hypergraph");
  const auto factors = enumerate_one_factors(g, opts);
  const unsigned d = g.uniformity();
  std::set<Hypergraph> seen;
  if (factors.empty()) return {};
  NodeBudget budget(opts.node_budget);
  NodeMeter meter(budget);
  std::vector<std::size_t> pick(d, 0);
  std::vector<const OneFactor*> tuple(d);
  while (true) {
    meter.tick();
    for (unsigned i = 0; i < d; ++i) tuple[i] = &factors[pick[i]];
    seen.insert(d_factor_of_tuple(std::span<const OneFactor* const>(tuple), g.vertex_count(), d));
    if (cap > 0 && seen.size() >= cap) break;
    // next nondecreasing tuple
    std::size_t p = d;
    while (p > 0 && pick[p - 1] == factors.size() - 1) --p;
    if (p == 0) break;
    ++pick[p - 1];
    for (std::size_t q = p; q < d; ++q) pick[q] = pick[p - 1];
  }
  meter.flush();
  return {seen.begin(), seen.end()};
}

/// |gamma(G)|: total number of proper orientations over the distinct
/// d-factors induced by d-tuples of 1-factors. The classes are disjoint
/// because distinct factors have distinct underlying edge multisets.
inline BigCount gamma_size(const Hypergraph& g, const SearchOptions& opts = {}) {
  BigCount total = 0;
  for (const auto& f : distinct_d_factors(g, opts)) total += count_proper_orientations(f, opts);
  return total;
}

}  // namespace hyperperm
