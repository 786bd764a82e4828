#pragma once

// d-dimensional (0,1)-matrices of order n in sparse form, hyperplanes, and
// diagonals. Indices are 0-based.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "hyperperm/search.hpp"

namespace hyperperm {

using Coord = std::uint32_t;
using MultiIndex = std::vector<Coord>;

inline std::string format_index(std::span<const Coord> idx) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ')';
  return os.str();
}

class BoolTensor {
 public:
  /// Unit entries are validated, sorted lexicographically and deduplicated.
  BoolTensor(unsigned dim, unsigned order, std::vector<MultiIndex> ones)
      : dim_(dim), order_(order), ones_(std::move(ones)) {
    if (dim < 2) throw ValidationError("tensor dimension must be at least 2");
    if (order < 1) throw ValidationError("tensor order must be at least 1");
    for (const auto& idx : ones_) {
      if (idx.size() != dim) {
        throw ValidationError("index " + format_index(idx) + " has length " +
                              std::to_string(idx.size()) + ", expected " +
                              std::to_string(dim));
      }
      for (Coord c : idx) {
        if (c >= order) {
          throw ValidationError("index " + format_index(idx) + " has coordinate " +
                                std::to_string(c) + " outside 0.." +
                                std::to_string(order - 1));
        }
      }
    }
    std::sort(ones_.begin(), ones_.end());
    ones_.erase(std::unique(ones_.begin(), ones_.end()), ones_.end());
  }

  unsigned dim() const { return dim_; }
  unsigned order() const { return order_; }
  const std::vector<MultiIndex>& ones() const { return ones_; }
  std::size_t size() const { return ones_.size(); }

  bool contains(std::span<const Coord> idx) const {
    return std::binary_search(ones_.begin(), ones_.end(), idx,
                              [](const auto& a, const auto& b) {
                                return std::lexicographical_compare(a.begin(), a.end(),
                                                                    b.begin(), b.end());
                              });
  }

  std::uint64_t hyperplane_ones(unsigned axis, Coord index) const {
    check_axis(axis);
    if (index >= order_) throw ValidationError("hyperplane index out of range");
    return static_cast<std::uint64_t>(std::count_if(
        ones_.begin(), ones_.end(), [&](const MultiIndex& m) { return m[axis] == index; }));
  }

  /// Ones count of every hyperplane orthogonal to `axis`.
  std::vector<std::uint64_t> hyperplane_counts(unsigned axis) const {
    check_axis(axis);
    std::vector<std::uint64_t> r(order_, 0);
    for (const auto& m : ones_) ++r[m[axis]];
    return r;
  }

  friend bool operator==(const BoolTensor&, const BoolTensor&) = default;

 private:
  void check_axis(unsigned axis) const {
    if (axis >= dim_) {
      throw ValidationError("axis " + std::to_string(axis) + " out of range for dimension " +
                            std::to_string(dim_));
    }
  }

  unsigned dim_;
  unsigned order_;
  std::vector<MultiIndex> ones_;
};

inline BoolTensor make_tensor(unsigned dim, unsigned order, std::vector<MultiIndex> ones) {
  return BoolTensor(dim, order, std::move(ones));
}

/// All n^d indices set.
inline BoolTensor full_tensor(unsigned dim, unsigned order) {
  std::vector<MultiIndex> ones;
  MultiIndex idx(dim, 0);
  while (true) {
    ones.push_back(idx);
    unsigned k = dim;
    while (k > 0) {
      --k;
      if (++idx[k] < order) break;
      idx[k] = 0;
      if (k == 0) return BoolTensor(dim, order, std::move(ones));
    }
  }
}

/// Applies the axis permutation: entry idx moves to idx' with
/// idx'[k] = idx[axes[k]].
inline BoolTensor permute_axes(const BoolTensor& t, std::span<const unsigned> axes) {
  if (axes.size() != t.dim()) throw ValidationError("axis permutation has wrong length");
  std::vector<MultiIndex> ones;
  ones.reserve(t.size());
  for (const auto& m : t.ones()) {
    MultiIndex p(t.dim());
    for (unsigned k = 0; k < t.dim(); ++k) p[k] = m[axes[k]];
    ones.push_back(std::move(p));
  }
  return BoolTensor(t.dim(), t.order(), std::move(ones));
}

/// Relabels every coordinate through the same map on {0..n-1}.
inline BoolTensor relabel(const BoolTensor& t, std::span<const Coord> map) {
  if (map.size() != t.order()) throw ValidationError("relabeling has wrong length");
  std::vector<MultiIndex> ones;
  ones.reserve(t.size());
  for (const auto& m : t.ones()) {
    MultiIndex p(m);
    for (auto& c : p) c = map[c];
    ones.push_back(std::move(p));
  }
  return BoolTensor(t.dim(), t.order(), std::move(ones));
}

/// n entries such that along every axis the coordinates form a permutation of
/// 0..n-1. Stored sorted by coordinate 0, i.e. as (i, s_1(i), ..., s_{d-1}(i)).
class Diagonal {
 public:
  Diagonal(unsigned dim, unsigned order, std::vector<MultiIndex> entries);

  unsigned dim() const { return dim_; }
  unsigned order() const { return order_; }
  const std::vector<MultiIndex>& entries() const { return entries_; }

  /// The permutation s_axis with s_axis(i) = entries[i][axis].
  std::vector<Coord> permutation(unsigned axis) const {
    std::vector<Coord> p;
    p.reserve(order_);
    for (const auto& e : entries_) p.push_back(e[axis]);
    return p;
  }

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;

 private:
  unsigned dim_;
  unsigned order_;
  std::vector<MultiIndex> entries_;
};

inline bool is_diagonal(unsigned dim, unsigned order, std::span<const MultiIndex> entries) {
  if (entries.size() != order) return false;
  for (const auto& e : entries) {
    if (e.size() != dim) return false;
    for (Coord c : e) {
      if (c >= order) return false;
    }
  }
  std::vector<char> seen(order);
  for (unsigned axis = 0; axis < dim; ++axis) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& e : entries) {
      if (seen[e[axis]]) return false;
      seen[e[axis]] = 1;
    }
  }
  return true;
}

inline Diagonal::Diagonal(unsigned dim, unsigned order, std::vector<MultiIndex> entries)
    : dim_(dim), order_(order), entries_(std::move(entries)) {
  if (!is_diagonal(dim, order, entries_)) {
    throw ValidationError("entries do not form a diagonal of a " + std::to_string(dim) +
                          "-dimensional matrix of order " + std::to_string(order));
  }
  std::sort(entries_.begin(), entries_.end());
}

/// True iff every entry of the diagonal is a unit entry of t.
inline bool is_unit_diagonal(const BoolTensor& t, const Diagonal& diag) {
  if (diag.dim() != t.dim() || diag.order() != t.order()) return false;
  return std::all_of(diag.entries().begin(), diag.entries().end(),
                     [&](const MultiIndex& e) { return t.contains(e); });
}

}  // namespace hyperperm
