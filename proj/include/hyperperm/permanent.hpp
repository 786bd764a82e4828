#pragma once

// Exact permanents of d-dimensional (0,1)-matrices and 2-D nonnegative integer
// matrices, and the bounds that bracket them.

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hyperperm/exact.hpp"
#include "hyperperm/search.hpp"
#include "hyperperm/tensor.hpp"

namespace hyperperm {

struct PermanentOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;
  // Cache subtree counts by the set of used coordinates per axis. The row is
  // implied by how many coordinates are used, so equal masks are equal
  // subproblems.
  bool memoize = true;
};

namespace detail {

template <std::size_t W>
using PackedMask = std::array<std::uint64_t, W>;

template <std::size_t W>
struct PackedMaskHash {
  std::size_t operator()(const PackedMask<W>& m) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::uint64_t w : m) {
      std::uint64_t z = w + h;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      h = z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
  }
};

template <std::size_t W>
bool disjoint(const PackedMask<W>& a, const PackedMask<W>& b) {
  for (std::size_t i = 0; i < W; ++i) {
    if (a[i] & b[i]) return false;
  }
  return true;
}

template <std::size_t W>
PackedMask<W> merged(const PackedMask<W>& a, const PackedMask<W>& b) {
  PackedMask<W> r;
  for (std::size_t i = 0; i < W; ++i) r[i] = a[i] | b[i];
  return r;
}

/// Hash map split into independently locked shards; lock-free when used by a
/// single thread.
template <typename Key, typename Value, typename Hash>
class ShardedMemo {
 public:
  explicit ShardedMemo(bool locking) : locking_(locking) {}

  std::optional<Value> find(const Key& k) {
    Shard& s = shard(k);
    std::unique_lock lock(s.mutex, std::defer_lock);
    if (locking_) lock.lock();
    auto it = s.map.find(k);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& k, const Value& v) {
    Shard& s = shard(k);
    std::unique_lock lock(s.mutex, std::defer_lock);
    if (locking_) lock.lock();
    s.map.emplace(k, v);
  }

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    std::mutex mutex;
    std::unordered_map<Key, Value, Hash> map;
  };
  Shard& shard(const Key& k) { return shards_[(Hash{}(k) >> 7) % kShards]; }

  bool locking_;
  std::array<Shard, kShards> shards_;
};

template <std::size_t W>
class DiagonalCounter {
 public:
  using Mask = PackedMask<W>;

  DiagonalCounter(const BoolTensor& t, const PermanentOptions& opts)
      : opts_(opts), order_(t.order()), rows_(t.order()), budget_(opts.node_budget) {
    const unsigned n = t.order();
    for (const auto& idx : t.ones()) {
      Mask m{};
      for (unsigned axis = 1; axis < t.dim(); ++axis) {
        const std::size_t bit = static_cast<std::size_t>(axis - 1) * n + idx[axis];
        m[bit / 64] |= std::uint64_t{1} << (bit % 64);
      }
      rows_[idx[0]].push_back(m);  // ones() is sorted, so rows stay lexicographic
    }
  }

  BigCount count() {
    const unsigned threads = std::max(1U, opts_.threads);
    ShardedMemo<Mask, BigCount, PackedMaskHash<W>> memo(threads > 1);
    auto* memo_ptr = opts_.memoize ? &memo : nullptr;
    if (threads == 1) {
      NodeMeter meter(budget_);
      BigCount r = search(0, Mask{}, meter, memo_ptr);
      meter.flush();
      return r;
    }
    const auto& top = rows_[0];
    auto parts = run_indexed<BigCount>(top.size(), threads, [&](std::size_t i) {
      NodeMeter meter(budget_);
      BigCount r = search(1, top[i], meter, memo_ptr);
      meter.flush();
      return r;
    });
    BigCount total = 0;
    for (const auto& p : parts) total += p;
    return total;
  }

  std::uint64_t nodes_used() const { return budget_.used(); }

 private:
  BigCount search(unsigned row, const Mask& used, NodeMeter& meter,
                  ShardedMemo<Mask, BigCount, PackedMaskHash<W>>* memo) {
    meter.tick();
    if (row == order_) return 1;
    if (memo && row > 0) {
      if (auto hit = memo->find(used)) return *hit;
    }
    BigCount total = 0;
    for (const Mask& cand : rows_[row]) {
      if (disjoint(cand, used)) total += search(row + 1, merged(cand, used), meter, memo);
    }
    if (memo && row > 0) memo->insert(used, total);
    return total;
  }

  PermanentOptions opts_;
  unsigned order_;
  std::vector<std::vector<Mask>> rows_;
  NodeBudget budget_;
};

template <std::size_t W>
BigCount count_unit_diagonals(const BoolTensor& t, const PermanentOptions& opts) {
  DiagonalCounter<W> counter(t, opts);
  return counter.count();
}

}  // namespace detail

/// Number of diagonals of t all of whose entries are ones. Depth-first over
/// the axis-0 index 0..n-1, choosing an entry (i, c_1, ..., c_{d-1}) whose
/// coordinates are unused on every other axis.
inline BigCount permanent(const BoolTensor& t, const PermanentOptions& opts = {}) {
  if (opts.node_budget == 0) throw ValidationError("node budget must be positive");
  for (unsigned axis = 0; axis < t.dim(); ++axis) {
    for (std::uint64_t r : t.hyperplane_counts(axis)) {
      if (r == 0) return 0;
    }
  }
  const std::size_t bits = static_cast<std::size_t>(t.dim() - 1) * t.order();
  switch ((bits + 63) / 64) {
    case 1: return detail::count_unit_diagonals<1>(t, opts);
    case 2: return detail::count_unit_diagonals<2>(t, opts);
    case 3: return detail::count_unit_diagonals<3>(t, opts);
    case 4: return detail::count_unit_diagonals<4>(t, opts);
    case 5:
    case 6:
    case 7:
    case 8: return detail::count_unit_diagonals<8>(t, opts);
    default:
      throw ValidationError("tensor too large for exact permanent search: (d-1)*n = " +
                            std::to_string(bits) + " exceeds 512");
  }
}

/// n x n matrix of nonnegative integers.
class IntMatrix2D {
 public:
  IntMatrix2D(unsigned order, std::vector<std::uint64_t> entries)
      : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(order) * order) {
      throw ValidationError("matrix of order " + std::to_string(order) + " needs " +
                            std::to_string(order * order) + " entries, got " +
                            std::to_string(entries_.size()));
    }
  }
  static IntMatrix2D from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
    std::vector<std::uint64_t> e;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw ValidationError("matrix is not square");
      e.insert(e.end(), r.begin(), r.end());
    }
    return IntMatrix2D(static_cast<unsigned>(rows.size()), std::move(e));
  }

  unsigned order() const { return order_; }
  std::uint64_t at(unsigned i, unsigned j) const { return entries_[i * order_ + j]; }

  /// k if every row and column sums to k.
  std::optional<std::uint64_t> regular_degree() const {
    if (order_ == 0) return 0;
    std::uint64_t k = 0;
    for (unsigned j = 0; j < order_; ++j) k += at(0, j);
    for (unsigned i = 0; i < order_; ++i) {
      std::uint64_t row = 0;
      std::uint64_t col = 0;
      for (unsigned j = 0; j < order_; ++j) {
        row += at(i, j);
        col += at(j, i);
      }
      if (row != k || col != k) return std::nullopt;
    }
    return k;
  }

 private:
  unsigned order_;
  std::vector<std::uint64_t> entries_;
};

/// Row expansion over a column used-mask, memoized on the mask (the row is its
/// popcount).
inline BigCount permanent_2d_int(const IntMatrix2D& m, const SearchOptions& opts = {}) {
  const unsigned n = m.order();
  if (n == 0) return 1;
  if (n > 30) throw ValidationError("2-D permanent limited to order 30");
  NodeBudget budget(opts.node_budget);
  NodeMeter meter(budget);
  std::unordered_map<std::uint32_t, BigCount> memo;
  auto rec = [&](auto&& self, unsigned row, std::uint32_t used) -> BigCount {
    meter.tick();
    if (row == n) return 1;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    BigCount total = 0;
    for (unsigned j = 0; j < n; ++j) {
      const std::uint64_t a = m.at(row, j);
      if (a == 0 || (used >> j) & 1U) continue;
      total += a * self(self, row + 1, used | (std::uint32_t{1} << j));
    }
    memo.emplace(used, total);
    return total;
  };
  BigCount r = rec(rec, 0, 0);
  meter.flush();
  return r;
}

/// Ryser's inclusion-exclusion formula; an independent route to the same
/// value as permanent_2d_int.
inline BigCount permanent_ryser(const IntMatrix2D& m) {
  const unsigned n = m.order();
  if (n == 0) return 1;
  if (n > 24) throw ValidationError("Ryser evaluation limited to order 24");
  BigCount total = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    BigCount prod = 1;
    for (unsigned i = 0; i < n && prod != 0; ++i) {
      std::uint64_t row = 0;
      for (unsigned j = 0; j < n; ++j) {
        if ((s >> j) & 1U) row += m.at(i, j);
      }
      prod *= row;
    }
    const int bits = std::popcount(s);
    if ((n - bits) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

/// Product of the hyperplane ones counts along `axis`.
inline BigCount trivial_upper_bound(const BoolTensor& t, unsigned axis) {
  BigCount r = 1;
  for (std::uint64_t c : t.hyperplane_counts(axis)) r *= c;
  return r;
}

/// prod_i r_i!^(1/r_i) for a 3-dimensional matrix, kept as exact root
/// factors. An empty hyperplane makes the bound 0.
struct DowGibsonBound {
  std::vector<std::uint64_t> hyperplane_counts;
  RootProduct value;

  Decimal approx() const { return value.approx(); }
  /// per <=> bound, exact.
  ExactComparison compare(const BigCount& per) const { return compare_exact(per, value); }
};

inline DowGibsonBound dow_gibson_bound(const BoolTensor& t, unsigned axis) {
  if (t.dim() != 3) {
    throw UnsupportedDimension("Dow-Gibson bound needs a 3-dimensional matrix, got dimension " +
                               std::to_string(t.dim()));
  }
  DowGibsonBound b;
  b.hyperplane_counts = t.hyperplane_counts(axis);
  for (std::uint64_t r : b.hyperplane_counts) {
    if (r == 0) {
      b.value.multiply(0, 1, 1);
    } else {
      b.value.multiply(factorial(r), 1, r);
    }
  }
  return b;
}

/// ((k-1)^(k-1) / k^(k-2))^n with 0^0 = 1.
inline BigRational schrijver_lower_bound(std::uint64_t k, std::uint64_t n) {
  if (k < 1) throw ValidationError("Schrijver bound needs k >= 1");
  const BigRational base =
      rpow(BigRational(k - 1), static_cast<std::int64_t>(k - 1)) *
      rpow(BigRational(k), 2 - static_cast<std::int64_t>(k));
  return rpow(base, static_cast<std::int64_t>(n));
}

/// n!^(d-2) * prod_i S(r_i / n^(d-2)) with S(x) = ceil(x)!^(1/ceil(x)).
/// Main term only; the e^{o(n)} factor is dropped, so this is not a bound.
inline Decimal asym_main_term(const BoolTensor& t, unsigned axis) {
  const auto counts = t.hyperplane_counts(axis);
  const unsigned n = t.order();
  const BigCount scale = ipow(BigCount(n), t.dim() - 2);
  Decimal r = Decimal(factorial(n));
  r = pow(r, Decimal(t.dim() - 2));
  for (std::uint64_t c : counts) {
    if (c == 0) return 0;
    const BigCount ceil_x = (BigCount(c) + scale - 1) / scale;
    const auto m = static_cast<std::uint64_t>(ceil_x);
    r *= pow(Decimal(factorial(m)), Decimal(1) / Decimal(m));
  }
  return r;
}

}  // namespace hyperperm
