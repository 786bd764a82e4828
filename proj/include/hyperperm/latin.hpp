#pragma once

// Latin squares and the order-d tensor U(d) whose unit entries are the index
// tuples with pairwise distinct coordinates.

#include <cstdint>
#include <numeric>
#include <vector>

#include "hyperperm/exact.hpp"
#include "hyperperm/search.hpp"
#include "hyperperm/tensor.hpp"

namespace hyperperm {

class LatinSquare {
 public:
  /// grid is row-major, n*n symbols in 0..n-1
  LatinSquare(unsigned n, std::vector<std::uint8_t> grid) : n_(n), grid_(std::move(grid)) {
    if (n == 0 || n > 32) throw ValidationError("latin square order must be in 1..32");
    if (grid_.size() != std::size_t{n} * n) throw ValidationError("latin square grid has wrong size");
    for (unsigned r = 0; r < n; ++r) {
      std::uint64_t row = 0;
      std::uint64_t col = 0;
      for (unsigned c = 0; c < n; ++c) {
        const unsigned a = grid_[r * n + c];
        const unsigned b = grid_[c * n + r];
        if (a >= n || b >= n) throw ValidationError("latin square symbol out of range");
        row |= std::uint64_t{1} << a;
        col |= std::uint64_t{1} << b;
      }
      const std::uint64_t all = (std::uint64_t{1} << n) - 1;
      if (row != all) throw ValidationError("row " + std::to_string(r) + " repeats a symbol");
      if (col != all) throw ValidationError("column " + std::to_string(r) + " repeats a symbol");
    }
  }

  unsigned order() const { return n_; }
  unsigned at(unsigned row, unsigned col) const { return grid_[row * n_ + col]; }
  const std::vector<std::uint8_t>& grid() const { return grid_; }

  friend auto operator<=>(const LatinSquare&, const LatinSquare&) = default;

 private:
  unsigned n_;
  std::vector<std::uint8_t> grid_;
};

/// d-dimensional, order d; ones exactly where all coordinates differ.
inline BoolTensor build_U(unsigned d) {
  if (d < 2) throw ValidationError("U(d) needs d >= 2");
  MultiIndex p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<MultiIndex> ones;
  do {
    ones.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return BoolTensor(d, d, std::move(ones));
}

namespace detail {

/// Cell-by-cell backtracking with row and column symbol masks. With
/// fix_first_column, column 0 is pinned to 0,1,...,n-1.
class LatinSearch {
 public:
  LatinSearch(unsigned n, bool fix_first_column) : n_(n), fixed_(fix_first_column) {
    if (n == 0) throw ValidationError("latin square order must be at least 1");
    if (n > 16) throw ValidationError("latin square order limited to 16");
    reset();
  }

  void reset() {
    rows_.assign(n_, 0);
    cols_.assign(n_, 0);
    grid_.assign(std::size_t{n_} * n_, 0);
    if (fixed_) {
      for (unsigned r = 0; r < n_; ++r) place(r * n_, r);
    }
  }

  std::size_t first_free() const { return fixed_ ? 1 : 0; }
  std::size_t next_cell(std::size_t cell) const {
    ++cell;
    if (fixed_ && cell < grid_.size() && cell % n_ == 0) ++cell;
    return cell;
  }

  bool allowed(std::size_t cell, unsigned s) const {
    const unsigned r = static_cast<unsigned>(cell / n_);
    const unsigned c = static_cast<unsigned>(cell % n_);
    return !((rows_[r] | cols_[c]) >> s & 1U);
  }
  void place(std::size_t cell, unsigned s) {
    rows_[cell / n_] |= 1U << s;
    cols_[cell % n_] |= 1U << s;
    grid_[cell] = static_cast<std::uint8_t>(s);
  }
  void unplace(std::size_t cell, unsigned s) {
    rows_[cell / n_] &= ~(1U << s);
    cols_[cell % n_] &= ~(1U << s);
  }

  template <typename Visit>
  void rec(std::size_t cell, NodeMeter& meter, Visit& visit) {
    meter.tick();
    if (cell >= grid_.size()) {
      visit(static_cast<const std::vector<std::uint8_t>&>(grid_));
      return;
    }
    for (unsigned s = 0; s < n_; ++s) {
      if (!allowed(cell, s)) continue;
      place(cell, s);
      rec(next_cell(cell), meter, visit);
      unplace(cell, s);
    }
  }

  unsigned n() const { return n_; }
  std::size_t cells() const { return grid_.size(); }

 private:
  unsigned n_;
  bool fixed_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> cols_;
  std::vector<std::uint8_t> grid_;
};

inline BigCount count_latin(unsigned n, bool fixed, const SearchOptions& opts) {
  LatinSearch probe(n, fixed);
  const std::size_t first = probe.first_free();
  if (first >= probe.cells()) return 1;
  NodeBudget budget(opts.node_budget);
  // fan out over the symbol in the first free cell
  auto parts = run_indexed<BigCount>(n, opts.threads, [&](std::size_t s) {
    LatinSearch search(n, fixed);
    if (!search.allowed(first, static_cast<unsigned>(s))) return BigCount(0);
    search.place(first, static_cast<unsigned>(s));
    NodeMeter meter(budget);
    std::uint64_t found = 0;
    auto visit = [&](const std::vector<std::uint8_t>&) { ++found; };
    search.rec(search.next_cell(first), meter, visit);
    meter.flush();
    return BigCount(found);
  });
  BigCount total = 0;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace detail

/// L(n)
inline BigCount count_latin_squares(unsigned n, const SearchOptions& opts = {}) {
  return detail::count_latin(n, false, opts);
}

/// Q(n): column 0 fixed to the identity column.
inline BigCount count_latin_fixed_column(unsigned n, const SearchOptions& opts = {}) {
  return detail::count_latin(n, true, opts);
}

/// Visits every latin square of order n in lexicographic order of the grid.
template <typename Visit>
void for_each_latin_square(unsigned n, Visit&& visit, bool fix_first_column = false,
                           const SearchOptions& opts = {}) {
  detail::LatinSearch search(n, fix_first_column);
  NodeBudget budget(opts.node_budget);
  NodeMeter meter(budget);
  auto leaf = [&](const std::vector<std::uint8_t>& g) { visit(LatinSquare(n, g)); };
  search.rec(search.first_free(), meter, leaf);
  meter.flush();
}

/// d!^{2d} / d^{d^2}
inline BigRational latin_lower_bound(unsigned d) {
  if (d < 1) throw ValidationError("latin lower bound needs d >= 1");
  return BigRational(ipow(factorial(d), 2ULL * d), ipow(BigCount(d), std::uint64_t{d} * d));
}

/// A diagonal of U(d), read as d rows (sorted by coordinate 0), is a latin
/// square whose column 0 is the identity.
inline LatinSquare latin_square_from_diagonal(const Diagonal& diag) {
  const unsigned d = diag.dim();
  if (diag.order() != d) throw ValidationError("diagonal is not of a tensor of order d");
  std::vector<std::uint8_t> grid;
  for (const auto& e : diag.entries()) {
    for (Coord c : e) grid.push_back(static_cast<std::uint8_t>(c));
  }
  return LatinSquare(d, std::move(grid));
}

}  // namespace hyperperm
