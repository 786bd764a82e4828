#pragma once

// Exact integer/rational arithmetic shared by every counting module, plus the
// comparator that decides `x <=> prod base_j^(num_j/den_j)` without floating
// point.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace hyperperm {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
// Display-only approximations. Never used to decide a verdict.
using Decimal = boost::multiprecision::cpp_bin_float_50;

inline BigCount factorial(std::uint64_t n) {
  BigCount r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

inline BigCount ipow(const BigCount& base, std::uint64_t exp) {
  BigCount result = 1;
  BigCount b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

/// a^e for a rational base and a possibly negative exponent (0^0 == 1).
inline BigRational rpow(const BigRational& base, std::int64_t exp) {
  if (exp == 0) return BigRational(1);
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    BigRational inv = BigRational(denominator(base), numerator(base));
    return rpow(inv, -exp);
  }
  BigCount num = ipow(numerator(base), static_cast<std::uint64_t>(exp));
  BigCount den = ipow(denominator(base), static_cast<std::uint64_t>(exp));
  return BigRational(num, den);
}

inline std::uint64_t bit_length(const BigCount& x) {
  if (x <= 0) return 0;
  return boost::multiprecision::msb(x) + 1;
}

/// floor(x^(1/k)) by Newton iteration, exact for any size.
inline BigCount iroot_floor(const BigCount& x, std::uint64_t k) {
  if (k == 0) throw std::domain_error("zeroth root");
  if (x < 0) throw std::domain_error("root of a negative integer");
  if (x < 2 || k == 1) return x;
  const std::uint64_t bits = bit_length(x);
  if (k >= bits) return 1;
  BigCount r = BigCount(1) << ((bits + k - 1) / k);  // r >= root
  while (true) {
    BigCount s = ((k - 1) * r + x / ipow(r, k - 1)) / k;
    if (s >= r) break;
    r = s;
  }
  return r;
}

inline std::string to_string(const BigCount& x) { return x.str(); }

inline std::string to_string(const BigRational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Scientific-notation display with the given number of significant digits.
inline std::string display(const Decimal& x, int digits = 12) {
  std::ostringstream os;
  if (x == 0) return "0";
  const Decimal ax = abs(x);
  if (ax >= Decimal(1e-4) && ax < Decimal(1e15)) {
    os.precision(digits);
    os << x;
  } else {
    os.precision(digits - 1);
    os << std::scientific << x;
  }
  return os.str();
}

inline std::strong_ordering compare3(const BigCount& a, const BigCount& b) {
  const int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

inline Decimal to_decimal(const BigCount& x) { return Decimal(x); }
inline Decimal to_decimal(const BigRational& x) {
  return Decimal(numerator(x)) / Decimal(denominator(x));
}

/// One factor base^(num/den) with base >= 0 and num/den in lowest terms.
struct RootFactor {
  BigCount base;
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// A product of rational powers of nonnegative integers. Factors with equal
/// bases are merged so that the clearing exponent stays small.
class RootProduct {
 public:
  RootProduct() = default;

  void multiply(const BigCount& base, std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::domain_error("zero root index");
    if (num == 0) return;
    if (base == 0) {
      zero_ = true;
      return;
    }
    if (base == 1) return;
    for (auto& f : factors_) {
      if (f.base == base) {
        // a/b + c/e
        const std::uint64_t n = f.num * den + num * f.den;
        const std::uint64_t d = f.den * den;
        const std::uint64_t g = std::gcd(n, d);
        f.num = n / g;
        f.den = d / g;
        return;
      }
    }
    const std::uint64_t g = std::gcd(num, den);
    factors_.push_back({base, num / g, den / g});
  }

  bool is_zero() const { return zero_; }
  const std::vector<RootFactor>& factors() const { return factors_; }

  /// lcm of all root indices; raising the product to this power makes it an
  /// integer.
  std::uint64_t clearing_exponent() const {
    std::uint64_t l = 1;
    for (const auto& f : factors_) l = std::lcm(l, f.den);
    return l;
  }

  /// The product raised to `power`, which must be a multiple of every root
  /// index.
  BigCount raised(std::uint64_t power) const {
    if (zero_) return 0;
    BigCount r = 1;
    for (const auto& f : factors_) {
      if (power % f.den != 0) throw std::logic_error("power does not clear root");
      r *= ipow(f.base, f.num * (power / f.den));
    }
    return r;
  }

  Decimal approx() const {
    if (zero_) return 0;
    Decimal r = 1;
    for (const auto& f : factors_) {
      r *= pow(Decimal(f.base), Decimal(f.num) / Decimal(f.den));
    }
    return r;
  }

 private:
  bool zero_ = false;
  std::vector<RootFactor> factors_;
};

/// Outcome of an exact comparison between an integer and a RootProduct.
/// `lhs <=> rhs` reproduces `order` from the recorded integers alone.
struct ExactComparison {
  std::strong_ordering order = std::strong_ordering::equal;
  BigCount lhs;
  BigCount rhs;
  std::uint64_t power = 1;
  std::string method;
};

namespace detail {

inline double estimated_bits(const BigCount& x, const RootProduct& rp, std::uint64_t power) {
  double per_unit = static_cast<double>(bit_length(x));
  double rhs_bits = 0;
  for (const auto& f : rp.factors()) {
    rhs_bits += static_cast<double>(bit_length(f.base)) * static_cast<double>(f.num) /
                static_cast<double>(f.den);
  }
  return std::max(per_unit, rhs_bits) * static_cast<double>(power);
}

inline ExactComparison compare_by_power(const BigCount& x, const RootProduct& rp) {
  ExactComparison c;
  c.power = rp.clearing_exponent();
  c.lhs = ipow(x, c.power);
  c.rhs = rp.raised(c.power);
  c.order = compare3(c.lhs, c.rhs);
  c.method = "lcm-power";
  return c;
}

}  // namespace detail

/// Decides x <=> rp exactly. Small instances clear every root by raising
/// both sides to the lcm of the root indices. Large ones first try integer
/// brackets floor(f * 2^K) <= f * 2^K < floor(f * 2^K) + 1 for each factor f,
/// computed with exact integer roots, and fall back to the lcm power only if
/// the bracket is inconclusive.
inline ExactComparison compare_exact(const BigCount& x, const RootProduct& rp) {
  if (rp.is_zero()) {
    ExactComparison c;
    c.lhs = x;
    c.rhs = 0;
    c.order = compare3(x, BigCount(0));
    c.method = "zero";
    return c;
  }
  constexpr double kDirectBitLimit = 1 << 16;
  if (detail::estimated_bits(x, rp, rp.clearing_exponent()) <= kDirectBitLimit) {
    return detail::compare_by_power(x, rp);
  }
  for (std::uint64_t precision : {64U, 256U, 1024U, 4096U}) {
    BigCount lo = 1;
    BigCount hi = 1;
    for (const auto& f : rp.factors()) {
      // floor(base^(num/den) * 2^precision)
      const BigCount scaled = ipow(f.base, f.num) << (precision * f.den);
      const BigCount root = iroot_floor(scaled, f.den);
      lo *= root;
      hi *= (ipow(root, f.den) == scaled) ? root : BigCount(root + 1);
    }
    const BigCount scaled_x = x << (precision * rp.factors().size());
    ExactComparison c;
    c.power = 1;
    c.method = "root-bracket-" + std::to_string(precision);
    c.lhs = scaled_x;
    if (lo == hi) {
      c.rhs = lo;
      c.order = compare3(scaled_x, lo);
      return c;
    }
    if (scaled_x < lo) {
      c.rhs = lo;
      c.order = std::strong_ordering::less;
      return c;
    }
    // scaled_x == hi is also "greater" in truth, but the recorded sides would
    // read as a tie, so refine instead
    if (scaled_x > hi) {
      c.rhs = hi;
      c.order = std::strong_ordering::greater;
      return c;
    }
  }
  return detail::compare_by_power(x, rp);
}

}  // namespace hyperperm
