#pragma once

// mu(n,d), exact verification of the counting inequalities on concrete
// instances, and display-only main terms of the asymptotic factorization
// estimates.
//
// Every verdict comes from an integer comparison lhs <=> rhs where both sides
// have had their roots cleared. Decimals in a report are for people only.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hyperperm/exact.hpp"
#include "hyperperm/factorization.hpp"
#include "hyperperm/hypergraph.hpp"
#include "hyperperm/latin.hpp"
#include "hyperperm/permanent.hpp"
#include "hyperperm/search.hpp"
#include "hyperperm/tensor.hpp"

namespace hyperperm {

/// mu(n,d) through mu^root = (num/den)^n, num/den in lowest terms.
struct MuValue {
  unsigned n = 0;
  unsigned d = 0;
  unsigned root = 1;
  BigCount num = 1;
  BigCount den = 1;

  BigCount num_pow() const { return ipow(num, n); }
  BigCount den_pow() const { return ipow(den, n); }
  BigRational rooted() const { return BigRational(num_pow(), den_pow()); }
  Decimal approx() const {
    return pow(Decimal(num) / Decimal(den), Decimal(n) / Decimal(root));
  }
  /// mu^(1/n)
  Decimal per_vertex() const { return pow(Decimal(num) / Decimal(den), Decimal(1) / Decimal(root)); }

  friend bool operator==(const MuValue&, const MuValue&) = default;
};

inline MuValue mu(unsigned n, unsigned d) {
  if (n < 1) throw ValidationError("mu needs n >= 1");
  if (d < 2) throw ValidationError("mu needs d >= 2");
  MuValue m{n, d, 1, 1, 1};
  if (d == 3) {
    m.root = 2;
    m.num = 8;
    m.den = 9;
  } else if (d >= 4) {
    const BigCount f = factorial(d);
    m.root = d;
    m.num = ipow(f, 2ULL * d);
    m.den = ipow(BigCount(d), std::uint64_t{d} * d) * f;
    const BigCount g = gcd(m.num, m.den);
    m.num /= g;
    m.den /= g;
  }
  return m;
}

/// mu(a,d) * mu(b,d) = mu(a+b,d)
inline MuValue operator*(const MuValue& a, const MuValue& b) {
  if (a.d != b.d) throw ValidationError("mu values of different uniformity");
  MuValue r = a;
  r.n = a.n + b.n;
  return r;
}

enum class Verdict { holds, tight, violated };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::tight: return "tight";
    case Verdict::violated: return "violated";
  }
  return "?";
}

/// lhs <= rhs, as an inequality
inline Verdict inequality_verdict(const BigCount& lhs, const BigCount& rhs) {
  if (lhs < rhs) return Verdict::holds;
  if (lhs == rhs) return Verdict::tight;
  return Verdict::violated;
}

inline Verdict identity_verdict(const BigCount& lhs, const BigCount& rhs) {
  return lhs == rhs ? Verdict::holds : Verdict::violated;
}

struct CheckReport {
  std::string theorem;
  std::string instance;
  BigCount lhs;
  BigCount rhs;
  std::uint64_t root = 1;
  bool identity = false;
  Verdict verdict = Verdict::holds;
  // name -> display string, in insertion order
  std::vector<std::pair<std::string, std::string>> decimals;

  void add(std::string name, std::string value) { decimals.emplace_back(std::move(name), std::move(value)); }
  /// Recomputes the verdict from lhs and rhs alone.
  Verdict recomputed() const { return identity ? identity_verdict(lhs, rhs) : inequality_verdict(lhs, rhs); }
};

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["instance"] = r.instance;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["root"] = r.root;
  j["verdict"] = to_string(r.verdict);
  nlohmann::ordered_json dec = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.decimals) dec[k] = v;
  j["decimals"] = dec;
  return j;
}

namespace detail {

inline std::string describe(const Hypergraph& g) {
  return "hypergraph n=" + std::to_string(g.vertex_count()) + " d=" + std::to_string(g.uniformity()) +
         " m=" + std::to_string(g.edge_count());
}

inline std::string describe(const BoolTensor& t, unsigned axis) {
  return "tensor d=" + std::to_string(t.dim()) + " n=" + std::to_string(t.order()) +
         " ones=" + std::to_string(t.size()) + " axis=" + std::to_string(axis);
}

inline std::string describe(const BipartiteGraph& b) {
  return "bipartite left=" + std::to_string(b.left_size()) + " right=" + std::to_string(b.right_size()) +
         " edges=" + std::to_string(b.edges().size());
}

inline PermanentOptions permanent_options(const SearchOptions& opts) {
  PermanentOptions p;
  p.node_budget = opts.node_budget;
  p.threads = opts.threads;
  return p;
}

inline void require_factor_divisible(const Hypergraph& g) {
  if (g.vertex_count() == 0 || g.vertex_count() % g.uniformity() != 0) {
    throw ValidationError("d must divide n (n=" + std::to_string(g.vertex_count()) +
                          ", d=" + std::to_string(g.uniformity()) + ")");
  }
}

/// (count^d / mu)^(1/d) displayed
inline std::string root_display(const Decimal& x, unsigned d) {
  if (x <= 0) return "0";
  return display(pow(x, Decimal(1) / Decimal(d)));
}

/// Fills a report comparing phi^(d*root) * num^n <= base^root * den^n.
inline CheckReport phi_vs_mu(std::string id, const Hypergraph& g, const BigCount& phi, const BigCount& base,
                             const MuValue& m) {
  const unsigned d = g.uniformity();
  CheckReport r;
  r.theorem = std::move(id);
  r.instance = describe(g);
  r.root = m.root;
  r.lhs = ipow(phi, std::uint64_t{d} * m.root) * m.num_pow();
  r.rhs = ipow(base, m.root) * m.den_pow();
  r.verdict = inequality_verdict(r.lhs, r.rhs);
  r.add("phi", to_string(phi));
  r.add("mu", display(m.approx()));
  r.add("bound", root_display(Decimal(base) / m.approx(), d));
  return r;
}

}  // namespace detail

/// phi(G) <= (per M(G) / mu(n,d))^(1/d) for a simple d-uniform G.
inline CheckReport check_factor_count_bound(const Hypergraph& g, const SearchOptions& opts = {}) {
  detail::require_factor_divisible(g);
  if (g.uniformity() < 2) throw ValidationError("uniformity must be at least 2");
  const BigCount phi = count_one_factors(g, opts);
  const BigCount per = permanent(adjacency_tensor(g), detail::permanent_options(opts));
  const MuValue m = mu(g.vertex_count(), g.uniformity());
  CheckReport r = detail::phi_vs_mu("factor-count-bound", g, phi, per, m);
  r.add("permanent", to_string(per));
  return r;
}

/// phi(G) <= ((d-1)!^n prod r_i / mu(n,d))^(1/d), r_i the vertex degrees.
inline CheckReport check_degree_bound(const Hypergraph& g, const SearchOptions& opts = {}) {
  detail::require_factor_divisible(g);
  if (g.uniformity() < 2) throw ValidationError("uniformity must be at least 2");
  const unsigned n = g.vertex_count();
  const unsigned d = g.uniformity();
  BigCount base = ipow(factorial(d - 1), n);
  for (auto r : degrees(g)) base *= r;
  const BigCount phi = count_one_factors(g, opts);
  CheckReport r = detail::phi_vs_mu("degree-bound", g, phi, base, mu(n, d));
  r.add("degree_product_term", to_string(base));
  return r;
}

/// phi(G)^d * Q(d) <= per M(G) for a balanced d-partite G.
inline CheckReport check_partite_bound(const PartiteHypergraph& pg, const SearchOptions& opts = {}) {
  const Hypergraph& g = pg.graph;
  const unsigned d = g.uniformity();
  if (d < 2) throw ValidationError("uniformity must be at least 2");
  if (pg.part_size == 0 || g.vertex_count() != pg.part_size * d) {
    throw ValidationError("partite hypergraph needs d parts of equal size");
  }
  for (const auto& e : g.edges()) {
    std::uint64_t parts = 0;
    for (Vertex v : e) parts |= std::uint64_t{1} << pg.part_of(v);
    if (std::popcount(parts) != static_cast<int>(d)) {
      throw ValidationError("edge " + format_edge(e) + " has two vertices in one part");
    }
  }
  const BigCount phi = count_one_factors(g, opts);
  const BigCount per = permanent(adjacency_tensor(g), detail::permanent_options(opts));
  const BigCount q = count_latin_fixed_column(d, opts);
  CheckReport r;
  r.theorem = "partite-bound";
  r.instance = detail::describe(g) + " part_size=" + std::to_string(pg.part_size);
  r.lhs = ipow(phi, d) * q;
  r.rhs = per;
  r.verdict = inequality_verdict(r.lhs, r.rhs);
  r.add("phi", to_string(phi));
  r.add("permanent", to_string(per));
  r.add("latin_fixed_column", to_string(q));
  r.add("bound", detail::root_display(Decimal(per) / Decimal(q), d));
  return r;
}

/// T(B) <= P(B) / mu(n,d) for a connected d-regular bipartite B with parts of
/// size n, d | n.
inline CheckReport check_decomposition_bound(const BipartiteGraph& b, const SearchOptions& opts = {}) {
  const auto d = b.regular_degree();
  if (!d || *d < 2) throw ValidationError("bipartite graph must be d-regular with d >= 2");
  const unsigned n = b.left_size();
  if (b.right_size() != n) throw ValidationError("bipartite parts must have equal size");
  if (n % *d != 0) throw ValidationError("d must divide the part size");
  if (!b.is_connected()) throw ValidationError("bipartite graph must be connected");
  const BigCount t = count_proper_decompositions(b, opts);
  const BigCount p = count_proper_edge_colorings(b, *d, opts);
  const MuValue m = mu(n, *d);
  CheckReport r;
  r.theorem = "decomposition-bound";
  r.instance = detail::describe(b);
  r.root = m.root;
  r.lhs = ipow(t, m.root) * m.num_pow();
  r.rhs = ipow(p, m.root) * m.den_pow();
  r.verdict = inequality_verdict(r.lhs, r.rhs);
  r.add("decompositions", to_string(t));
  r.add("edge_colorings", to_string(p));
  r.add("mu", display(m.approx()));
  r.add("bound", display(Decimal(p) / m.approx()));
  return r;
}

/// For a d-uniform d-factor F with B = B(F):
///   Delta(F) * R(F) = P(B), Phi(F) * R(F) = T(B), Phi(F) <= Delta(F) / mu(n,d).
inline std::vector<CheckReport> check_orientation_identities(const Hypergraph& f, const SearchOptions& opts = {}) {
  const unsigned n = f.vertex_count();
  const unsigned d = f.uniformity();
  if (d < 2) throw ValidationError("uniformity must be at least 2");
  for (auto deg : degrees(f)) {
    if (deg != d) throw ValidationError("hypergraph is not a d-factor (every degree must equal d)");
  }
  detail::require_factor_divisible(f);
  const BipartiteGraph b = bipartite_representation(f);
  const BigCount delta = count_proper_orientations(f, opts);
  const BigCount phi = count_factorizations(f, true, opts);
  const BigCount rr = multiplicity_product(f);
  const BigCount p = count_proper_edge_colorings(b, d, opts);
  const BigCount t = count_proper_decompositions(b, opts);
  const std::string inst = detail::describe(f);

  std::vector<CheckReport> out;
  auto identity = [&](std::string id, const BigCount& lhs, const BigCount& rhs) {
    CheckReport r;
    r.theorem = std::move(id);
    r.instance = inst;
    r.identity = true;
    r.lhs = lhs;
    r.rhs = rhs;
    r.verdict = identity_verdict(lhs, rhs);
    r.add("orientations", to_string(delta));
    r.add("factorizations", to_string(phi));
    r.add("multiplicity_product", to_string(rr));
    r.add("edge_colorings", to_string(p));
    r.add("decompositions", to_string(t));
    return r;
  };
  out.push_back(identity("orientations-times-multiplicity-equals-colorings", delta * rr, p));
  out.push_back(identity("factorizations-times-multiplicity-equals-decompositions", phi * rr, t));

  const MuValue m = mu(n, d);
  CheckReport r;
  r.theorem = "factorizations-below-orientations";
  r.instance = inst;
  r.root = m.root;
  r.lhs = ipow(phi, m.root) * m.num_pow();
  r.rhs = ipow(delta, m.root) * m.den_pow();
  r.verdict = inequality_verdict(r.lhs, r.rhs);
  r.add("factorizations", to_string(phi));
  r.add("orientations", to_string(delta));
  r.add("mu", display(m.approx()));
  r.add("bound", display(Decimal(delta) / m.approx()));
  out.push_back(std::move(r));
  return out;
}

/// Experimental: phi(G)^3 <= per M(G) for 3-uniform G, i.e. the factor bound
/// with mu replaced by 1. A violation is a counterexample; holding proves
/// nothing.
inline CheckReport check_conjecture_d3(const Hypergraph& g, const SearchOptions& opts = {}) {
  if (g.uniformity() != 3) throw ValidationError("this check needs a 3-uniform hypergraph");
  detail::require_factor_divisible(g);
  const BigCount phi = count_one_factors(g, opts);
  const BigCount per = permanent(adjacency_tensor(g), detail::permanent_options(opts));
  CheckReport r;
  r.theorem = "unit-mu-d3-experiment";
  r.instance = detail::describe(g);
  r.lhs = ipow(phi, 3);
  r.rhs = per;
  r.verdict = inequality_verdict(r.lhs, r.rhs);
  r.add("phi", to_string(phi));
  r.add("permanent", to_string(per));
  r.add("note", "experimental; a holding verdict is not a proof");
  return r;
}

/// per T <= prod of hyperplane counts along axis.
inline CheckReport check_trivial_bound(const BoolTensor& t, unsigned axis, const SearchOptions& opts = {}) {
  const BigCount per = permanent(t, detail::permanent_options(opts));
  const BigCount bound = trivial_upper_bound(t, axis);
  CheckReport r;
  r.theorem = "hyperplane-product-bound";
  r.instance = detail::describe(t, axis);
  r.lhs = per;
  r.rhs = bound;
  r.verdict = inequality_verdict(r.lhs, r.rhs);
  r.add("permanent", to_string(per));
  r.add("bound", to_string(bound));
  return r;
}

/// per T <= prod r_i!^(1/r_i), 3-dimensional only.
inline CheckReport check_dow_gibson(const BoolTensor& t, unsigned axis, const SearchOptions& opts = {}) {
  const DowGibsonBound dg = dow_gibson_bound(t, axis);
  const BigCount per = permanent(t, detail::permanent_options(opts));
  const ExactComparison c = dg.compare(per);
  CheckReport r;
  r.theorem = "factorial-root-bound";
  r.instance = detail::describe(t, axis);
  r.lhs = c.lhs;
  r.rhs = c.rhs;
  r.root = c.power;
  r.verdict = inequality_verdict(r.lhs, r.rhs);
  r.add("permanent", to_string(per));
  r.add("bound", display(dg.approx()));
  r.add("method", c.method);
  return r;
}

/// prod r_i!^(1/r_i) <= prod r_i, 3-dimensional only.
inline CheckReport check_dow_gibson_below_trivial(const BoolTensor& t, unsigned axis) {
  const DowGibsonBound dg = dow_gibson_bound(t, axis);
  const BigCount triv = trivial_upper_bound(t, axis);
  const ExactComparison c = dg.compare(triv);
  CheckReport r;
  r.theorem = "factorial-root-below-hyperplane-product";
  r.instance = detail::describe(t, axis);
  // c compares triv^power against bound^power; report bound <= triv
  r.lhs = c.rhs;
  r.rhs = c.lhs;
  r.root = c.power;
  r.verdict = inequality_verdict(r.lhs, r.rhs);
  r.add("factorial_root_bound", display(dg.approx()));
  r.add("hyperplane_product", to_string(triv));
  r.add("method", c.method);
  return r;
}

/// per A >= ((k-1)^(k-1) / k^(k-2))^n for a k-regular nonnegative integer
/// matrix, compared as (k-1)^((k-1)n) <= per * k^((k-2)n) (k >= 2), and as
/// 1 <= per for k = 1.
inline CheckReport check_schrijver(const IntMatrix2D& a, const SearchOptions& opts = {}) {
  const auto k = a.regular_degree();
  if (!k || *k == 0) throw ValidationError("matrix must be k-regular with k >= 1");
  const unsigned n = a.order();
  const BigCount per = permanent_2d_int(a, opts);
  CheckReport r;
  r.theorem = "regular-matrix-lower-bound";
  r.instance = "matrix n=" + std::to_string(n) + " k=" + std::to_string(*k);
  if (*k == 1) {
    r.lhs = 1;
    r.rhs = per;
  } else {
    r.lhs = ipow(BigCount(*k - 1), (*k - 1) * n);
    r.rhs = per * ipow(BigCount(*k), (*k - 2) * n);
  }
  r.verdict = inequality_verdict(r.lhs, r.rhs);
  r.add("permanent", to_string(per));
  r.add("bound", display(to_decimal(schrijver_lower_bound(*k, n))));
  return r;
}

/// n! / (d!^(n/d) (n/d)!)
inline BigCount phi_complete_exact(unsigned n, unsigned d) {
  if (d == 0 || n % d != 0) throw ValidationError("d must divide n");
  return factorial(n) / (ipow(factorial(d), n / d) * factorial(n / d));
}

/// A main term with its o(1) factors dropped.
struct MainTerm {
  std::string name;
  std::string formula;
  Decimal value;
};

struct MainTermReport {
  unsigned n = 0;
  unsigned d = 0;
  BigCount factors_per_factorization;  // t = C(n-1, d-1)
  std::vector<BigCount> hyperplane_ones;  // R_i = (t-i)(d-1)!, i = 0..t-1
  std::vector<MainTerm> terms;
  // Exact 1-factorization counts of the complete hypergraph when small enough.
  std::optional<FactorizationCount> exact;
  static constexpr const char* kLabel = "main terms only; not certified bounds";
};

inline MainTermReport factorization_bound_main_terms(unsigned n, unsigned d, const SearchOptions& opts = {},
                                                     bool with_exact = true) {
  if (d < 2) throw ValidationError("d must be at least 2");
  if (n < d || n % d != 0) throw ValidationError("d must divide n and n >= d");
  MainTermReport rep;
  rep.n = n;
  rep.d = d;
  const BigCount t = binomial(n - 1, d - 1);
  rep.factors_per_factorization = t;
  const BigCount fd1 = factorial(d - 1);
  const auto tt = static_cast<std::uint64_t>(t);
  for (std::uint64_t i = 0; i < tt; ++i) rep.hyperplane_ones.push_back((t - i) * fd1);

  const Decimal nn(n);
  const Decimal dd(d);
  const Decimal e = exp(Decimal(1));
  const Decimal expo = pow(nn, dd) / Decimal(factorial(d));  // n^d / d!
  const Decimal npow = pow(nn, dd - 1);                      // n^(d-1)

  rep.terms.push_back({"trivial-factorization", "(n^(d-1)/(d-1)!)^(n^d/d!)",
                       pow(npow / Decimal(fd1), expo)});
  const MuValue m = mu(n, d);
  rep.terms.push_back({"factorization-upper", "(n^(d-1)/(mu^(1/n) e^d))^(n^d/d!)",
                       pow(npow / (m.per_vertex() * pow(e, dd)), expo)});
  if (d == 3) {
    rep.terms.push_back({"factorization-upper-d3", "(3 n^2/(2^(3/2) e^3))^(n^3/6)",
                         pow(Decimal(3) * nn * nn / (pow(Decimal(2), Decimal(1.5)) * pow(e, Decimal(3))), expo)});
  } else if (d >= 4) {
    const Decimal fd(factorial(d));
    rep.terms.push_back({"factorization-upper-d4plus", "((d/e)^d n^(d-1)/d!^(2-1/d))^(n^d/d!)",
                         pow(pow(dd / e, dd) * npow / pow(fd, Decimal(2) - Decimal(1) / dd), expo)});
  }
  const BoolTensor full = adjacency_tensor(complete_hypergraph(n, d));
  rep.terms.push_back({"permanent-factorial-root", "n!^(d-2) prod S(r_i/n^(d-2)) on M(complete)",
                       asym_main_term(full, 0)});
  if (d == 2) {
    rep.terms.push_back({"graph-factorization-lower", "(n/(4e^2))^(n^2/2)",
                         pow(nn / (Decimal(4) * e * e), nn * nn / 2)});
    rep.terms.push_back({"graph-factorization-upper", "(n/e^2)^(n^2/2)", pow(nn / (e * e), nn * nn / 2)});
  }
  if (with_exact) {
    const Hypergraph g = complete_hypergraph(n, d);
    if (g.edge_count() <= 70) rep.exact = count_factorizations_both(g, opts);
  }
  return rep;
}

inline nlohmann::ordered_json to_json(const MainTermReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["label"] = MainTermReport::kLabel;
  j["t"] = to_string(r.factors_per_factorization);
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (const auto& x : r.hyperplane_ones) rs.push_back(to_string(x));
  j["R"] = rs;
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (const auto& t : r.terms) {
    terms[t.name] = {{"formula", t.formula}, {"value", display(t.value)}};
  }
  j["main_terms"] = terms;
  if (r.exact) {
    j["exact_factorizations"] = {{"ordered", to_string(r.exact->ordered)},
                                 {"unordered", to_string(r.exact->unordered)}};
  }
  return j;
}

}  // namespace hyperperm
