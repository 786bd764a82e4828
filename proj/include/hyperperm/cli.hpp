#pragma once

// Command-line front end. parse_command_line fills a RunConfig; run executes
// it against explicit streams so tests can drive it in-process.
//
// Exit codes: 0 ok / inequality holds, 1 a check was violated, 2 bad input,
// 3 node budget exhausted.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperperm/bounds.hpp"
#include "hyperperm/exact.hpp"
#include "hyperperm/factorization.hpp"
#include "hyperperm/generators.hpp"
#include "hyperperm/hypergraph.hpp"
#include "hyperperm/io.hpp"
#include "hyperperm/latin.hpp"
#include "hyperperm/permanent.hpp"

namespace hyperperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
  std::string command;  // permanent, factors, ..., bounds
  std::string kind;     // verify target or gen family
  std::string input = "-";
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;
  std::string format = "text";
  bool unordered = false;
  bool list = false;
  std::optional<unsigned> axis;
  unsigned n = 0;
  unsigned d = 0;
  unsigned part_size = 0;
  double density = 1.0;
  std::uint64_t seed = 1;

  void validate() const {
    if (node_budget == 0) throw ValidationError("--budget must be positive");
    if (threads == 0) throw ValidationError("--threads must be at least 1");
    if (format != "text" && format != "json") throw ValidationError("--format must be text or json");
  }
  SearchOptions search() const { return {node_budget, threads}; }
};

inline const std::vector<std::string>& verify_kinds() {
  static const std::vector<std::string> k{"theorem4", "theorem5", "lemma4", "identities", "corollary3",
                                          "schrijver", "dow-gibson", "trivial", "conjecture-d3"};
  return k;
}

/// Returns an exit code when parsing ends the run (help, usage error).
inline std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& cfg,
                                             std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact permanents, hypergraph 1-factors and factorization bounds"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", cfg.node_budget, "Search node budget")->check(CLI::PositiveNumber);
  cfg.threads = default_thread_count();
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto file_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", cfg.input, "Input file, '-' for stdin");
    return c;
  };
  auto* perm = file_cmd("permanent", "Permanent of a tensor or of a hypergraph's adjacency tensor");
  perm->add_option("--axis", cfg.axis, "Axis for the hyperplane bounds");
  auto* factors = file_cmd("factors", "Count 1-factors");
  factors->add_flag("--list", cfg.list, "Print every 1-factor");
  auto* fz = file_cmd("factorizations", "Count 1-factorizations");
  fz->add_flag("--unordered", cfg.unordered, "Count unordered factorizations");
  file_cmd("orientations", "Count proper orientations");
  auto* latin = app.add_subcommand("latin", "Count latin squares");
  latin->add_option("-n", cfg.n, "Order")->required();
  auto* u = app.add_subcommand("u-tensor", "Print the all-distinct tensor U(d)");
  u->add_option("-d", cfg.d, "Dimension")->required();

  auto* gen = app.add_subcommand("gen", "Generate a hypergraph");
  gen->add_option("family", cfg.kind, "complete | partite | random")
      ->required()
      ->check(CLI::IsMember({"complete", "partite", "random"}));
  gen->add_option("-n", cfg.n, "Vertices (complete, random)");
  gen->add_option("-d", cfg.d, "Uniformity")->required();
  gen->add_option("-k,--part-size", cfg.part_size, "Part size (partite)");
  gen->add_option("--density", cfg.density, "Edge probability (partite, random)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", cfg.seed, "Random seed");

  auto* verify = app.add_subcommand("verify", "Check an inequality or identity exactly");
  verify->add_option("check", cfg.kind, "Which check")->required()->check(CLI::IsMember(verify_kinds()));
  verify->add_option("file", cfg.input, "Input file, '-' for stdin");
  verify->add_option("--axis", cfg.axis, "Axis (tensor checks)");
  verify->add_option("-k,--part-size", cfg.part_size, "Part size (partite check), default n/d");

  auto* bounds = app.add_subcommand("bounds", "Main terms of the factorization estimates (not certified)");
  bounds->add_option("-n", cfg.n, "Vertices")->required();
  bounds->add_option("-d", cfg.d, "Uniformity")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return std::nullopt;
}

namespace detail {

using Json = nlohmann::ordered_json;

/// key: value lines in text mode, one JSON object in json mode.
class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out) : json_(cfg.format == "json"), out_(out) {}

  void field(const std::string& key, const std::string& value) {
    if (json_) {
      obj_[key] = value;
    } else {
      out_ << key << ": " << value << '\n';
    }
  }
  void field(const std::string& key, const char* value) { field(key, std::string(value)); }
  void field(const std::string& key, const BigCount& value) { field(key, to_string(value)); }
  void field(const std::string& key, const Json& value) {
    if (json_) {
      obj_[key] = value;
    } else {
      out_ << key << ": " << value.dump() << '\n';
    }
  }
  void finish() {
    if (json_) out_ << obj_.dump(2) << '\n';
  }

 private:
  bool json_;
  std::ostream& out_;
  Json obj_ = Json::object();
};

inline void print_report_text(const CheckReport& r, std::ostream& out) {
  out << "check: " << r.theorem << '\n'
      << "instance: " << r.instance << '\n'
      << "lhs: " << to_string(r.lhs) << '\n'
      << "rhs: " << to_string(r.rhs) << '\n'
      << "root: " << r.root << '\n'
      << "verdict: " << to_string(r.verdict) << '\n';
  for (const auto& [k, v] : r.decimals) out << k << ": " << v << '\n';
}

inline int emit_reports(const std::vector<CheckReport>& reports, const RunConfig& cfg, std::ostream& out,
                        std::ostream& err) {
  if (cfg.format == "json") {
    if (reports.size() == 1) {
      out << to_json(reports.front()).dump(2) << '\n';
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) out << '\n';
      print_report_text(reports[i], out);
    }
  }
  int code = kExitOk;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::violated) {
      err << "*** VIOLATED: " << r.theorem << " on " << r.instance << ": lhs " << to_string(r.lhs)
          << " > rhs " << to_string(r.rhs) << " ***\n";
      code = kExitViolated;
    }
  }
  return code;
}

inline Hypergraph load_hypergraph(const RunConfig& cfg, std::istream& in) {
  return parse_text(read_input(cfg.input, in), [](std::istream& s) { return parse_hypergraph(s); });
}

inline BoolTensor load_tensor_or_adjacency(const RunConfig& cfg, std::istream& in) {
  const std::string text = read_input(cfg.input, in);
  if (detect_kind(text) == InputKind::tensor) {
    return parse_text(text, [](std::istream& s) { return parse_tensor(s); });
  }
  return adjacency_tensor(parse_text(text, [](std::istream& s) { return parse_hypergraph(s); }));
}

inline int cmd_permanent(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const BoolTensor t = load_tensor_or_adjacency(cfg, in);
  const unsigned axis = cfg.axis.value_or(0);
  if (axis >= t.dim()) throw ValidationError("--axis out of range");
  PermanentOptions po;
  po.node_budget = cfg.node_budget;
  po.threads = cfg.threads;
  const BigCount per = permanent(t, po);
  Emitter e(cfg, out);
  e.field("dimension", std::to_string(t.dim()));
  e.field("order", std::to_string(t.order()));
  e.field("ones", std::to_string(t.size()));
  e.field("permanent", per);
  e.field("axis", std::to_string(axis));
  e.field("hyperplane_product_bound", trivial_upper_bound(t, axis));
  if (t.dim() == 3) e.field("factorial_root_bound", display(dow_gibson_bound(t, axis).approx()));
  e.finish();
  return kExitOk;
}

inline std::string edge_list(const std::vector<Edge>& edges) {
  std::string s;
  for (const auto& e : edges) s += (s.empty() ? "" : " ") + format_edge(e);
  return s;
}

inline int cmd_factors(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Hypergraph g = load_hypergraph(cfg, in);
  Emitter e(cfg, out);
  if (cfg.list) {
    const auto fs = enumerate_one_factors(g, cfg.search());
    e.field("one_factors", BigCount(fs.size()));
    Json arr = Json::array();
    for (const auto& f : fs) arr.push_back(edge_list(f.edges));
    if (cfg.format == "json") {
      e.field("factors", arr);
    } else {
      for (const auto& f : fs) out << "factor: " << edge_list(f.edges) << '\n';
    }
  } else {
    e.field("one_factors", count_one_factors(g, cfg.search()));
  }
  e.finish();
  return kExitOk;
}

inline int cmd_factorizations(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Hypergraph g = load_hypergraph(cfg, in);
  const auto c = count_factorizations_both(g, cfg.search());
  Emitter e(cfg, out);
  e.field("convention", cfg.unordered ? "unordered" : "ordered");
  e.field("factorizations", cfg.unordered ? c.unordered : c.ordered);
  e.finish();
  return kExitOk;
}

inline int cmd_orientations(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Hypergraph g = load_hypergraph(cfg, in);
  Emitter e(cfg, out);
  e.field("proper_orientations", count_proper_orientations(g, cfg.search()));
  e.field("multiplicity_product", multiplicity_product(g));
  e.finish();
  return kExitOk;
}

inline int cmd_latin(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw ValidationError("-n must be at least 1");
  const BigCount q = count_latin_fixed_column(cfg.n, cfg.search());
  Emitter e(cfg, out);
  e.field("n", std::to_string(cfg.n));
  e.field("Q", q);
  if (cfg.n <= 5) {
    e.field("L", count_latin_squares(cfg.n, cfg.search()));
  } else {
    // full enumeration is out of reach; L = n! Q
    e.field("L", factorial(cfg.n) * q);
    e.field("L_method", "n! * Q");
  }
  e.finish();
  return kExitOk;
}

inline int cmd_u_tensor(const RunConfig& cfg, std::ostream& out) {
  const BoolTensor u = build_U(cfg.d);
  if (cfg.format == "json") {
    Json j;
    j["dimension"] = u.dim();
    j["order"] = u.order();
    Json ones = Json::array();
    for (const auto& idx : u.ones()) ones.push_back(idx);
    j["ones"] = ones;
    out << j.dump(2) << '\n';
  } else {
    out << write_tensor(u);
  }
  return kExitOk;
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  Rng rng(cfg.seed);
  if (cfg.kind == "complete") {
    out << write_hypergraph(complete_hypergraph(cfg.n, cfg.d));
  } else if (cfg.kind == "random") {
    out << write_hypergraph(random_hypergraph(cfg.n, cfg.d, cfg.density, rng));
  } else {
    const unsigned k = cfg.part_size ? cfg.part_size : (cfg.d ? cfg.n / cfg.d : 0);
    if (k == 0) throw ValidationError("partite generator needs --part-size (or -n divisible by -d)");
    if (cfg.density >= 1.0) {
      out << write_hypergraph(complete_partite_hypergraph(k, cfg.d).graph);
    } else {
      out << write_hypergraph(random_partite_hypergraph(k, cfg.d, cfg.density, rng).graph);
    }
  }
  return kExitOk;
}

inline int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto opts = cfg.search();
  std::vector<CheckReport> reports;
  const std::string& k = cfg.kind;
  if (k == "schrijver") {
    const IntMatrix2D m = parse_text(read_input(cfg.input, in), [](std::istream& s) { return parse_matrix(s); });
    reports.push_back(check_schrijver(m, opts));
  } else if (k == "dow-gibson" || k == "trivial") {
    const BoolTensor t = load_tensor_or_adjacency(cfg, in);
    std::vector<unsigned> axes;
    if (cfg.axis) {
      if (*cfg.axis >= t.dim()) throw ValidationError("--axis out of range");
      axes.push_back(*cfg.axis);
    } else {
      for (unsigned a = 0; a < t.dim(); ++a) axes.push_back(a);
    }
    for (unsigned a : axes) {
      if (k == "trivial") {
        reports.push_back(check_trivial_bound(t, a, opts));
      } else {
        reports.push_back(check_dow_gibson(t, a, opts));
        reports.push_back(check_dow_gibson_below_trivial(t, a));
      }
    }
  } else {
    const Hypergraph g = load_hypergraph(cfg, in);
    if (k == "theorem4") {
      reports.push_back(check_factor_count_bound(g, opts));
    } else if (k == "corollary3") {
      reports.push_back(check_degree_bound(g, opts));
    } else if (k == "conjecture-d3") {
      reports.push_back(check_conjecture_d3(g, opts));
    } else if (k == "theorem5") {
      const unsigned d = g.uniformity();
      unsigned part = cfg.part_size;
      if (part == 0) {
        if (d == 0 || g.vertex_count() % d != 0) throw ValidationError("cannot split vertices into d equal parts");
        part = g.vertex_count() / d;
      }
      std::vector<Edge> edges = g.edges();
      reports.push_back(check_partite_bound(balanced_partite_hypergraph(part, d, std::move(edges)), opts));
    } else if (k == "lemma4") {
      reports.push_back(check_decomposition_bound(bipartite_representation(g), opts));
    } else if (k == "identities") {
      reports = check_orientation_identities(g, opts);
    }
  }
  return emit_reports(reports, cfg, out, err);
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const MainTermReport r = factorization_bound_main_terms(cfg.n, cfg.d, cfg.search());
  if (cfg.format == "json") {
    out << to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  out << "n: " << r.n << "\nd: " << r.d << '\n';
  out << "note: " << MainTermReport::kLabel << '\n';
  out << "t: " << to_string(r.factors_per_factorization) << '\n';
  out << "R_0: " << to_string(r.hyperplane_ones.front()) << '\n';
  out << "R_" << r.hyperplane_ones.size() - 1 << ": " << to_string(r.hyperplane_ones.back()) << '\n';
  for (const auto& t : r.terms) out << t.name << ": " << display(t.value) << "   " << t.formula << '\n';
  if (r.exact) {
    out << "exact_factorizations_ordered: " << to_string(r.exact->ordered) << '\n';
    out << "exact_factorizations_unordered: " << to_string(r.exact->unordered) << '\n';
  }
  return kExitOk;
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  try {
    cfg.validate();
    const std::string& c = cfg.command;
    if (c == "permanent") return detail::cmd_permanent(cfg, in, out);
    if (c == "factors") return detail::cmd_factors(cfg, in, out);
    if (c == "factorizations") return detail::cmd_factorizations(cfg, in, out);
    if (c == "orientations") return detail::cmd_orientations(cfg, in, out);
    if (c == "latin") return detail::cmd_latin(cfg, out);
    if (c == "u-tensor") return detail::cmd_u_tensor(cfg, out);
    if (c == "gen") return detail::cmd_gen(cfg, out);
    if (c == "verify") return detail::cmd_verify(cfg, in, out, err);
    if (c == "bounds") return detail::cmd_bounds(cfg, out);
    err << "error: unknown command '" << c << "'\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget)\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

/// parse + run
inline int run_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr,
                std::istream& in = std::cin) {
  RunConfig cfg;
  if (auto code = parse_command_line(argc, argv, cfg, out, err)) return *code;
  return run(cfg, out, err, in);
}

}  // namespace hyperperm::cli
