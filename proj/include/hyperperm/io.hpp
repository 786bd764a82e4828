#pragma once

// Text formats.
//   tensor:     "d n", then one unit entry per line (d coordinates)
//   hypergraph: "n m d", then m edges (d vertices each); repeats = multiplicity
//   matrix:     "n", then n rows of n nonnegative integers
// Indices are 0-based. '#' starts a comment that runs to the end of the line.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperperm/hypergraph.hpp"
#include "hyperperm/permanent.hpp"
#include "hyperperm/tensor.hpp"

namespace hyperperm {

namespace detail {

struct NumberLine {
  std::size_t line_no;
  std::vector<std::uint64_t> values;
};

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& what) {
  throw ValidationError("line " + std::to_string(line_no) + ": " + what);
}

/// Non-empty, comment-stripped lines as unsigned integers.
inline std::vector<NumberLine> number_lines(std::istream& in) {
  std::vector<NumberLine> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok;
    NumberLine nl{line_no, {}};
    while (ss >> tok) {
      std::uint64_t v = 0;
      const char* end = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(tok.data(), end, v);
      if (ec != std::errc() || ptr != end) parse_fail(line_no, "expected a nonnegative integer, got '" + tok + "'");
      nl.values.push_back(v);
    }
    if (!nl.values.empty()) out.push_back(std::move(nl));
  }
  return out;
}

inline unsigned small(std::uint64_t v, std::size_t line_no, const char* what) {
  if (v > 1'000'000) parse_fail(line_no, std::string(what) + " too large");
  return static_cast<unsigned>(v);
}

}  // namespace detail

inline BoolTensor parse_tensor(std::istream& in) {
  const auto lines = detail::number_lines(in);
  if (lines.empty()) throw ValidationError("empty input: expected header \"d n\"");
  const auto& h = lines.front();
  if (h.values.size() != 2) detail::parse_fail(h.line_no, "tensor header must be \"d n\"");
  const unsigned d = detail::small(h.values[0], h.line_no, "dimension");
  const unsigned n = detail::small(h.values[1], h.line_no, "order");
  if (d < 2) detail::parse_fail(h.line_no, "dimension must be at least 2");
  if (n < 1) detail::parse_fail(h.line_no, "order must be at least 1");
  std::vector<MultiIndex> ones;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.values.size() != d) {
      detail::parse_fail(l.line_no, "expected " + std::to_string(d) + " coordinates, got " +
                                        std::to_string(l.values.size()));
    }
    MultiIndex idx;
    for (auto v : l.values) {
      if (v >= n) detail::parse_fail(l.line_no, "coordinate " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
      idx.push_back(static_cast<Coord>(v));
    }
    ones.push_back(std::move(idx));
  }
  return BoolTensor(d, n, std::move(ones));
}

inline Hypergraph parse_hypergraph(std::istream& in) {
  const auto lines = detail::number_lines(in);
  if (lines.empty()) throw ValidationError("empty input: expected header \"n m d\"");
  const auto& h = lines.front();
  if (h.values.size() != 3) detail::parse_fail(h.line_no, "hypergraph header must be \"n m d\"");
  const unsigned n = detail::small(h.values[0], h.line_no, "vertex count");
  const std::uint64_t m = h.values[1];
  const unsigned d = detail::small(h.values[2], h.line_no, "uniformity");
  if (lines.size() - 1 != m) {
    throw ValidationError("header declares " + std::to_string(m) + " edges, found " +
                          std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.values.size() != d) {
      detail::parse_fail(l.line_no, "expected " + std::to_string(d) + " vertices, got " +
                                        std::to_string(l.values.size()));
    }
    Edge e;
    for (auto v : l.values) {
      if (v >= n) detail::parse_fail(l.line_no, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      e.push_back(static_cast<Vertex>(v));
    }
    try {
      edges.push_back(Hypergraph(n, d, {e}).edges().front());
    } catch (const ValidationError& err) {
      detail::parse_fail(l.line_no, err.what());
    }
  }
  return Hypergraph(n, d, std::move(edges));
}

inline IntMatrix2D parse_matrix(std::istream& in) {
  const auto lines = detail::number_lines(in);
  if (lines.empty()) throw ValidationError("empty input: expected header \"n\"");
  const auto& h = lines.front();
  if (h.values.size() != 1) detail::parse_fail(h.line_no, "matrix header must be \"n\"");
  const unsigned n = detail::small(h.values[0], h.line_no, "order");
  if (n < 1) detail::parse_fail(h.line_no, "order must be at least 1");
  if (lines.size() - 1 != n) {
    throw ValidationError("matrix of order " + std::to_string(n) + " needs " + std::to_string(n) +
                          " rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::uint64_t> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].values.size() != n) detail::parse_fail(lines[i].line_no, "row must have " + std::to_string(n) + " entries");
    entries.insert(entries.end(), lines[i].values.begin(), lines[i].values.end());
  }
  return IntMatrix2D(n, std::move(entries));
}

enum class InputKind { tensor, hypergraph };

/// By the number of values on the header line: 2 for a tensor, 3 for a
/// hypergraph.
inline InputKind detect_kind(const std::string& text) {
  std::istringstream in(text);
  const auto lines = detail::number_lines(in);
  if (lines.empty()) throw ValidationError("empty input");
  switch (lines.front().values.size()) {
    case 2: return InputKind::tensor;
    case 3: return InputKind::hypergraph;
    default:
      detail::parse_fail(lines.front().line_no, "header must be \"d n\" (tensor) or \"n m d\" (hypergraph)");
  }
}

template <typename Parse>
auto parse_text(const std::string& text, Parse parse) {
  std::istringstream in(text);
  return parse(in);
}

/// Whole file, or standard input for "-".
inline std::string read_input(const std::string& path, std::istream& stdin_stream = std::cin) {
  std::ostringstream buf;
  if (path == "-" || path.empty()) {
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open " + path);
  buf << f.rdbuf();
  return buf.str();
}

inline std::string write_tensor(const BoolTensor& t) {
  std::ostringstream os;
  os << t.dim() << ' ' << t.order() << '\n';
  for (const auto& idx : t.ones()) {
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? " " : "") << idx[k];
    os << '\n';
  }
  return os.str();
}

inline std::string write_hypergraph(const Hypergraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.uniformity() << '\n';
  for (const auto& e : g.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? " " : "") << e[k];
    os << '\n';
  }
  return os.str();
}

inline std::string write_matrix(const IntMatrix2D& m) {
  std::ostringstream os;
  os << m.order() << '\n';
  for (unsigned i = 0; i < m.order(); ++i) {
    for (unsigned j = 0; j < m.order(); ++j) os << (j ? " " : "") << m.at(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace hyperperm
