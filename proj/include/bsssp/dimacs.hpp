#pragma once

// DIMACS shortest-path style text:
//
//   c free-form comment
//   p sp <n> <m>
//   a <u> <v> <w>        1-based endpoints, non-negative decimal weight
//
// Each "a" line is one undirected edge. Files written by directed tools that
// list both directions load as pairs of parallel edges.

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "bsssp/errors.hpp"
#include "bsssp/graph.hpp"

namespace bsssp {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::optional<double> parse_double(std::string_view s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// Shortest decimal text that parses back to exactly w.
inline std::string format_weight(double w) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, p);
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
  std::optional<std::uint64_t> n;
  std::uint64_t declared_m = 0;
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (n) throw ParseError(lineno, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "sp") throw ParseError(lineno, "expected 'p sp <n> <m>'");
      auto pn = detail::parse_uint(tok[2]);
      auto pm = detail::parse_uint(tok[3]);
      if (!pn || !pm) throw ParseError(lineno, "bad vertex or edge count");
      if (*pn >= kNoVertex) throw OutOfRange("vertex count too large");
      n = pn;
      declared_m = *pm;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(declared_m, 1u << 26)));
      continue;
    }

    if (tok[0] == "a") {
      if (!n) throw ParseError(lineno, "edge before problem line");
      if (tok.size() != 4) throw ParseError(lineno, "expected 'a <u> <v> <w>'");
      auto u = detail::parse_uint(tok[1]);
      auto v = detail::parse_uint(tok[2]);
      auto w = detail::parse_double(tok[3]);
      if (!u || !v || !w) throw ParseError(lineno, "bad edge fields");
      if (*u < 1 || *u > *n || *v < 1 || *v > *n) {
        throw OutOfRange("line " + std::to_string(lineno) + ": vertex id outside [1, " +
                         std::to_string(*n) + "]");
      }
      if (!valid_weight(*w)) {
        throw BadWeight("line " + std::to_string(lineno) + ": weight must be finite and non-negative");
      }
      edges.push_back(Edge{static_cast<VertexId>(*u - 1), static_cast<VertexId>(*v - 1), *w});
      continue;
    }

    throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
  }

  if (!n) throw ParseError(lineno, "missing problem line");
  if (edges.size() != declared_m) {
    throw ParseError(lineno, "problem line declares " + std::to_string(declared_m) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return Graph(static_cast<std::size_t>(*n), std::move(edges));
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline void write_graph(const Graph& g, std::ostream& out) {
  out << "p sp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "a " << (e.u + 1) << ' ' << (e.v + 1) << ' ' << detail::format_weight(e.w) << '\n';
  }
}

inline std::string write_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(g, out);
  return out.str();
}

}  // namespace bsssp
