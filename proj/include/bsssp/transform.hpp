#pragma once

// Degree-reducing, distance-preserving transformations.
//
// A vertex is split into pieces joined by zero-weight edges (a cycle when
// there are three or more pieces, a single edge for two). Its incident edges
// are dealt out to the pieces in adjacency order. Any representative of u is
// then at distance dist(u, v) from any representative of v.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsssp/errors.hpp"
#include "bsssp/graph.hpp"

namespace bsssp {

struct TransformedGraph {
  Graph graph;
  std::vector<std::size_t> rep_offsets;  // original v owns reps_flat[rep_offsets[v] .. rep_offsets[v+1])
  std::vector<VertexId> reps_flat;
  std::vector<VertexId> origin;  // transformed vertex -> original vertex
  std::size_t cap = 0;           // degree bound the construction guarantees

  std::size_t original_vertex_count() const noexcept { return rep_offsets.size() - 1; }

  std::span<const VertexId> reps(VertexId v) const noexcept {
    return {reps_flat.data() + rep_offsets[v], reps_flat.data() + rep_offsets[v + 1]};
  }

  VertexId representative(VertexId v) const noexcept { return reps_flat[rep_offsets[v]]; }
};

namespace detail {

// pieces_of(degree) -> (piece count, arcs per piece)
template <class PieceRule>
TransformedGraph split_vertices(const Graph& g, std::size_t cap, PieceRule pieces_of) {
  const std::size_t n = g.vertex_count();
  TransformedGraph t;
  t.cap = cap;
  t.rep_offsets.assign(n + 1, 0);

  std::vector<std::size_t> slice(n);
  for (VertexId v = 0; v < n; ++v) {
    auto [pieces, per_piece] = pieces_of(g.degree(v));
    slice[v] = per_piece;
    t.rep_offsets[v + 1] = t.rep_offsets[v] + pieces;
  }
  const std::size_t nt = t.rep_offsets[n];
  t.reps_flat.resize(nt);
  t.origin.resize(nt);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = t.rep_offsets[v]; i < t.rep_offsets[v + 1]; ++i) {
      t.reps_flat[i] = static_cast<VertexId>(i);
      t.origin[i] = v;
    }
  }

  // Piece holding each end of each original edge. A self-loop has both ends
  // in one adjacency list; the first arc takes slot 0, the second slot 1.
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<char> first_seen(g.edge_count(), 0);
  for (VertexId v = 0; v < n; ++v) {
    auto arcs = g.neighbors(v);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const auto piece = static_cast<VertexId>(t.rep_offsets[v] + i / slice[v]);
      const EdgeId e = arcs[i].edge;
      if (!first_seen[e]) {
        first_seen[e] = 1;
        edges[e].u = piece;
      } else {
        edges[e].v = piece;
      }
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    const auto base = static_cast<VertexId>(t.rep_offsets[v]);
    const auto pieces = static_cast<VertexId>(t.rep_offsets[v + 1] - t.rep_offsets[v]);
    if (pieces == 2) {
      edges.push_back(Edge{base, base + 1, 0.0});
    } else if (pieces >= 3) {
      for (VertexId j = 0; j < pieces; ++j) edges.push_back(Edge{base + j, base + (j + 1) % pieces, 0.0});
    }
  }

  t.graph = Graph(nt, std::move(edges));
  return t;
}

}  // namespace detail

// Every vertex of degree d >= 1 becomes d pieces, one per incident edge.
// Transformed degrees are at most 3.
inline TransformedGraph constant_degree_transform(const Graph& g) {
  return detail::split_vertices(g, 3, [](std::size_t d) {
    return std::pair<std::size_t, std::size_t>{std::max<std::size_t>(d, 1), 1};
  });
}

// Vertices of degree above cap become ceil(d / (cap-2)) pieces holding
// consecutive adjacency slices of cap-2 edges; others are kept whole.
inline TransformedGraph degree_cap_transform(const Graph& g, std::size_t cap) {
  if (cap < 3) throw BadCap("degree cap must be at least 3, got " + std::to_string(cap));
  return detail::split_vertices(g, cap, [cap](std::size_t d) {
    if (d <= cap) return std::pair<std::size_t, std::size_t>{1, std::max<std::size_t>(d, 1)};
    const std::size_t per = cap - 2;
    return std::pair<std::size_t, std::size_t>{(d + per - 1) / per, per};
  });
}

// Singleton representatives; lets the pipeline run on the input as-is.
inline TransformedGraph identity_transform(const Graph& g) {
  return detail::split_vertices(g, validate(g).max_degree, [](std::size_t d) {
    return std::pair<std::size_t, std::size_t>{1, std::max<std::size_t>(d, 1)};
  });
}

// ceil(m/n) + 2, the cap used for moderately dense inputs; never below 3.
inline std::size_t default_degree_cap(const Graph& g) {
  const std::size_t n = std::max<std::size_t>(g.vertex_count(), 1);
  return std::max<std::size_t>(3, (g.edge_count() + n - 1) / n + 2);
}

inline std::vector<Weight> lift_distances(const TransformedGraph& t, std::span<const Weight> dist_t) {
  if (dist_t.size() != t.graph.vertex_count()) {
    throw InternalInconsistency("distance array does not match the transformed graph");
  }
  const std::size_t n = t.original_vertex_count();
  std::vector<Weight> out(n);
  for (VertexId v = 0; v < n; ++v) {
    auto reps = t.reps(v);
    const Weight d = dist_t[reps[0]];
    for (VertexId r : reps.subspan(1)) {
      if (dist_t[r] != d) {
        throw InternalInconsistency("representatives of vertex " + std::to_string(v) +
                                    " carry different distances");
      }
    }
    out[v] = d;
  }
  return out;
}

struct TransformMode {
  enum class Kind { none, cycle3, cap };
  Kind kind = Kind::cycle3;
  std::size_t cap = 0;  // Kind::cap only; 0 selects default_degree_cap

  friend bool operator==(const TransformMode&, const TransformMode&) = default;
};

inline std::string to_string(const TransformMode& m) {
  switch (m.kind) {
    case TransformMode::Kind::none: return "none";
    case TransformMode::Kind::cycle3: return "cycle3";
    case TransformMode::Kind::cap: return m.cap == 0 ? "cap:auto" : "cap:" + std::to_string(m.cap);
  }
  return "?";
}

// "none", "cycle3", "cap:<d>" or "cap:auto".
inline std::optional<TransformMode> parse_transform_mode(std::string_view s) {
  if (s == "none") return TransformMode{TransformMode::Kind::none, 0};
  if (s == "cycle3") return TransformMode{TransformMode::Kind::cycle3, 0};
  if (s.substr(0, 4) != "cap:") return std::nullopt;
  auto rest = s.substr(4);
  if (rest == "auto") return TransformMode{TransformMode::Kind::cap, 0};
  std::size_t cap = 0;
  if (rest.empty()) return std::nullopt;
  for (char c : rest) {
    if (c < '0' || c > '9') return std::nullopt;
    cap = cap * 10 + static_cast<std::size_t>(c - '0');
    if (cap > (1u << 30)) return std::nullopt;
  }
  return TransformMode{TransformMode::Kind::cap, cap};
}

inline TransformedGraph apply_transform(const Graph& g, const TransformMode& mode) {
  switch (mode.kind) {
    case TransformMode::Kind::none: return identity_transform(g);
    case TransformMode::Kind::cycle3: return constant_degree_transform(g);
    case TransformMode::Kind::cap:
      return degree_cap_transform(g, mode.cap == 0 ? default_degree_cap(g) : mode.cap);
  }
  return identity_transform(g);
}

}  // namespace bsssp
