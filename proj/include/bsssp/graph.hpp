#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bsssp/errors.hpp"

namespace bsssp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = double;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Distance of a vertex the source cannot reach. Lives outside the
// comparison-addition model: metered operations never count it.
inline constexpr Weight kUnreached = std::numeric_limits<Weight>::infinity();

inline constexpr bool is_unreached(Weight w) noexcept { return w == kUnreached; }

inline bool valid_weight(Weight w) noexcept { return std::isfinite(w) && w >= 0.0; }

struct Edge {
  VertexId u;
  VertexId v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// One direction of an undirected edge, as stored in adjacency lists.
struct Arc {
  VertexId to;
  Weight w;
  EdgeId edge;
};

// Immutable undirected weighted multigraph in CSR form.
//
// Every edge (u, v, w) appears as the arc u->v in u's list and v->u in v's
// list with the same edge id. A self-loop therefore contributes two arcs to
// its vertex. Within one list arcs are ordered by edge id.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ >= kNoVertex) throw OutOfRange("vertex count too large");
    if (edges_.size() >= std::numeric_limits<EdgeId>::max()) throw OutOfRange("edge count too large");
    for (const Edge& e : edges_) {
      if (e.u >= n_ || e.v >= n_) {
        throw OutOfRange("edge endpoint " + std::to_string(std::max(e.u, e.v)) + " not below n=" +
                         std::to_string(n_));
      }
      if (!valid_weight(e.w)) throw BadWeight("edge weight must be finite and non-negative");
    }
    build_adjacency();
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Arc> neighbors(VertexId v) const noexcept {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }

  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

 private:
  void build_adjacency() {
    offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    arcs_.resize(offsets_[n_]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      arcs_[cursor[e.u]++] = Arc{e.v, e.w, id};
      arcs_[cursor[e.v]++] = Arc{e.u, e.w, id};
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
};

// Edge multiset in canonical form: endpoints ordered, list sorted.
// Two graphs are equal up to edge ordering iff n and this list agree.
inline std::vector<Edge> canonical_edges(const Graph& g) {
  std::vector<Edge> out(g.edges().begin(), g.edges().end());
  for (Edge& e : out) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
  });
  return out;
}

inline bool same_graph(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && canonical_edges(a) == canonical_edges(b);
}

struct GraphSummary {
  bool connected = true;
  Weight min_w = kUnreached;  // kUnreached when there are no edges
  Weight max_w = 0.0;
  std::size_t max_degree = 0;
};

// Connectivity is decided by a search from vertex 0. The empty graph counts as connected.
inline GraphSummary validate(const Graph& g) {
  GraphSummary s;
  const std::size_t n = g.vertex_count();
  for (const Edge& e : g.edges()) {
    s.min_w = std::min(s.min_w, e.w);
    s.max_w = std::max(s.max_w, e.w);
  }
  for (VertexId v = 0; v < n; ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
  if (n == 0) return s;

  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const Arc& a : g.neighbors(u)) {
      if (!seen[a.to]) {
        seen[a.to] = 1;
        ++reached;
        stack.push_back(a.to);
      }
    }
  }
  s.connected = reached == n;
  return s;
}

// Component label per vertex, labels dense in [0, count) in order of first vertex.
inline std::pair<std::vector<VertexId>, std::size_t> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> label(n, kNoVertex);
  std::size_t count = 0;
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (label[root] != kNoVertex) continue;
    const auto c = static_cast<VertexId>(count++);
    label[root] = c;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (const Arc& a : g.neighbors(u)) {
        if (label[a.to] == kNoVertex) {
          label[a.to] = c;
          stack.push_back(a.to);
        }
      }
    }
  }
  return {std::move(label), count};
}

}  // namespace bsssp
