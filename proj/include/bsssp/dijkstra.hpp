#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsssp/errors.hpp"
#include "bsssp/graph.hpp"
#include "bsssp/metering.hpp"
#include "bsssp/pairing_heap.hpp"

namespace bsssp {

// Per-vertex distances; kUnreached for vertices the source cannot reach.
struct DistArray {
  std::vector<Weight> dist;
  std::vector<VertexId> parent;  // empty unless requested; kNoVertex for the source and unreached vertices

  std::size_t size() const noexcept { return dist.size(); }
  Weight operator[](VertexId v) const noexcept { return dist[v]; }

  // Vertex sequence source..v along parent pointers; empty when v is unreached
  // or parents were not recorded.
  std::vector<VertexId> path_to(VertexId v) const {
    std::vector<VertexId> path;
    if (parent.empty() || is_unreached(dist[v])) return path;
    for (VertexId x = v; x != kNoVertex; x = parent[x]) path.push_back(x);
    return {path.rbegin(), path.rend()};
  }
};

struct ReferenceOptions {
  bool parents = false;
  std::vector<VertexId>* pop_order = nullptr;  // receives vertices in extraction order
};

// Textbook Dijkstra with lazy insertion and decrease-key. Equal keys are
// extracted in increasing id order, so runs are fully deterministic.
template <Meter M>
DistArray dijkstra_reference(const Graph& g, VertexId s, M& meter, const ReferenceOptions& opts = {}) {
  const std::size_t n = g.vertex_count();
  if (s >= n) throw OutOfRange("source " + std::to_string(s) + " out of range");
  DistArray out;
  out.dist.assign(n, kUnreached);
  if (opts.parents) out.parent.assign(n, kNoVertex);
  std::vector<std::uint8_t> settled(n, 0);
  AddressablePQ<M> heap(n, meter);

  out.dist[s] = 0.0;
  heap.insert(s, 0.0);
  while (auto top = heap.extract_min()) {
    const VertexId u = top->id;
    settled[u] = 1;
    if (opts.pop_order) opts.pop_order->push_back(u);
    for (const Arc& a : g.neighbors(u)) {
      if (settled[a.to]) continue;
      const Weight d = meter.add(out.dist[u], a.w);
      if (is_unreached(out.dist[a.to])) {
        out.dist[a.to] = d;
        heap.insert(a.to, d);
      } else if (meter.less(d, out.dist[a.to])) {
        out.dist[a.to] = d;
        heap.decrease_key(a.to, d);
      } else {
        continue;
      }
      if (opts.parents) out.parent[a.to] = u;
    }
  }
  return out;
}

inline DistArray dijkstra_reference(const Graph& g, VertexId s, const ReferenceOptions& opts = {}) {
  NullMeter m;
  return dijkstra_reference(g, s, m, opts);
}

}  // namespace bsssp
