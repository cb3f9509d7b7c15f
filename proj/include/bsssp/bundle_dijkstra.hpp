#pragma once

// Bundle Dijkstra. Only R lives in the heap. Popping u in R settles u and then
//
//   Step 1  every v in Bundle(u) is relaxed from u, from each y in Ball(v),
//           and across each edge (z1, z2) with z2 in Ball(v) + {v};
//   Step 2  every x in Bundle(u) relaxes its neighbours y, and through y the
//           members of Ball(y);
//   Step 3  whenever a vertex outside R improves, its bundle root b(v) is
//           relaxed by d(v) + dist(v, b(v)).
//
// The result is exact for any valid bundle structure; R only affects speed.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bsssp/bundles.hpp"
#include "bsssp/dijkstra.hpp"
#include "bsssp/errors.hpp"
#include "bsssp/graph.hpp"
#include "bsssp/metering.hpp"
#include "bsssp/pairing_heap.hpp"

namespace bsssp {

// Fault injection for the verification harness. Production runs use none.
enum class Mutation {
  none,
  skip_step3,               // never propagate improvements to b(v)
  skip_ball_neighbor_loop,  // drop the (z1, z2) relaxations of Step 1
};

struct RunTrace {
  struct Pop {
    VertexId u;
    Weight d;  // d(u) at extraction
  };
  struct Write {
    VertexId v;
    Weight value;
    std::uint32_t iteration;  // 0 = initialization, i = while handling the i-th pop
  };

  std::vector<Pop> popped;
  std::uint64_t extract_mins = 0;
  std::uint64_t relax_step1 = 0;
  std::uint64_t relax_step2 = 0;
  std::uint64_t relax_step3 = 0;
  unsigned max_step3_depth = 0;

  // Filled only by instrumented runs.
  bool instrumented = false;
  std::vector<Write> writes;       // every assignment to d(.)
  std::vector<Write> after_step1;  // d(v) for v in Bundle(u_i) right after Step 1

  std::uint64_t relax_events() const noexcept { return relax_step1 + relax_step2 + relax_step3; }
};

struct BundleDijkstraOptions {
  bool instrument = false;
  Mutation mutation = Mutation::none;
};

struct BundleRun {
  DistArray distances;
  RunTrace trace;
};

namespace detail {

inline void check_structure(const Graph& g, VertexId s, const BundleStructure& bs) {
  const std::size_t n = g.vertex_count();
  auto fail = [](const std::string& why) { throw BadBundleStructure(why); };
  if (s >= n) throw OutOfRange("source " + std::to_string(s) + " out of range");
  if (bs.b.size() != n || bs.in_R.size() != n || bs.dist_to_b.size() != n || bs.ball_offsets.size() != n + 1 ||
      bs.bundle_offsets.size() != n + 1 || bs.bundle_members.size() != n) {
    fail("structure was built for a different vertex count");
  }
  if (bs.source != s) fail("structure was built for source " + std::to_string(bs.source));
  if (!bs.in_R[s]) fail("source is not in R");
  if (bs.ball_offsets.back() != bs.ball_entries.size()) fail("ball offsets are inconsistent");
  for (VertexId v = 0; v < n; ++v) {
    if (bs.b[v] >= n || !bs.in_R[bs.b[v]]) fail("b(" + std::to_string(v) + ") is not in R");
    if (bs.in_R[v] && bs.b[v] != v) fail("R member " + std::to_string(v) + " is not its own root");
  }
}

template <Meter M>
class BundleDijkstraRun {
 public:
  BundleDijkstraRun(const Graph& g, const BundleStructure& bs, M& meter, const BundleDijkstraOptions& opts)
      : g_(g), bs_(bs), meter_(meter), opts_(opts), heap_(g.vertex_count(), meter) {}

  BundleRun run(VertexId s) {
    const std::size_t n = g_.vertex_count();
    d_.assign(n, kUnreached);
    trace_.instrumented = opts_.instrument;
    set(s, 0.0);
    for (VertexId u : bs_.R) heap_.insert(u, d_[u]);

    while (auto top = heap_.extract_min()) {
      const VertexId u = top->id;
      ++iteration_;
      ++trace_.extract_mins;
      trace_.popped.push_back({u, d_[u]});
      const auto bundle = bs_.bundle(u);

      // Step 1. u itself is skipped: d(u) is final and dist(u, u) = 0.
      for (VertexId v : bundle) {
        if (v == u) continue;
        if (!is_unreached(d_[u])) relax(v, meter_.add(d_[u], bs_.dist_to_b[v]), kStep1);
        const auto ball = bs_.ball(v);
        for (const BallEntry& y : ball) {
          if (!is_unreached(d_[y.vertex])) relax(v, meter_.add(d_[y.vertex], y.dist), kStep1);
        }
        if (opts_.mutation == Mutation::skip_ball_neighbor_loop) continue;
        for (const Arc& a : g_.neighbors(v)) {
          if (!is_unreached(d_[a.to])) relax(v, meter_.add(d_[a.to], a.w), kStep1);
        }
        for (const BallEntry& z2 : ball) {
          for (const Arc& a : g_.neighbors(z2.vertex)) {
            if (is_unreached(d_[a.to])) continue;
            relax(v, meter_.add(meter_.add(d_[a.to], a.w), z2.dist), kStep1);
          }
        }
      }
      if (opts_.instrument) {
        for (VertexId v : bundle) trace_.after_step1.push_back({v, d_[v], iteration_});
      }

      // Step 2
      for (VertexId x : bundle) {
        if (is_unreached(d_[x])) continue;
        for (const Arc& a : g_.neighbors(x)) {
          const Weight via = meter_.add(d_[x], a.w);
          relax(a.to, via, kStep2);
          if (bs_.in_R[a.to]) continue;
          for (const BallEntry& z1 : bs_.ball(a.to)) relax(z1.vertex, meter_.add(via, z1.dist), kStep2);
        }
      }
    }

    BundleRun out;
    out.distances.dist = std::move(d_);
    out.trace = std::move(trace_);
    return out;
  }

 private:
  enum Step { kStep1, kStep2, kStep3 };

  void set(VertexId v, Weight value) {
    d_[v] = value;
    if (opts_.instrument) trace_.writes.push_back({v, value, iteration_});
  }

  void relax(VertexId v, Weight candidate, Step step, unsigned depth = 0) {
    switch (step) {
      case kStep1: ++trace_.relax_step1; break;
      case kStep2: ++trace_.relax_step2; break;
      case kStep3: ++trace_.relax_step3; break;
    }
    trace_.max_step3_depth = std::max(trace_.max_step3_depth, depth);
    if (!meter_.less(candidate, d_[v])) return;
    set(v, candidate);
    if (heap_.contains(v)) {
      heap_.decrease_key(v, candidate);
    } else if (!bs_.in_R[v] && opts_.mutation != Mutation::skip_step3) {
      relax(bs_.b[v], meter_.add(candidate, bs_.dist_to_b[v]), kStep3, depth + 1);
    }
  }

  const Graph& g_;
  const BundleStructure& bs_;
  M& meter_;
  BundleDijkstraOptions opts_;
  AddressablePQ<M> heap_;
  std::vector<Weight> d_;
  RunTrace trace_;
  std::uint32_t iteration_ = 0;
};

}  // namespace detail

template <Meter M>
BundleRun bundle_dijkstra(const Graph& g, VertexId s, const BundleStructure& bs, M& meter,
                          const BundleDijkstraOptions& opts = {}) {
  detail::check_structure(g, s, bs);
  return detail::BundleDijkstraRun<M>(g, bs, meter, opts).run(s);
}

inline BundleRun bundle_dijkstra(const Graph& g, VertexId s, const BundleStructure& bs,
                                 const BundleDijkstraOptions& opts = {}) {
  NullMeter m;
  return bundle_dijkstra(g, s, bs, m, opts);
}

}  // namespace bsssp
