#pragma once

// End-to-end solve: transform -> choose k -> build bundles -> Bundle Dijkstra
// -> lift distances back to the input's vertices. algorithm=dijkstra runs the
// reference solver on the input graph instead.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsssp/bundle_dijkstra.hpp"
#include "bsssp/bundles.hpp"
#include "bsssp/dijkstra.hpp"
#include "bsssp/errors.hpp"
#include "bsssp/graph.hpp"
#include "bsssp/invariants.hpp"
#include "bsssp/metering.hpp"
#include "bsssp/transform.hpp"

namespace bsssp {

enum class Algorithm { bundle, dijkstra };
enum class Construction { simple, improved, from_R };

inline std::string_view to_string(Algorithm a) { return a == Algorithm::bundle ? "bundle" : "dijkstra"; }

inline std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::simple: return "simple";
    case Construction::improved: return "improved";
    case Construction::from_R: return "fromR";
  }
  return "?";
}

struct SolveConfig {
  Algorithm algorithm = Algorithm::bundle;
  Construction construction = Construction::improved;
  std::vector<VertexId> injected_R;  // from_R: ids in the transformed graph
  TransformMode transform;
  std::optional<std::uint32_t> k;  // overrides choose_k
  std::uint64_t seed = 1;
  bool metered = false;
  bool trace = false;             // keep the RunTrace in the result
  bool check_invariants = false;  // instrumented run checked against reference distances
  bool record_search_sizes = false;
  Mutation mutation = Mutation::none;
};

struct SolveResult {
  std::vector<Weight> distances;  // indexed by input vertex
  MeterSnapshot metrics;
  std::optional<BundleStats> stats;  // bundle algorithm only
  std::optional<KChoice> k;          // bundle algorithm only
  std::size_t n = 0, m = 0, n_t = 0, m_t = 0;
  std::uint64_t extract_mins = 0;
  double wall_ms = 0.0;
  std::optional<RunTrace> trace;
  std::optional<InvariantReport> invariants;
};

// The moderately dense regime n log log n <= m < n log n, where the degree-cap
// transform and the density-aware k apply.
inline bool mid_density(std::size_t n, std::size_t m) {
  if (n < 4) return false;
  const double lg = std::log2(static_cast<double>(n));
  const double dn = static_cast<double>(n), dm = static_cast<double>(m);
  return dn * std::log2(lg) <= dm && dm < dn * lg;
}

inline void check_config(const SolveConfig& cfg) {
  if (cfg.k && *cfg.k == 0) throw Error("k must be positive");
  if (cfg.algorithm == Algorithm::dijkstra) return;
  if (cfg.construction == Construction::improved && cfg.k && *cfg.k < 2) {
    throw Error("improved construction needs k >= 2");
  }
  if (cfg.construction == Construction::from_R && cfg.injected_R.empty()) {
    throw BadR("fromR construction needs an injected R");
  }
}

template <Meter M>
SolveResult solve(const Graph& g, VertexId s, const SolveConfig& cfg, M& meter) {
  using clock = std::chrono::steady_clock;
  check_config(cfg);
  if (s >= g.vertex_count()) throw OutOfRange("source " + std::to_string(s) + " out of range");
  const auto t0 = clock::now();
  SolveResult res;
  res.n = g.vertex_count();
  res.m = g.edge_count();

  if (cfg.algorithm == Algorithm::dijkstra) {
    std::vector<VertexId> pops;
    res.distances = dijkstra_reference(g, s, meter, {.parents = false, .pop_order = &pops}).dist;
    res.extract_mins = pops.size();
    res.n_t = res.n;
    res.m_t = res.m;
  } else {
    const TransformedGraph t = apply_transform(g, cfg.transform);
    const Graph& gt = t.graph;
    const VertexId src = t.representative(s);
    res.n_t = gt.vertex_count();
    res.m_t = gt.edge_count();

    const Regime regime = cfg.transform.kind == TransformMode::Kind::cap && mid_density(res.n, res.m)
                              ? Regime::mid_density
                              : Regime::const_degree;
    const KChoice kc = cfg.k ? fixed_k(*cfg.k, regime) : choose_k(res.n_t, res.m_t, regime);
    res.k = kc;

    const ConstructionOptions copts{cfg.record_search_sizes};
    BundleStructure bs;
    switch (cfg.construction) {
      case Construction::simple: bs = construct_simple(gt, src, kc.k, cfg.seed, meter, copts); break;
      case Construction::improved: bs = construct_improved(gt, src, kc, cfg.seed, meter, copts); break;
      case Construction::from_R: bs = construct_from_R(gt, src, cfg.injected_R, meter, copts); break;
    }
    res.stats = bundle_stats(bs);

    BundleDijkstraOptions ropts{cfg.check_invariants, cfg.mutation};
    BundleRun run = bundle_dijkstra(gt, src, bs, meter, ropts);
    res.extract_mins = run.trace.extract_mins;

    if (cfg.check_invariants) {
      const DistArray oracle = dijkstra_reference(gt, src);
      InvariantReport report = check_run_invariants(run.trace, oracle.dist);
      if (!report.ok()) throw InvariantViolation(report.summary());
      if (run.distances.dist != oracle.dist) throw InvariantViolation("final distances differ from reference");
      res.invariants = std::move(report);
    }
    res.distances = lift_distances(t, run.distances.dist);
    if (cfg.trace) res.trace = std::move(run.trace);
  }

  res.metrics = meter.snapshot();
  res.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  return res;
}

inline SolveResult solve(const Graph& g, VertexId s, const SolveConfig& cfg) {
  if (cfg.metered) {
    CostMeter m;
    return solve(g, s, cfg, m);
  }
  NullMeter m;
  return solve(g, s, cfg, m);
}

}  // namespace bsssp
