#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "bsssp/bundle_dijkstra.hpp"
#include "bsssp/dijkstra.hpp"
#include "bsssp/invariants.hpp"
#include "bsssp/pipeline.hpp"
#include "bsssp/transform.hpp"
#include "support/instances.hpp"

using namespace bsssp;

namespace {

Graph path3() { return Graph(3, {{0, 1, 1.0}, {1, 2, 2.0}}); }

std::vector<VertexId> all_vertices(const Graph& g) {
  std::vector<VertexId> v(g.vertex_count());
  std::iota(v.begin(), v.end(), VertexId{0});
  return v;
}

}  // namespace

TEST_CASE("reference dijkstra", "[dijkstra]") {
  auto d = dijkstra_reference(path3(), 0, {.parents = true});
  CHECK(d.dist == std::vector<Weight>{0, 1, 3});
  CHECK(d.path_to(2) == std::vector<VertexId>{0, 1, 2});
  CHECK(dijkstra_reference(Graph(1, {}), 0).dist == std::vector<Weight>{0});

  auto two = dijkstra_reference(Graph(4, {{0, 1, 2.0}, {2, 3, 1.0}}), 1);
  CHECK(two.dist[0] == 2.0);
  CHECK(is_unreached(two.dist[2]));
  CHECK(is_unreached(two.dist[3]));
  CHECK(two.path_to(3).empty());
  CHECK_THROWS_AS(dijkstra_reference(path3(), 3), OutOfRange);
}

TEST_CASE("reference dijkstra matches the array oracle", "[dijkstra][property]") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_instance(rng, 120, oracle::kLaws[trial % 3]);
    const auto s = static_cast<VertexId>(rng.below(g.vertex_count()));
    auto d = dijkstra_reference(g, s, {.parents = true});
    REQUIRE(d.dist == oracle::single_source(g, s));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (v == s) continue;
      const VertexId p = d.parent[v];
      REQUIRE(p != kNoVertex);
      bool tight = false;
      for (const Arc& a : g.neighbors(v)) tight |= a.to == p && d.dist[p] + a.w == d.dist[v];
      REQUIRE(tight);
    }
  }
}

TEST_CASE("bundle dijkstra with R = V is plain dijkstra", "[solver]") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = constant_degree_transform(oracle::random_instance(rng, 60, oracle::kLaws[trial % 3])).graph;
    const auto s = static_cast<VertexId>(rng.below(g.vertex_count()));
    const auto all = all_vertices(g);
    auto bs = construct_from_R(g, s, all);
    auto run = bundle_dijkstra(g, s, bs);
    std::vector<VertexId> pops;
    auto ref = dijkstra_reference(g, s, {.pop_order = &pops});
    REQUIRE(run.distances.dist == ref.dist);
    REQUIRE(run.trace.popped.size() == pops.size());
    for (std::size_t i = 0; i < pops.size(); ++i) REQUIRE(run.trace.popped[i].u == pops[i]);
  }
}

TEST_CASE("bundle dijkstra on a path with injected R", "[solver]") {
  Graph p = path3();
  const std::vector<VertexId> r{0, 2};
  auto bs = construct_from_R(p, 0, r);
  auto run = bundle_dijkstra(p, 0, bs);
  CHECK(run.distances.dist == std::vector<Weight>{0, 1, 3});
  CHECK(run.trace.extract_mins == 2);
}

TEST_CASE("bundle dijkstra rejects a foreign structure", "[solver]") {
  Graph p = path3();
  const std::vector<VertexId> r{0, 2};
  auto bs = construct_from_R(p, 0, r);
  CHECK_THROWS_AS(bundle_dijkstra(p, 2, bs), BadBundleStructure);
  CHECK_THROWS_AS(bundle_dijkstra(Graph(4, {}), 0, bs), BadBundleStructure);
  auto broken = bs;
  broken.b[1] = 1;
  CHECK_THROWS_AS(bundle_dijkstra(p, 0, broken), BadBundleStructure);
}

TEST_CASE("oracle equivalence sweep", "[solver][property]") {
  SplitMix64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& law = oracle::kLaws[trial % 3];
    Graph g = constant_degree_transform(oracle::random_instance(rng, 80, law)).graph;
    const auto s = static_cast<VertexId>(rng.below(g.vertex_count()));
    const auto expect = oracle::single_source(g, s);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const std::uint32_t k = 2 + static_cast<std::uint32_t>(seed);
      INFO("trial " << trial << " seed " << seed << " law " << law.name);
      REQUIRE(bundle_dijkstra(g, s, construct_simple(g, s, k, seed)).distances.dist == expect);
      auto improved = construct_improved(g, s, fixed_k(k), seed);
      auto run = bundle_dijkstra(g, s, improved);
      REQUIRE(run.distances.dist == expect);
      REQUIRE(run.trace.extract_mins == improved.R.size());
      // degree <= 3: Step 1+2+3 relax events stay within 16 * sum(|Ball(v)| + 1)
      const auto st = bundle_stats(improved);
      REQUIRE(run.trace.relax_events() <= 16 * (st.sum_ball + g.vertex_count()));
      REQUIRE(st.max_heap <= 3 * (improved.threshold + 1));
      for (auto kind : {oracle::AdversarialR::source_only, oracle::AdversarialR::half,
                        oracle::AdversarialR::farthest}) {
        auto r = oracle::adversarial_R(g, s, kind, seed);
        REQUIRE(bundle_dijkstra(g, s, construct_from_R(g, s, r)).distances.dist == expect);
      }
    }
  }
}

TEST_CASE("invariants hold on correct runs", "[solver][invariants]") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = constant_degree_transform(oracle::random_instance(rng, 60, oracle::kLaws[trial % 3])).graph;
    const auto s = static_cast<VertexId>(rng.below(g.vertex_count()));
    auto bs = trial % 2 ? construct_improved(g, s, fixed_k(3), trial)
                        : construct_from_R(g, s, oracle::adversarial_R(g, s, oracle::AdversarialR::half, trial));
    auto run = bundle_dijkstra(g, s, bs, {.instrument = true});
    auto report = check_run_invariants(run.trace, oracle::single_source(g, s));
    INFO(report.summary());
    REQUIRE(report.ok());
    REQUIRE(report.instrumented);
    REQUIRE(run.trace.max_step3_depth <= 1);
  }
}

TEST_CASE("mutation: dropping Step 3 is caught at a pop", "[solver][mutation]") {
  // b(1) = 2. Without Step 3 vertex 2 is never relaxed and pops at infinity.
  Graph g(3, {{0, 1, 1.0}, {1, 2, 0.5}});
  const std::vector<VertexId> r{0, 2};
  auto bs = construct_from_R(g, 0, r);
  REQUIRE(bs.b[1] == 2);
  const auto oracle_d = oracle::single_source(g, 0);

  auto good = bundle_dijkstra(g, 0, bs, {.instrument = true});
  CHECK(check_run_invariants(good.trace, oracle_d).ok());

  auto bad = bundle_dijkstra(g, 0, bs, {.instrument = true, .mutation = Mutation::skip_step3});
  auto report = check_run_invariants(bad.trace, oracle_d);
  CHECK(report.count(InvariantKind::pop_not_exact) >= 1);
  CHECK(is_unreached(bad.trace.popped.back().d));
}

TEST_CASE("mutation: dropping the ball-neighbour loop is caught after Step 1", "[solver][mutation]") {
  // Sparse injected R on random multigraphs; the sweep is fixed, so the
  // first detection index is reproducible.
  SplitMix64 rng(1);
  std::size_t caught = 0;
  for (int trial = 0; trial < 400 && caught == 0; ++trial) {
    const std::size_t n = 2 + rng.below(60);
    Graph g = oracle::random_connected(rng, n, rng.below(n + 1));
    const auto s = static_cast<VertexId>(rng.below(n));
    std::vector<VertexId> r{s};
    for (VertexId v = 0; v < n; ++v) {
      if (v != s && rng.below(10) == 0) r.push_back(v);
    }
    auto bs = construct_from_R(g, s, r);
    const auto oracle_d = oracle::single_source(g, s);
    REQUIRE(check_run_invariants(bundle_dijkstra(g, s, bs, {.instrument = true}).trace, oracle_d).ok());
    auto bad = bundle_dijkstra(g, s, bs, {.instrument = true, .mutation = Mutation::skip_ball_neighbor_loop});
    caught += check_run_invariants(bad.trace, oracle_d).count(InvariantKind::bundle_not_exact) > 0;
  }
  CHECK(caught == 1);
}

TEST_CASE("pipeline agrees with reference on original graphs", "[pipeline][property]") {
  SplitMix64 rng(5150);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = oracle::random_instance(rng, 300, oracle::kLaws[trial % 3]);
    const auto s = static_cast<VertexId>(rng.below(g.vertex_count()));
    SolveConfig ref_cfg;
    ref_cfg.algorithm = Algorithm::dijkstra;
    SolveConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    cfg.transform = trial % 4 == 3 ? TransformMode{TransformMode::Kind::cap, 0} : TransformMode{};
    cfg.construction = trial % 5 == 0 ? Construction::simple : Construction::improved;
    INFO("trial " << trial);
    REQUIRE(solve(g, s, cfg).distances == solve(g, s, ref_cfg).distances);
  }
}

TEST_CASE("pipeline details", "[pipeline]") {
  SECTION("isolated vertex stays unreached") {
    Graph g(4, {{0, 1, 1.0}, {1, 2, 1.0}});
    for (auto kind : {TransformMode::Kind::cycle3, TransformMode::Kind::cap, TransformMode::Kind::none}) {
      SolveConfig cfg;
      cfg.transform.kind = kind;
      auto r = solve(g, 0, cfg);
      CHECK(r.distances[2] == 2.0);
      CHECK(is_unreached(r.distances[3]));
    }
  }
  SECTION("checked run reports no violations") {
    SplitMix64 rng(3);
    Graph g = oracle::random_instance(rng, 200, oracle::kLaws[1]);
    SolveConfig cfg;
    cfg.check_invariants = true;
    cfg.trace = true;
    auto r = solve(g, 0, cfg);
    REQUIRE(r.invariants);
    CHECK(r.invariants->ok());
    CHECK(r.trace->instrumented);
    CHECK(r.extract_mins == r.stats->sizeR);
  }
  SECTION("checked run throws on a mutation") {
    Graph g(3, {{0, 1, 1.0}, {1, 2, 0.5}});
    SolveConfig cfg;
    cfg.construction = Construction::from_R;
    cfg.transform.kind = TransformMode::Kind::none;
    cfg.injected_R = {0, 2};
    cfg.check_invariants = true;
    CHECK_NOTHROW(solve(g, 0, cfg));
    cfg.mutation = Mutation::skip_step3;
    CHECK_THROWS_AS(solve(g, 0, cfg), InvariantViolation);
  }
  SECTION("bad configurations") {
    Graph g = path3();
    SolveConfig cfg;
    cfg.k = 0;
    CHECK_THROWS(solve(g, 0, cfg));
    cfg.k = 1;
    CHECK_THROWS(solve(g, 0, cfg));
    cfg.construction = Construction::simple;
    CHECK_NOTHROW(solve(g, 0, cfg));
    cfg.construction = Construction::from_R;
    CHECK_THROWS_AS(solve(g, 0, cfg), BadR);
    CHECK_THROWS_AS(solve(g, 5, SolveConfig{}), OutOfRange);
  }
  SECTION("mid-density inputs get the cap regime") {
    CHECK(mid_density(1024, 10 * 1024 - 1));
    CHECK_FALSE(mid_density(1024, 10 * 1024));
    CHECK_FALSE(mid_density(1024, 2048));
  }
}
