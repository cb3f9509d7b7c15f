#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include "bsssp/dimacs.hpp"
#include "bsssp/generators.hpp"
#include "bsssp/graph.hpp"
#include "support/oracle.hpp"

using namespace bsssp;

TEST_CASE("adjacency is symmetric with shared edge ids", "[graph]") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_connected(rng, 1 + rng.below(40), rng.below(60));
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (const Arc& a : g.neighbors(u)) {
        const Edge& e = g.edge(a.edge);
        REQUIRE(((e.u == u && e.v == a.to) || (e.v == u && e.u == a.to)));
        REQUIRE(a.w == e.w);
        std::size_t back = 0;
        for (const Arc& b : g.neighbors(a.to)) back += b.edge == a.edge && b.to == u;
        // a self-loop has two arcs at the same vertex
        REQUIRE(back == (a.to == u ? 2u : 1u));
      }
    }
  }
}

TEST_CASE("graph rejects bad edges", "[graph]") {
  CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}), OutOfRange);
  CHECK_THROWS_AS(Graph(2, {{0, 1, -1.0}}), BadWeight);
  CHECK_THROWS_AS(Graph(2, {{0, 1, std::numeric_limits<double>::quiet_NaN()}}), BadWeight);
  CHECK_THROWS_AS(Graph(2, {{0, 1, kUnreached}}), BadWeight);
}

TEST_CASE("parse minimal input", "[dimacs]") {
  Graph g = parse_graph("p sp 3 2\na 1 2 1\na 2 3 2");
  REQUIRE(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edge(0) == Edge{0, 1, 1.0});
  CHECK(g.edge(1) == Edge{1, 2, 2.0});
}

TEST_CASE("parse single vertex without edges", "[dimacs]") {
  Graph g = parse_graph("p sp 1 0");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("parse comments, blank lines and duplicates", "[dimacs]") {
  Graph g = parse_graph("c hello\n\np sp 2 2\nc mid\na 1 2 0.5\na 1 2 0.5\n");
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 2);
}

TEST_CASE("parse errors", "[dimacs]") {
  CHECK_THROWS_AS(parse_graph("p sp 3 1\na 1 4 1"), OutOfRange);
  CHECK_THROWS_AS(parse_graph("p sp 3 1\na 0 1 1"), OutOfRange);
  CHECK_THROWS_AS(parse_graph("p sp 2 1\na 1 2 -3"), BadWeight);
  CHECK_THROWS_AS(parse_graph("p sp 2 1\na 1 2 nan"), BadWeight);
  CHECK_THROWS_AS(parse_graph("p sp 2 1\na 1 2 x"), ParseError);
  CHECK_THROWS_AS(parse_graph("a 1 2 1\np sp 2 1"), ParseError);
  CHECK_THROWS_AS(parse_graph("p sp 2 2\na 1 2 1"), ParseError);
  CHECK_THROWS_AS(parse_graph("p sp 2 1\nq 1 2 1"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  try {
    parse_graph("p sp 3 1\nc ok\na 1 2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("write graph", "[dimacs]") {
  CHECK(write_graph(Graph(1, {})) == "p sp 1 0\n");
  Graph p3(3, {{0, 1, 1.0}, {1, 2, 2.5}});
  CHECK(write_graph(p3) == "p sp 3 2\na 1 2 1\na 2 3 2.5\n");
  CHECK(same_graph(parse_graph(write_graph(p3)), p3));
}

TEST_CASE("parse after write is the identity on random graphs", "[dimacs][property]") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenSpec spec;
    spec.model = Model::gnm;
    spec.n = 2 + seed % 30;
    spec.m = std::min<std::uint64_t>(spec.n * (spec.n - 1) / 2, spec.n + seed % 17);
    spec.require_connected = false;
    spec.weights = seed % 3 == 0 ? WeightLaw::exp_ratio : WeightLaw::uniform;
    spec.seed = seed;
    Graph g = generate(spec).graph;
    Graph back = parse_graph(write_graph(g));
    REQUIRE(same_graph(back, g));
  }
}

TEST_CASE("validate", "[graph]") {
  auto p3 = validate(Graph(3, {{0, 1, 1.0}, {1, 2, 2.0}}));
  CHECK(p3.connected);
  CHECK(p3.max_degree == 2);
  CHECK(p3.min_w == 1.0);
  CHECK(p3.max_w == 2.0);

  CHECK_FALSE(validate(Graph(2, {})).connected);

  Graph s5(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}});
  CHECK(validate(s5).max_degree == 5);
}

TEST_CASE("generators: fixed shapes", "[generators]") {
  GenSpec spec;
  spec.weights = WeightLaw::unit;

  spec.model = Model::cycle;
  spec.n = 4;
  Graph c4 = generate(spec).graph;
  CHECK(c4.edge_count() == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  for (const Edge& e : c4.edges()) CHECK(e.w == 1.0);

  spec.model = Model::grid;
  spec.n = 9;
  Graph grid = generate(spec).graph;
  CHECK(grid.vertex_count() == 9);
  CHECK(grid.edge_count() == 12);
  CHECK(validate(grid).connected);

  spec.rows = 2;
  spec.n = 8;
  CHECK(generate(spec).graph.edge_count() == 10);  // 2x4: 2*3 + 4
  spec.rows = 0;
  spec.n = 7;
  CHECK_THROWS_AS(generate(spec), Infeasible);

  spec.model = Model::path;
  spec.n = 5;
  CHECK(generate(spec).graph.edge_count() == 4);

  spec.model = Model::star;
  spec.n = 6;
  CHECK(validate(generate(spec).graph).max_degree == 5);
}

TEST_CASE("generators: gnm determinism and feasibility", "[generators]") {
  GenSpec spec;
  spec.model = Model::gnm;
  spec.n = 100;
  spec.m = 300;
  spec.seed = 7;
  auto a = generate(spec);
  auto b = generate(spec);
  CHECK(write_graph(a.graph) == write_graph(b.graph));
  CHECK(a.graph.edge_count() == (a.largest_component ? a.graph.edge_count() : 300));

  spec.seed = 8;
  CHECK(write_graph(generate(spec).graph) != write_graph(a.graph));

  spec.m = 50;
  CHECK_THROWS_AS(generate(spec), Infeasible);
  spec.m = 100 * 99 / 2 + 1;
  CHECK_THROWS_AS(generate(spec), Infeasible);
}

TEST_CASE("generators: sparse gnm falls back to its largest component", "[generators]") {
  GenSpec spec;
  spec.model = Model::gnm;
  spec.n = 4096;
  spec.m = 8192;
  spec.seed = 3;
  auto out = generate(spec);
  CHECK(out.largest_component);
  CHECK(validate(out.graph).connected);
  CHECK(out.graph.vertex_count() > 3900);
  CHECK(out.graph.vertex_count() < 4096);
}

TEST_CASE("generators: weight laws", "[generators]") {
  GenSpec spec;
  spec.model = Model::path;
  spec.n = 2000;
  spec.weights = WeightLaw::uniform;
  const Graph uni = generate(spec).graph;
  for (const Edge& e : uni.edges()) {
    REQUIRE(e.w > 0.0);
    REQUIRE(e.w <= 1.0);
    REQUIRE(std::ldexp(e.w, 32) == std::floor(std::ldexp(e.w, 32)));
  }
  spec.weights = WeightLaw::exp_ratio;
  spec.ratio = 1e6;
  Weight lo = 1e300, hi = 0;
  const Graph spread = generate(spec).graph;
  for (const Edge& e : spread.edges()) {
    REQUIRE(e.w >= 1.0);
    REQUIRE(e.w <= 1e6);
    REQUIRE(std::ldexp(e.w, 20) == std::floor(std::ldexp(e.w, 20)));
    lo = std::min(lo, e.w);
    hi = std::max(hi, e.w);
  }
  CHECK(hi / lo > 1e4);
}

TEST_CASE("generators: clustered graphs are connected", "[generators]") {
  GenSpec spec;
  spec.model = Model::clustered;
  spec.n = 200;
  spec.m = 500;
  spec.seed = 5;
  Graph g = generate(spec).graph;
  CHECK(g.edge_count() == 500);
  CHECK(validate(g).connected);
  spec.m = 100;
  CHECK_THROWS_AS(generate(spec), Infeasible);
}

TEST_CASE("weight law and model names parse", "[generators]") {
  CHECK(parse_model("gnm") == Model::gnm);
  CHECK_FALSE(parse_model("tree"));
  CHECK(parse_weight_law("unit")->first == WeightLaw::unit);
  CHECK(parse_weight_law("exp-ratio:1000")->second == 1000.0);
  CHECK(parse_weight_law("exp-ratio(1e6)")->second == 1e6);
  CHECK_FALSE(parse_weight_law("exp-ratio:0.5"));
  CHECK_FALSE(parse_weight_law("gauss"));
}
