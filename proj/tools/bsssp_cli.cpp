// bsssp: generate graphs, solve, fuzz against the reference, benchmark and
// collect bundle statistics.
//
// exit codes: 0 ok, 1 verification mismatch, 2 usage or input error,
// 3 internal invariant violation

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsssp/bsssp.hpp"

using namespace bsssp;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInvariant = 3 };

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BSSSP_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 1;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_graph(in);
}

std::vector<VertexId> load_ids(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<VertexId> ids;
  std::string tok;
  while (in >> tok) {
    char* end = nullptr;
    const auto v = std::strtoull(tok.c_str(), &end, 10);
    if (*end != '\0' || v > kNoVertex - 1) throw ParseError(0, "bad vertex id '" + tok + "' in " + path);
    ids.push_back(static_cast<VertexId>(v));
  }
  return ids;
}

// "2^12..2^17", "4096,8192" or a mix.
std::vector<std::uint64_t> parse_sizes(const std::string& text) {
  auto one = [](const std::string& s) -> std::uint64_t {
    if (s.rfind("2^", 0) == 0) {
      const int e = std::stoi(s.substr(2));
      if (e < 1 || e > 40) throw Error("bad size " + s);
      return std::uint64_t{1} << e;
    }
    return std::stoull(s);
  };
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string part;
  try {
    while (std::getline(ss, part, ',')) {
      const auto dots = part.find("..");
      if (dots == std::string::npos) {
        out.push_back(one(part));
        continue;
      }
      const std::string lo = part.substr(0, dots), hi = part.substr(dots + 2);
      if (lo.rfind("2^", 0) != 0 || hi.rfind("2^", 0) != 0) throw Error("ranges need powers of two: " + part);
      for (std::uint64_t v = one(lo); v <= one(hi); v *= 2) out.push_back(v);
    }
  } catch (const std::logic_error&) {
    throw Error("bad size list '" + text + "'");
  }
  if (out.empty()) throw Error("empty size list");
  return out;
}

struct GenFlags {
  std::string model = "gnm";
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string weights = "uniform";
  std::uint64_t rows = 0;
  std::uint64_t cluster = 16;
};

void add_gen_flags(CLI::App* cmd, GenFlags& f, bool need_n) {
  cmd->add_option("--model", f.model, "gnm|grid|cycle|path|star|clustered")->capture_default_str();
  auto* n = cmd->add_option("--n", f.n, "vertices");
  if (need_n) n->required();
  cmd->add_option("--m", f.m, "edges (gnm, clustered)");
  cmd->add_option("--weights", f.weights, "unit|uniform|exp-ratio:<r>")->capture_default_str();
  cmd->add_option("--rows", f.rows, "grid rows (default: square)");
  cmd->add_option("--cluster-size", f.cluster, "clustered: vertices per cluster")->capture_default_str();
}

GenSpec make_spec(const GenFlags& f, std::uint64_t seed) {
  GenSpec spec;
  auto model = parse_model(f.model);
  if (!model) throw Error("unknown model '" + f.model + "'");
  auto law = parse_weight_law(f.weights);
  if (!law) throw Error("unknown weight law '" + f.weights + "'");
  spec.model = *model;
  spec.n = f.n;
  spec.m = f.m;
  spec.weights = law->first;
  spec.ratio = law->second;
  spec.seed = seed;
  spec.rows = f.rows;
  spec.cluster_size = f.cluster;
  return spec;
}

std::string describe(const GenSpec& s) {
  std::ostringstream os;
  os << "gen:" << to_string(s.model) << ":n=" << s.n;
  if (s.model == Model::gnm || s.model == Model::clustered) os << ":m=" << s.m;
  os << ":w=" << weight_law_name(s.weights, s.ratio) << ":seed=" << s.seed;
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_gen(const GenFlags& f, std::uint64_t seed, const std::string& out_path) {
  auto gen = generate(make_spec(f, seed));
  if (gen.largest_component) {
    std::cerr << "note: no connected sample after " << gen.attempts << " attempts; wrote the largest component ("
              << gen.graph.vertex_count() << " vertices)\n";
  }
  if (out_path.empty() || out_path == "-") {
    write_graph(gen.graph, std::cout);
    return kOk;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  write_graph(gen.graph, out);
  return kOk;
}

struct SolveFlags {
  std::string graph;
  VertexId source = 0;
  std::string algo = "bundle";
  std::optional<std::uint32_t> k;
  std::string construction = "improved";
  std::string transform = "cycle3";
  std::string format = "json";
  std::string dist_out;
  bool metered = false;
  bool check = false;
};

SolveConfig make_config(const std::string& algo, const std::string& construction, const std::string& transform,
                        std::optional<std::uint32_t> k, std::uint64_t seed, bool metered) {
  SolveConfig cfg;
  if (algo == "bundle") {
    cfg.algorithm = Algorithm::bundle;
  } else if (algo == "dijkstra") {
    cfg.algorithm = Algorithm::dijkstra;
  } else {
    throw Error("unknown algorithm '" + algo + "'");
  }
  if (construction == "simple") {
    cfg.construction = Construction::simple;
  } else if (construction == "improved") {
    cfg.construction = Construction::improved;
  } else if (construction.rfind("fromR:", 0) == 0) {
    cfg.construction = Construction::from_R;
    cfg.injected_R = load_ids(construction.substr(6));
  } else {
    throw Error("unknown construction '" + construction + "'");
  }
  auto mode = parse_transform_mode(transform);
  if (!mode) throw Error("unknown transform '" + transform + "'");
  cfg.transform = *mode;
  cfg.k = k;
  cfg.seed = seed;
  cfg.metered = metered;
  return cfg;
}

int cmd_solve(const SolveFlags& f, std::uint64_t seed) {
  if (f.format != "json" && f.format != "csv") throw Error("unknown format '" + f.format + "'");
  const Graph g = load_graph(f.graph);
  SolveConfig cfg = make_config(f.algo, f.construction, f.transform, f.k, seed, f.metered);
  cfg.check_invariants = f.check;
  const SolveResult res = solve(g, f.source, cfg);
  const RunReport rep = make_report(f.graph, f.source, cfg, res);
  if (f.format == "json") {
    std::cout << to_json(rep).dump(2) << '\n';
  } else {
    std::cout << csv_header() << '\n' << csv_row(rep) << '\n';
  }
  if (!f.dist_out.empty()) {
    std::ofstream out(f.dist_out);
    if (!out) throw Error("cannot write " + f.dist_out);
    write_distances(out, res.distances);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

const char* kLawNames[] = {"unit", "uniform", "exp-ratio:1e6"};

int cmd_verify(std::uint64_t trials, std::uint64_t nmax, std::uint64_t seed, const std::string& mutate) {
  Mutation mutation = Mutation::none;
  if (mutate == "step3") {
    mutation = Mutation::skip_step3;
  } else if (mutate == "zloop") {
    mutation = Mutation::skip_ball_neighbor_loop;
  } else if (!mutate.empty() && mutate != "none") {
    throw Error("unknown mutation '" + mutate + "'");
  }
  if (trials > 0 && nmax < 1) throw Error("--nmax must be positive");

  for (std::uint64_t t = 0; t < trials; ++t) {
    // Every trial draws from its own stream so any one can be replayed alone.
    SplitMix64 rng(stream_draw(seed, t));
    const auto law = *parse_weight_law(kLawNames[t % 3]);
    GenSpec spec;
    spec.model = Model::gnm;
    spec.n = 1 + rng.below(nmax);
    const std::uint64_t max_m = spec.n * (spec.n - 1) / 2;
    spec.m = std::min<std::uint64_t>(max_m, spec.n - 1 + rng.below(2 * spec.n + 1));
    spec.weights = law.first;
    spec.ratio = law.second;
    spec.seed = rng();
    spec.max_attempts = 4;
    const Graph g = generate(spec).graph;
    const auto s = static_cast<VertexId>(rng.below(g.vertex_count()));

    const TransformedGraph tg = constant_degree_transform(g);
    const Graph& gt = tg.graph;
    const VertexId st = tg.representative(s);
    const std::uint64_t run_seed = rng();
    const KChoice kc = fixed_k(2 + static_cast<std::uint32_t>(rng.below(3)));

    BundleStructure bs;
    std::string how;
    switch (t % 4) {
      case 0: bs = construct_simple(gt, st, kc.k, run_seed); how = "simple"; break;
      case 1: bs = construct_improved(gt, st, kc, run_seed); how = "improved"; break;
      default: {
        // sparse injected R; the hardest case for Step 1
        std::vector<VertexId> r{st};
        const std::uint64_t den = t % 4 == 2 ? 2 : 10;
        for (VertexId v = 0; v < gt.vertex_count(); ++v) {
          if (v != st && one_in(stream_draw(run_seed, v), den)) r.push_back(v);
        }
        bs = construct_from_R(gt, st, r);
        how = "fromR(1/" + std::to_string(den) + ")";
      }
    }

    const DistArray ref_t = dijkstra_reference(gt, st);
    const BundleRun run = bundle_dijkstra(gt, st, bs, {.instrument = true, .mutation = mutation});
    const InvariantReport inv = check_run_invariants(run.trace, ref_t.dist);
    std::string problem;
    if (!inv.ok()) {
      problem = inv.summary();
    } else if (run.trace.extract_mins != bs.R.size()) {
      problem = "extract-min count differs from |R|";
    } else {
      std::vector<Weight> lifted;
      try {
        lifted = lift_distances(tg, run.distances.dist);
      } catch (const InternalInconsistency& e) {
        problem = e.what();
      }
      if (problem.empty() && lifted != dijkstra_reference(g, s).dist) problem = "distances differ from reference";
    }
    if (!problem.empty()) {
      std::cout << "FAIL trial " << t << ": " << problem << "\n"
                << "reproduce: bsssp verify --trials " << t + 1 << " --nmax " << nmax << " --seed " << seed
                << (mutate.empty() ? "" : " --mutate " + mutate) << "\n"
                << "construction " << how << ", k " << kc.k << ", run seed " << run_seed << ", source " << s
                << " (0-based), weights " << kLawNames[t % 3] << "\n"
                << "c counterexample graph follows\n";
      write_graph(g, std::cout);
      return kMismatch;
    }
  }
  std::cout << "ok: " << trials << " trials\n";
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_bench(const std::string& sizes, std::uint64_t reps, const std::vector<std::string>& algos, bool metered,
              double density, std::uint64_t seed, const std::string& weights, const std::string& transform) {
  const auto ns = parse_sizes(sizes);
  if (density <= 0) throw Error("--density must be positive");
  std::cout << csv_header() << '\n';
  for (std::uint64_t n : ns) {
    GenFlags f;
    f.model = "gnm";
    f.n = n;
    f.m = static_cast<std::uint64_t>(std::llround(density * static_cast<double>(n)));
    f.weights = weights;
    const GenSpec spec = make_spec(f, seed);
    const Graph g = generate(spec).graph;
    for (const std::string& algo : algos) {
      const SolveConfig cfg = make_config(algo, "improved", transform, std::nullopt, seed, metered);
      for (std::uint64_t r = 0; r < reps; ++r) {
        const SolveResult res = solve(g, 0, cfg);
        std::cout << csv_row(make_report(describe(spec), 0, cfg, res)) << '\n';
      }
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct Summary {
  std::vector<double> xs;
  void add(double x) { xs.push_back(x); }
  double mean() const { return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size(); }
  double sd() const {
    if (xs.size() < 2) return 0.0;
    const double mu = mean();
    double ss = 0;
    for (double x : xs) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  nlohmann::ordered_json json() const { return {{"mean", mean()}, {"sd", sd()}}; }
};

int cmd_stats(std::uint32_t k, std::uint64_t seeds, const GenFlags& flags, std::uint64_t seed,
              const std::string& transform) {
  if (k == 0) throw Error("--k must be positive");
  GenFlags f = flags;
  if (f.m == 0) f.m = 2 * f.n;
  auto mode = parse_transform_mode(transform);
  if (!mode) throw Error("unknown transform '" + transform + "'");

  struct Agg {
    Summary sizeR, sizeR1, sizeR2, r2_fraction, sum_ball, ball_per_mk, mean_Sv, n_t;
    std::vector<std::size_t> sum_ball_per_seed;
  } simple, improved;
  const bool with_improved = k >= 2;
  const KChoice kc = fixed_k(k);

  for (std::uint64_t i = 0; i < seeds; ++i) {
    const std::uint64_t sd = seed + i;
    const Graph g = generate(make_spec(f, sd)).graph;
    const TransformedGraph t = apply_transform(g, *mode);
    const Graph& gt = t.graph;
    const VertexId s = t.representative(0);
    const double nt = static_cast<double>(gt.vertex_count());
    const double mt = static_cast<double>(gt.edge_count());
    auto record = [&](Agg& a, const BundleStructure& bs) {
      const BundleStats st = bundle_stats(bs);
      a.sizeR.add(st.sizeR);
      a.sizeR1.add(st.sizeR1);
      a.sizeR2.add(st.sizeR2);
      a.r2_fraction.add(st.sizeR2 / nt);
      a.sum_ball.add(st.sum_ball);
      a.ball_per_mk.add(st.sum_ball / (mt * k));
      a.mean_Sv.add(st.mean_Sv);
      a.n_t.add(nt);
      a.sum_ball_per_seed.push_back(st.sum_ball);
    };
    record(simple, construct_simple(gt, s, k, sd));
    if (with_improved) record(improved, construct_improved(gt, s, kc, sd));
  }

  auto dump = [&](const Agg& a) {
    nlohmann::ordered_json j;
    j["n_t"] = a.n_t.json();
    j["sizeR"] = a.sizeR.json();
    j["sizeR1"] = a.sizeR1.json();
    j["sizeR2"] = a.sizeR2.json();
    j["sizeR2_fraction"] = a.r2_fraction.json();
    j["sum_ball"] = a.sum_ball.json();
    j["sum_ball_over_mk"] = a.ball_per_mk.json();
    j["mean_Sv"] = a.mean_Sv.json();
    j["sum_ball_per_seed"] = a.sum_ball_per_seed;
    return j;
  };
  const double nt = simple.n_t.mean();
  nlohmann::ordered_json out;
  out["family"] = describe(make_spec(f, seed));
  out["transform"] = to_string(*mode);
  out["k"] = k;
  out["threshold"] = kc.threshold;
  out["seeds"] = seeds;
  out["expected"] = {
      {"sizeR1_mean", 1 + (nt - 1) / k},
      {"sizeR1_sd", std::sqrt((nt - 1) * (1.0 / k) * (1 - 1.0 / k))},
      {"mean_Sv", k},
      {"sizeR2_fraction_bound", 2 * std::pow(1 - 1.0 / k, static_cast<double>(kc.threshold))},
  };
  out["simple"] = dump(simple);
  if (with_improved) out["improved"] = dump(improved);
  std::cout << out.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bundle Dijkstra single-source shortest paths"};
  app.require_subcommand(1);
  std::uint64_t seed = default_seed();

  GenFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a generated graph in DIMACS form");
  add_gen_flags(gen, gen_flags, true);
  gen->add_option("--seed", seed, "RNG seed (default $BSSSP_SEED or 1)");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  SolveFlags sf;
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance and print a run report");
  solve_cmd->add_option("--graph", sf.graph, "DIMACS graph file")->required();
  solve_cmd->add_option("--source", sf.source, "source vertex, 0-based")->capture_default_str();
  solve_cmd->add_option("--algo", sf.algo, "bundle|dijkstra")->capture_default_str();
  solve_cmd->add_option("--k", sf.k, "bundle parameter (default: chosen from n)");
  solve_cmd->add_option("--seed", seed, "RNG seed (default $BSSSP_SEED or 1)");
  solve_cmd->add_option("--construction", sf.construction,
                        "simple|improved|fromR:<file> (file: 0-based ids in the transformed graph)")
      ->capture_default_str();
  solve_cmd->add_option("--transform", sf.transform, "cycle3|cap:<d>|cap:auto|none")->capture_default_str();
  solve_cmd->add_option("--format", sf.format, "json|csv")->capture_default_str();
  solve_cmd->add_option("--dist-out", sf.dist_out, "write 'vertex distance' lines here");
  solve_cmd->add_flag("--metered", sf.metered, "count comparisons and additions");
  solve_cmd->add_flag("--check", sf.check, "instrumented run checked against the reference");

  std::uint64_t trials = 100, nmax = 200;
  std::string mutate;
  auto* verify = app.add_subcommand("verify", "fuzz the bundle pipeline against the reference");
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--nmax", nmax, "largest original vertex count")->capture_default_str();
  verify->add_option("--seed", seed, "RNG seed (default $BSSSP_SEED or 1)");
  verify->add_option("--mutate", mutate)->group("");

  std::string sizes = "2^12..2^17", weights = "uniform", bench_transform = "cycle3";
  std::uint64_t reps = 1;
  std::vector<std::string> algos{"bundle", "dijkstra"};
  bool bench_metered = false;
  double density = 2.0;
  auto* bench = app.add_subcommand("bench", "CSV of run reports over gnm sizes");
  bench->add_option("--sizes", sizes, "e.g. 2^12..2^17 or 4096,8192")->capture_default_str();
  bench->add_option("--reps", reps)->capture_default_str();
  bench->add_option("--algo", algos, "bundle and/or dijkstra")->delimiter(',')->capture_default_str();
  bench->add_flag("--metered", bench_metered);
  bench->add_option("--density", density, "m / n")->capture_default_str();
  bench->add_option("--weights", weights)->capture_default_str();
  bench->add_option("--transform", bench_transform)->capture_default_str();
  bench->add_option("--seed", seed, "RNG seed (default $BSSSP_SEED or 1)");

  std::uint32_t stats_k = 2;
  std::uint64_t stats_seeds = 30;
  std::string stats_transform = "cycle3";
  GenFlags stats_flags;
  stats_flags.n = 25000;
  auto* stats = app.add_subcommand("stats", "bundle-structure statistics across seeds (JSON)");
  stats->add_option("--k", stats_k)->capture_default_str();
  stats->add_option("--seeds", stats_seeds, "number of seeds")->capture_default_str();
  add_gen_flags(stats, stats_flags, false);
  stats->add_option("--transform", stats_transform)->capture_default_str();
  stats->add_option("--seed", seed, "first seed (default $BSSSP_SEED or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_flags, seed, gen_out);
    if (*solve_cmd) return cmd_solve(sf, seed);
    if (*verify) return cmd_verify(trials, nmax, seed, mutate);
    if (*bench) return cmd_bench(sizes, reps, algos, bench_metered, density, seed, weights, bench_transform);
    if (*stats) return cmd_stats(stats_k, stats_seeds, stats_flags, seed, stats_transform);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
