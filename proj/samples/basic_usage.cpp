// Solve one small graph three ways and print the distances.
//
//   basic_usage [graph.gr] [source]

#include <fstream>
#include <iostream>
#include <string>

#include "bsssp/bsssp.hpp"

int main(int argc, char** argv) {
  using namespace bsssp;

  Graph g = argc > 1 ? [&] {
    std::ifstream in(argv[1]);
    if (!in) throw Error(std::string("cannot open ") + argv[1]);
    return parse_graph(in);
  }()
                     : parse_graph("p sp 5 6\na 1 2 4\na 1 3 1\na 3 2 2\na 2 4 1\na 3 4 5\na 4 5 3\n");
  const VertexId s = argc > 2 ? static_cast<VertexId>(std::stoul(argv[2])) : 0;

  // reference answer
  const DistArray ref = dijkstra_reference(g, s, {.parents = true});

  // full pipeline: constant-degree transform, bundles, Bundle Dijkstra
  SolveConfig cfg;
  cfg.metered = true;
  cfg.seed = 7;
  const SolveResult res = solve(g, s, cfg);

  // the pieces by hand, with R chosen by the caller
  const TransformedGraph t = constant_degree_transform(g);
  const VertexId st = t.representative(s);
  const std::vector<VertexId> R{st};
  const BundleStructure bs = construct_from_R(t.graph, st, R);
  const BundleRun run = bundle_dijkstra(t.graph, st, bs);
  const std::vector<Weight> by_hand = lift_distances(t, run.distances.dist);

  std::cout << "vertex  reference  pipeline  R={s}   path\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::cout << v << "  " << format_distance(ref[v]) << "  " << format_distance(res.distances[v]) << "  "
              << format_distance(by_hand[v]) << "  ";
    for (VertexId x : ref.path_to(v)) std::cout << x << ' ';
    std::cout << '\n';
  }
  std::cout << "k=" << res.k->k << " |R|=" << res.stats->sizeR << " extract-mins=" << res.extract_mins
            << " comparisons=" << res.metrics.comparisons << " additions=" << res.metrics.additions << '\n';
  return res.distances == ref.dist && by_hand == ref.dist ? 0 : 1;
}
