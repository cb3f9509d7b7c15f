#pragma once

// Deterministic workload generators. generate(spec) is a pure function of spec.
//
// All weight laws produce values on a dyadic grid (multiples of 2^-32 for
// uniform, 2^-20 for exp-ratio), so every path sum of a few million edges is
// exact in binary64 and distances do not depend on summation order.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bsssp/errors.hpp"
#include "bsssp/graph.hpp"
#include "bsssp/random.hpp"

namespace bsssp {

enum class Model { gnm, grid, cycle, path, star, clustered };

enum class WeightLaw { unit, uniform, exp_ratio };

struct GenSpec {
  Model model = Model::gnm;
  std::uint64_t n = 0;
  std::uint64_t m = 0;  // used by gnm and clustered
  WeightLaw weights = WeightLaw::uniform;
  double ratio = 1e6;  // exp-ratio: weights spread over [1, ratio]
  std::uint64_t seed = 1;
  std::uint64_t rows = 0;  // grid: 0 means square
  bool require_connected = true;
  std::uint64_t cluster_size = 16;
  unsigned max_attempts = 8;  // gnm connectivity retries
};

struct GeneratedGraph {
  Graph graph;
  // gnm could not produce a connected graph within max_attempts; graph is the
  // largest component of the last attempt, relabelled in id order.
  bool largest_component = false;
  unsigned attempts = 1;
};

inline std::string_view to_string(Model m) {
  switch (m) {
    case Model::gnm: return "gnm";
    case Model::grid: return "grid";
    case Model::cycle: return "cycle";
    case Model::path: return "path";
    case Model::star: return "star";
    case Model::clustered: return "clustered";
  }
  return "?";
}

inline std::optional<Model> parse_model(std::string_view s) {
  for (Model m : {Model::gnm, Model::grid, Model::cycle, Model::path, Model::star, Model::clustered}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

inline std::string weight_law_name(WeightLaw law, double ratio) {
  switch (law) {
    case WeightLaw::unit: return "unit";
    case WeightLaw::uniform: return "uniform";
    case WeightLaw::exp_ratio: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "exp-ratio:%g", ratio);
      return buf;
    }
  }
  return "?";
}

// Accepts "unit", "uniform", "exp-ratio:<r>" and "exp-ratio(<r>)".
inline std::optional<std::pair<WeightLaw, double>> parse_weight_law(std::string_view s) {
  if (s == "unit") return std::pair{WeightLaw::unit, 1.0};
  if (s == "uniform") return std::pair{WeightLaw::uniform, 1.0};
  constexpr std::string_view prefix = "exp-ratio";
  if (s.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string rest(s.substr(prefix.size()));
  if (rest.empty()) return std::pair{WeightLaw::exp_ratio, 1e6};
  if (rest.front() == ':') {
    rest.erase(0, 1);
  } else if (rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  } else {
    return std::nullopt;
  }
  char* end = nullptr;
  double r = std::strtod(rest.c_str(), &end);
  if (end == rest.c_str() || *end != '\0' || !(r >= 1.0) || !std::isfinite(r)) return std::nullopt;
  return std::pair{WeightLaw::exp_ratio, r};
}

namespace detail {

inline Weight draw_weight(SplitMix64& rng, WeightLaw law, double ratio) {
  switch (law) {
    case WeightLaw::unit:
      return 1.0;
    case WeightLaw::uniform:
      // (0, 1] in steps of 2^-32
      return static_cast<double>((rng() >> 32) + 1) * 0x1.0p-32;
    case WeightLaw::exp_ratio: {
      double w = std::pow(ratio, rng.unit());
      return std::ldexp(std::nearbyint(std::ldexp(w, 20)), -20);
    }
  }
  return 1.0;
}

inline std::vector<Edge> gnm_structure(std::uint64_t n, std::uint64_t m, SplitMix64& rng) {
  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  while (edges.size() < m) {
    auto u = static_cast<VertexId>(rng.below(n));
    auto v = static_cast<VertexId>(rng.below(n));
    if (u == v) continue;
    auto lo = std::min(u, v), hi = std::max(u, v);
    if (!seen.insert((std::uint64_t{lo} << 32) | hi).second) continue;
    edges.push_back(Edge{u, v, 0.0});
  }
  return edges;
}

inline Graph largest_component(const Graph& g) {
  auto [label, count] = connected_components(g);
  std::vector<std::size_t> size(count, 0);
  for (VertexId c : label) ++size[c];
  VertexId best = 0;
  for (VertexId c = 1; c < count; ++c) {
    if (size[c] > size[best]) best = c;
  }
  std::vector<VertexId> remap(g.vertex_count(), kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (label[v] == best) remap[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (remap[e.u] != kNoVertex) edges.push_back(Edge{remap[e.u], remap[e.v], e.w});
  }
  return Graph(next, std::move(edges));
}

}  // namespace detail

inline GeneratedGraph generate(const GenSpec& spec) {
  const std::uint64_t n = spec.n;
  if (n == 0) throw Infeasible("n must be positive");
  if (n >= kNoVertex) throw Infeasible("n too large");
  if (spec.weights == WeightLaw::exp_ratio && !(spec.ratio >= 1.0)) throw Infeasible("exp-ratio needs r >= 1");

  SplitMix64 root(spec.seed);
  std::vector<Edge> edges;
  GeneratedGraph out;

  auto finish = [&](std::vector<Edge> es, SplitMix64& rng) {
    for (Edge& e : es) e.w = detail::draw_weight(rng, spec.weights, spec.ratio);
    return Graph(n, std::move(es));
  };

  switch (spec.model) {
    case Model::path: {
      for (VertexId v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1, 0.0});
      out.graph = finish(std::move(edges), root);
      return out;
    }
    case Model::cycle: {
      if (n < 3) throw Infeasible("cycle needs n >= 3");
      for (VertexId v = 0; v < n; ++v) edges.push_back(Edge{v, static_cast<VertexId>((v + 1) % n), 0.0});
      out.graph = finish(std::move(edges), root);
      return out;
    }
    case Model::star: {
      for (VertexId v = 1; v < n; ++v) edges.push_back(Edge{0, v, 0.0});
      out.graph = finish(std::move(edges), root);
      return out;
    }
    case Model::grid: {
      std::uint64_t rows = spec.rows;
      if (rows == 0) {
        rows = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
        if (rows * rows != n) throw Infeasible("grid without rows needs a square n");
      }
      if (n % rows != 0) throw Infeasible("grid rows must divide n");
      const std::uint64_t cols = n / rows;
      for (std::uint64_t r = 0; r < rows; ++r) {
        for (std::uint64_t c = 0; c < cols; ++c) {
          auto v = static_cast<VertexId>(r * cols + c);
          if (c + 1 < cols) edges.push_back(Edge{v, v + 1, 0.0});
          if (r + 1 < rows) edges.push_back(Edge{v, static_cast<VertexId>(v + cols), 0.0});
        }
      }
      out.graph = finish(std::move(edges), root);
      return out;
    }
    case Model::gnm: {
      const std::uint64_t max_m = n * (n - 1) / 2;
      if (spec.m > max_m) throw Infeasible("gnm: m exceeds n(n-1)/2");
      if (spec.require_connected && spec.m + 1 < n) throw Infeasible("gnm: m < n-1 cannot be connected");
      Graph g;
      for (unsigned attempt = 1; attempt <= std::max(1u, spec.max_attempts); ++attempt) {
        SplitMix64 rng = root.split();
        g = finish(detail::gnm_structure(n, spec.m, rng), rng);
        out.attempts = attempt;
        if (!spec.require_connected || validate(g).connected) {
          out.graph = std::move(g);
          return out;
        }
      }
      out.graph = detail::largest_component(g);
      out.largest_component = true;
      return out;
    }
    case Model::clustered: {
      // Light intra-cluster paths, heavy tree edges between clusters, extra
      // light edges inside clusters. Searches started inside a cluster see
      // many close vertices before anything outside it.
      if (spec.m + 1 < n) throw Infeasible("clustered: m < n-1 cannot be connected");
      const std::uint64_t c = std::max<std::uint64_t>(1, spec.cluster_size);
      const std::uint64_t clusters = (n + c - 1) / c;
      if (spec.m > n - 1 && c < 2) throw Infeasible("clustered: extra edges need cluster_size >= 2");
      if (spec.m > n - 1 && n < 2) throw Infeasible("clustered: extra edges need n >= 2");
      std::vector<char> heavy;
      for (std::uint64_t k = 0; k < clusters; ++k) {
        const std::uint64_t lo = k * c, hi = std::min(n, lo + c);
        for (std::uint64_t v = lo; v + 1 < hi; ++v) {
          edges.push_back(Edge{static_cast<VertexId>(v), static_cast<VertexId>(v + 1), 0.0});
          heavy.push_back(0);
        }
        if (k > 0) {
          const std::uint64_t other = root.below(k);
          const std::uint64_t a = lo + root.below(hi - lo);
          const std::uint64_t b = other * c + root.below(c);
          edges.push_back(Edge{static_cast<VertexId>(a), static_cast<VertexId>(b), 0.0});
          heavy.push_back(1);
        }
      }
      while (edges.size() < spec.m) {
        const std::uint64_t u = root.below(n);
        const std::uint64_t lo = (u / c) * c, hi = std::min(n, lo + c);
        if (hi - lo < 2) continue;
        const std::uint64_t v = lo + root.below(hi - lo);
        if (v == u) continue;
        edges.push_back(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v), 0.0});
        heavy.push_back(0);
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const Weight w = detail::draw_weight(root, spec.weights, spec.ratio);
        edges[i].w = heavy[i] ? std::ldexp(w, 10) : std::ldexp(w, -10);
      }
      out.graph = Graph(n, std::move(edges));
      return out;
    }
  }
  throw Infeasible("unknown model");
}

}  // namespace bsssp
