#pragma once

// Machine-readable run reports (JSON object or CSV header + row) and
// distance dumps. The JSON layout is described by schema/run_report.schema.json.

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bsssp/graph.hpp"
#include "bsssp/pipeline.hpp"

namespace bsssp {

// FNV-1a over the IEEE-754 bit patterns of the distances, kUnreached included.
inline std::uint64_t distance_checksum(std::span<const Weight> dist) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Weight w : dist) {
    auto bits = std::bit_cast<std::uint64_t>(w);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

// 17 significant digits, "inf" for unreached.
inline std::string format_distance(Weight w) {
  if (is_unreached(w)) return "inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, w, std::chars_format::general, 17);
  return std::string(buf, p);
}

inline void write_distances(std::ostream& out, std::span<const Weight> dist) {
  for (std::size_t v = 0; v < dist.size(); ++v) out << v << ' ' << format_distance(dist[v]) << '\n';
}

struct RunReport {
  std::string input;  // file path or generator descriptor
  std::string algorithm;
  std::string construction;
  std::string transform;
  VertexId source = 0;
  std::uint32_t k = 0;  // 0 for the reference algorithm
  std::size_t threshold = 0;
  std::uint64_t seed = 0;
  bool metered = false;
  std::size_t n = 0, m = 0, n_t = 0, m_t = 0;
  std::size_t sizeR = 0, sizeR1 = 0, sizeR2 = 0;
  std::size_t sum_ball = 0, max_ball = 0;
  double mean_Sv = 0.0;
  std::uint64_t comparisons = 0, additions = 0;
  std::uint64_t extract_mins = 0;
  std::size_t reached = 0;
  double wall_ms = 0.0;
  std::string checksum;
};

inline RunReport make_report(std::string input, VertexId source, const SolveConfig& cfg, const SolveResult& r) {
  RunReport rep;
  rep.input = std::move(input);
  rep.algorithm = std::string(to_string(cfg.algorithm));
  rep.construction = cfg.algorithm == Algorithm::bundle ? std::string(to_string(cfg.construction)) : "none";
  rep.transform = cfg.algorithm == Algorithm::bundle ? to_string(cfg.transform) : "none";
  rep.source = source;
  if (r.k) {
    rep.k = r.k->k;
    rep.threshold = cfg.construction == Construction::improved ? r.k->threshold : 0;
  }
  rep.seed = cfg.seed;
  rep.metered = cfg.metered;
  rep.n = r.n;
  rep.m = r.m;
  rep.n_t = r.n_t;
  rep.m_t = r.m_t;
  if (r.stats) {
    rep.sizeR = r.stats->sizeR;
    rep.sizeR1 = r.stats->sizeR1;
    rep.sizeR2 = r.stats->sizeR2;
    rep.sum_ball = r.stats->sum_ball;
    rep.max_ball = r.stats->max_ball;
    rep.mean_Sv = r.stats->mean_Sv;
  }
  rep.comparisons = r.metrics.comparisons;
  rep.additions = r.metrics.additions;
  rep.extract_mins = r.extract_mins;
  for (Weight w : r.distances) rep.reached += !is_unreached(w);
  rep.wall_ms = r.wall_ms;
  rep.checksum = hex64(distance_checksum(r.distances));
  return rep;
}

inline nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input;
  j["algorithm"] = r.algorithm;
  j["construction"] = r.construction;
  j["transform"] = r.transform;
  j["source"] = r.source;
  j["k"] = r.k;
  j["threshold"] = r.threshold;
  j["seed"] = r.seed;
  j["metered"] = r.metered;
  j["n"] = r.n;
  j["m"] = r.m;
  j["n_t"] = r.n_t;
  j["m_t"] = r.m_t;
  j["sizeR"] = r.sizeR;
  j["sizeR1"] = r.sizeR1;
  j["sizeR2"] = r.sizeR2;
  j["sum_ball"] = r.sum_ball;
  j["max_ball"] = r.max_ball;
  j["mean_Sv"] = r.mean_Sv;
  j["comparisons"] = r.comparisons;
  j["additions"] = r.additions;
  j["extract_mins"] = r.extract_mins;
  j["reached"] = r.reached;
  j["wall_ms"] = r.wall_ms;
  j["checksum"] = r.checksum;
  return j;
}

inline std::string csv_header() {
  return "input,algorithm,construction,transform,source,k,threshold,seed,metered,n,m,n_t,m_t,sizeR,sizeR1,sizeR2,"
         "sum_ball,max_ball,mean_Sv,comparisons,additions,extract_mins,reached,wall_ms,checksum";
}

inline std::string csv_row(const RunReport& r) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + '"';
  };
  char num[64];
  std::string row;
  auto add = [&](const std::string& s) {
    if (!row.empty()) row += ',';
    row += s;
  };
  auto dbl = [&](double x) {
    std::snprintf(num, sizeof num, "%.6g", x);
    return std::string(num);
  };
  add(quote(r.input));
  add(r.algorithm);
  add(r.construction);
  add(r.transform);
  add(std::to_string(r.source));
  add(std::to_string(r.k));
  add(std::to_string(r.threshold));
  add(std::to_string(r.seed));
  add(r.metered ? "true" : "false");
  add(std::to_string(r.n));
  add(std::to_string(r.m));
  add(std::to_string(r.n_t));
  add(std::to_string(r.m_t));
  add(std::to_string(r.sizeR));
  add(std::to_string(r.sizeR1));
  add(std::to_string(r.sizeR2));
  add(std::to_string(r.sum_ball));
  add(std::to_string(r.max_ball));
  add(dbl(r.mean_Sv));
  add(std::to_string(r.comparisons));
  add(std::to_string(r.additions));
  add(std::to_string(r.extract_mins));
  add(std::to_string(r.reached));
  add(dbl(r.wall_ms));
  add(r.checksum);
  return row;
}

}  // namespace bsssp
