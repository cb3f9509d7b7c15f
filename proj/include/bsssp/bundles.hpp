#pragma once

// Bundle structures: a vertex set R that will live in the main heap, and for
// every other vertex v
//
//   b(v)        a nearest member of R (its bundle root),
//   dist_to_b   dist(v, b(v)),
//   Ball(v)     every w != v with dist(v, w) < dist(v, b(v)), with distances,
//
// plus Bundle(u) = { v : b(v) = u } for u in R (u itself included). Three
// constructions are provided: sampling R and searching to the first member
// (simple), sampling R1 and truncating each search after ceil(k log2 k) pops,
// promoting truncated vertices into R (improved), and an injected R.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "bsssp/errors.hpp"
#include "bsssp/graph.hpp"
#include "bsssp/metering.hpp"
#include "bsssp/pairing_heap.hpp"
#include "bsssp/random.hpp"

namespace bsssp {

// ---------------------------------------------------------------------------
// Parameter selection

enum class Regime { const_degree, mid_density };

struct KChoice {
  std::uint32_t k = 2;
  Regime regime = Regime::const_degree;
  std::size_t threshold = 2;  // pop budget of the truncated searches
};

// max(1, ceil(k * log2 k)).
inline std::size_t truncation_threshold(std::uint32_t k) {
  if (k < 2) return 1;
  const double t = std::ceil(static_cast<double>(k) * std::log2(static_cast<double>(k)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(t));
}

// const_degree: k = round(sqrt(log2 n / log2 log2 n)).
// mid_density:  k = round(sqrt((n/m) log2 n)).
// Both clamped to k >= 2.
inline KChoice choose_k(std::size_t n_t, std::size_t m_t, Regime regime) {
  KChoice c;
  c.regime = regime;
  double raw = 2.0;
  const double lg = std::log2(static_cast<double>(std::max<std::size_t>(n_t, 2)));
  if (regime == Regime::const_degree) {
    if (n_t >= 4) raw = std::sqrt(lg / std::log2(lg));
  } else if (m_t > 0) {
    raw = std::sqrt(static_cast<double>(n_t) / static_cast<double>(m_t) * lg);
  }
  c.k = static_cast<std::uint32_t>(std::max<long long>(2, std::llround(raw)));
  c.threshold = truncation_threshold(c.k);
  return c;
}

inline KChoice fixed_k(std::uint32_t k, Regime regime = Regime::const_degree) {
  return KChoice{k, regime, truncation_threshold(k)};
}

// ---------------------------------------------------------------------------
// Sampling

using Membership = std::vector<std::uint8_t>;

// Each v != source joins with probability 1/k, decided by the per-vertex
// stream draw stream_draw(seed, v). The source always joins.
inline Membership sample_R1(std::size_t n, VertexId source, std::uint64_t k, std::uint64_t seed) {
  if (k == 0) k = 1;
  Membership in(n, 0);
  for (VertexId v = 0; v < n; ++v) in[v] = one_in(stream_draw(seed, v), k) ? 1 : 0;
  if (source < n) in[source] = 1;
  return in;
}

inline std::vector<VertexId> members(std::span<const std::uint8_t> mask) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Per-vertex searches

struct BallEntry {
  VertexId vertex;
  Weight dist;
  friend bool operator==(const BallEntry&, const BallEntry&) = default;
};

enum class Verdict {
  hit_R1,     // last extracted vertex is in the stop set
  truncated,  // popped threshold+1 vertices without reaching the stop set
  exhausted,  // component ran out first (only on disconnected inputs)
};

struct TruncationOutcome {
  std::vector<BallEntry> extracted;  // in extraction order; extracted[0] is the start vertex
  Verdict verdict = Verdict::exhausted;
  VertexId hit = kNoVertex;  // set for hit_R1
  std::size_t max_heap = 0;
};

inline constexpr std::size_t kNoTruncation = std::numeric_limits<std::size_t>::max();

// Dijkstra from one start vertex that stops at the first extracted member of
// a stop set, or once more than `threshold` vertices were extracted. The
// heap and scratch arrays are reused across searches; resetting costs only
// what the previous search touched.
template <Meter M = NullMeter>
class SearchWorkspace {
 public:
  SearchWorkspace(std::size_t n, M& meter) : meter_(&meter), heap_(n, meter), dist_(n, kUnreached), state_(n, 0) {}

  // Appends the extraction list to `out`.
  Verdict run(const Graph& g, VertexId v, std::span<const std::uint8_t> stop, std::size_t threshold,
              std::vector<BallEntry>& out) {
    reset();
    const std::size_t start = out.size();
    max_heap_ = 0;
    push(v, 0.0);
    while (auto top = heap_.extract_min()) {
      const VertexId u = top->id;
      const Weight du = top->key;
      state_[u] = kExtracted;
      out.push_back(BallEntry{u, du});
      if (stop[u]) {
        last_hit_ = u;
        return Verdict::hit_R1;
      }
      if (out.size() - start > threshold) return Verdict::truncated;
      for (const Arc& a : g.neighbors(u)) {
        if (state_[a.to] == kExtracted) continue;
        const Weight d = meter_->add(du, a.w);
        if (state_[a.to] == kUnseen) {
          push(a.to, d);
        } else if (meter_->less(d, dist_[a.to])) {
          dist_[a.to] = d;
          heap_.decrease_key(a.to, d);
        }
      }
    }
    return Verdict::exhausted;
  }

  VertexId last_hit() const noexcept { return last_hit_; }
  std::size_t max_heap() const noexcept { return max_heap_; }

 private:
  static constexpr std::uint8_t kUnseen = 0, kQueued = 1, kExtracted = 2;

  void push(VertexId x, Weight d) {
    state_[x] = kQueued;
    dist_[x] = d;
    touched_.push_back(x);
    heap_.insert(x, d);
    max_heap_ = std::max(max_heap_, heap_.size());
  }

  void reset() {
    for (VertexId x : touched_) {
      state_[x] = kUnseen;
      dist_[x] = kUnreached;
    }
    touched_.clear();
    heap_.clear();
  }

  M* meter_;
  AddressablePQ<M> heap_;
  std::vector<Weight> dist_;
  std::vector<std::uint8_t> state_;
  std::vector<VertexId> touched_;
  VertexId last_hit_ = kNoVertex;
  std::size_t max_heap_ = 0;
};

template <Meter M>
TruncationOutcome truncated_dijkstra(const Graph& g, VertexId v, std::span<const std::uint8_t> in_R1,
                                     std::size_t threshold, M& meter) {
  if (v >= g.vertex_count()) throw OutOfRange("start vertex out of range");
  if (in_R1.size() != g.vertex_count()) throw BadR("membership mask does not match the graph");
  if (in_R1[v]) throw BadR("start vertex must lie outside R1");
  SearchWorkspace<M> ws(g.vertex_count(), meter);
  TruncationOutcome out;
  out.verdict = ws.run(g, v, in_R1, threshold, out.extracted);
  if (out.verdict == Verdict::hit_R1) out.hit = ws.last_hit();
  out.max_heap = ws.max_heap();
  return out;
}

inline TruncationOutcome truncated_dijkstra(const Graph& g, VertexId v, std::span<const std::uint8_t> in_R1,
                                            std::size_t threshold) {
  NullMeter m;
  return truncated_dijkstra(g, v, in_R1, threshold, m);
}

// ---------------------------------------------------------------------------
// The structure

enum class Provenance : std::uint8_t { R1, R2, bundled };

struct SearchStats {
  std::uint64_t searches = 0;      // per-vertex searches run
  std::uint64_t sum_extracted = 0;  // sum over searches of |S_v|: pops excluding the start vertex
  std::size_t max_extracted = 0;   // largest pop count of one search, start vertex included
  std::size_t max_heap = 0;        // largest heap size seen in one search
  std::vector<std::uint32_t> per_vertex;  // |S_v| by start vertex, filled on request
};

struct BundleStructure {
  VertexId source = kNoVertex;
  std::uint32_t k = 1;
  std::size_t threshold = kNoTruncation;

  std::vector<VertexId> R;  // ascending
  Membership in_R;
  std::vector<Provenance> provenance;
  std::vector<VertexId> b;        // b[u] = u for u in R
  std::vector<Weight> dist_to_b;  // 0 for u in R

  std::vector<std::size_t> ball_offsets;  // CSR over all vertices; empty range for R
  std::vector<BallEntry> ball_entries;
  std::vector<std::size_t> bundle_offsets;  // CSR over all vertices; empty range outside R
  std::vector<VertexId> bundle_members;

  SearchStats search;

  std::size_t vertex_count() const noexcept { return b.size(); }
  bool in_r(VertexId v) const noexcept { return in_R[v] != 0; }

  std::span<const BallEntry> ball(VertexId v) const noexcept {
    return {ball_entries.data() + ball_offsets[v], ball_entries.data() + ball_offsets[v + 1]};
  }

  std::span<const VertexId> bundle(VertexId u) const noexcept {
    return {bundle_members.data() + bundle_offsets[u], bundle_members.data() + bundle_offsets[u + 1]};
  }
};

struct BundleStats {
  std::size_t sizeR = 0;
  std::size_t sizeR1 = 0;
  std::size_t sizeR2 = 0;
  std::size_t sum_ball = 0;
  std::size_t max_ball = 0;
  double mean_Sv = 0.0;
  std::size_t max_extracted = 0;
  std::size_t max_heap = 0;
};

inline BundleStats bundle_stats(const BundleStructure& bs) {
  BundleStats st;
  st.sizeR = bs.R.size();
  for (Provenance p : bs.provenance) {
    if (p == Provenance::R1) ++st.sizeR1;
    if (p == Provenance::R2) ++st.sizeR2;
  }
  st.sum_ball = bs.ball_entries.size();
  for (VertexId v = 0; v < bs.vertex_count(); ++v) st.max_ball = std::max(st.max_ball, bs.ball(v).size());
  st.mean_Sv = bs.search.searches == 0
                   ? 0.0
                   : static_cast<double>(bs.search.sum_extracted) / static_cast<double>(bs.search.searches);
  st.max_extracted = bs.search.max_extracted;
  st.max_heap = bs.search.max_heap;
  return st;
}

struct ConstructionOptions {
  bool record_search_sizes = false;  // fill SearchStats::per_vertex
};

namespace detail {

// Runs one search per vertex outside `in_R1`, promotes truncated and
// exhausted starts to R2, then assembles b, balls and bundles from the
// extraction lists in one linear pass.
template <Meter M>
BundleStructure build_bundles(const Graph& g, VertexId s, Membership in_R1, std::size_t threshold, M& meter,
                              const ConstructionOptions& opts) {
  const std::size_t n = g.vertex_count();
  BundleStructure bs;
  bs.source = s;
  bs.threshold = threshold;
  bs.provenance.assign(n, Provenance::bundled);
  for (VertexId v = 0; v < n; ++v) {
    if (in_R1[v]) bs.provenance[v] = Provenance::R1;
  }
  if (opts.record_search_sizes) bs.search.per_vertex.assign(n, 0);

  // Phase 1: searches. lists[v] lives at flat[list_offsets[v] .. list_offsets[v+1]).
  std::vector<BallEntry> flat;
  std::vector<std::size_t> list_offsets(n + 1, 0);
  Membership in_R = in_R1;
  SearchWorkspace<M> ws(n, meter);
  for (VertexId v = 0; v < n; ++v) {
    list_offsets[v] = flat.size();
    if (in_R1[v]) continue;
    const Verdict verdict = ws.run(g, v, in_R1, threshold, flat);
    const std::size_t popped = flat.size() - list_offsets[v];
    ++bs.search.searches;
    bs.search.sum_extracted += popped - 1;
    bs.search.max_extracted = std::max(bs.search.max_extracted, popped);
    bs.search.max_heap = std::max(bs.search.max_heap, ws.max_heap());
    if (opts.record_search_sizes) bs.search.per_vertex[v] = static_cast<std::uint32_t>(popped - 1);
    if (verdict != Verdict::hit_R1) {
      in_R[v] = 1;
      bs.provenance[v] = Provenance::R2;
      flat.resize(list_offsets[v]);
    }
  }
  list_offsets[n] = flat.size();

  // Phase 2: b(v) is the first listed vertex in R; Ball(v) the strictly closer prefix.
  bs.in_R = std::move(in_R);
  bs.R = members(bs.in_R);
  bs.b.resize(n);
  bs.dist_to_b.assign(n, 0.0);
  bs.ball_offsets.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    bs.ball_offsets[v] = bs.ball_entries.size();
    if (bs.in_R[v]) {
      bs.b[v] = v;
      continue;
    }
    const std::span<const BallEntry> list(flat.data() + list_offsets[v], flat.data() + list_offsets[v + 1]);
    std::size_t j = 1;
    while (!bs.in_R[list[j].vertex]) ++j;
    bs.b[v] = list[j].vertex;
    bs.dist_to_b[v] = list[j].dist;
    for (std::size_t i = 1; i < j && meter.less(list[i].dist, list[j].dist); ++i) {
      bs.ball_entries.push_back(list[i]);
    }
  }
  bs.ball_offsets[n] = bs.ball_entries.size();

  bs.bundle_offsets.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) ++bs.bundle_offsets[bs.b[v] + 1];
  for (std::size_t i = 0; i < n; ++i) bs.bundle_offsets[i + 1] += bs.bundle_offsets[i];
  bs.bundle_members.resize(n);
  std::vector<std::size_t> cursor(bs.bundle_offsets.begin(), bs.bundle_offsets.end() - 1);
  for (VertexId v = 0; v < n; ++v) bs.bundle_members[cursor[bs.b[v]]++] = v;
  return bs;
}

inline void check_source(const Graph& g, VertexId s) {
  if (s >= g.vertex_count()) throw OutOfRange("source " + std::to_string(s) + " out of range");
}

}  // namespace detail

// R sampled with probability 1/k; each other vertex searches to its first R member.
template <Meter M>
BundleStructure construct_simple(const Graph& g, VertexId s, std::uint32_t k, std::uint64_t seed, M& meter,
                                 const ConstructionOptions& opts = {}) {
  detail::check_source(g, s);
  auto bs = detail::build_bundles(g, s, sample_R1(g.vertex_count(), s, std::max<std::uint32_t>(k, 1), seed),
                                  kNoTruncation, meter, opts);
  bs.k = std::max<std::uint32_t>(k, 1);
  return bs;
}

// R1 sampled with probability 1/k; searches stop after threshold+1 pops and
// truncated starts join R as R2.
template <Meter M>
BundleStructure construct_improved(const Graph& g, VertexId s, const KChoice& kc, std::uint64_t seed, M& meter,
                                   const ConstructionOptions& opts = {}) {
  detail::check_source(g, s);
  if (kc.k < 2) throw Error("improved construction needs k >= 2");
  auto bs = detail::build_bundles(g, s, sample_R1(g.vertex_count(), s, kc.k, seed), kc.threshold, meter, opts);
  bs.k = kc.k;
  return bs;
}

// Untruncated searches against a caller-chosen R (test hook for adversarial R).
template <Meter M>
BundleStructure construct_from_R(const Graph& g, VertexId s, std::span<const VertexId> R, M& meter,
                                 const ConstructionOptions& opts = {}) {
  detail::check_source(g, s);
  Membership in(g.vertex_count(), 0);
  for (VertexId v : R) {
    if (v >= g.vertex_count()) throw OutOfRange("R member " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  if (!in[s]) throw BadR("source must belong to R");
  return detail::build_bundles(g, s, std::move(in), kNoTruncation, meter, opts);
}

inline BundleStructure construct_simple(const Graph& g, VertexId s, std::uint32_t k, std::uint64_t seed) {
  NullMeter m;
  return construct_simple(g, s, k, seed, m);
}

inline BundleStructure construct_improved(const Graph& g, VertexId s, const KChoice& kc, std::uint64_t seed) {
  NullMeter m;
  return construct_improved(g, s, kc, seed, m);
}

inline BundleStructure construct_from_R(const Graph& g, VertexId s, std::span<const VertexId> R) {
  NullMeter m;
  return construct_from_R(g, s, R, m);
}

}  // namespace bsssp
