#pragma once

// Run-time checks of a Bundle Dijkstra trace against exact distances:
//
//   pop_not_exact     d(u_i) at extraction differs from dist(s, u_i)
//   pop_order         dist(s, u_i) decreased from one pop to the next
//   below_distance    some write set d(v) < dist(s, v)
//   bundle_not_exact  after Step 1 of iteration i, d(v) != dist(s, v) for v in Bundle(u_i)
//   write_increase    a write did not lower d(v)
//   step3_depth       Step 3 recursed more than once
//
// The last four need an instrumented trace.

#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bsssp/bundle_dijkstra.hpp"
#include "bsssp/graph.hpp"

namespace bsssp {

enum class InvariantKind { pop_not_exact, pop_order, below_distance, bundle_not_exact, write_increase, step3_depth };

inline std::string_view to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::pop_not_exact: return "pop_not_exact";
    case InvariantKind::pop_order: return "pop_order";
    case InvariantKind::below_distance: return "below_distance";
    case InvariantKind::bundle_not_exact: return "bundle_not_exact";
    case InvariantKind::write_increase: return "write_increase";
    case InvariantKind::step3_depth: return "step3_depth";
  }
  return "?";
}

struct Violation {
  InvariantKind kind;
  std::uint32_t iteration;
  VertexId vertex;
  Weight observed;
  Weight expected;
};

struct InvariantReport {
  std::vector<Violation> violations;
  bool instrumented = false;

  bool ok() const noexcept { return violations.empty(); }

  std::size_t count(InvariantKind k) const noexcept {
    std::size_t c = 0;
    for (const Violation& v : violations) c += v.kind == k;
    return c;
  }

  std::string summary() const {
    if (ok()) return "no violations";
    std::ostringstream os;
    const Violation& f = violations.front();
    os << violations.size() << " violation(s); first: " << to_string(f.kind) << " at iteration " << f.iteration
       << ", vertex " << f.vertex << " (observed " << f.observed << ", expected " << f.expected << ")";
    return os.str();
  }
};

inline InvariantReport check_run_invariants(const RunTrace& trace, std::span<const Weight> oracle) {
  InvariantReport r;
  r.instrumented = trace.instrumented;
  auto add = [&](InvariantKind k, std::uint32_t it, VertexId v, Weight obs, Weight exp) {
    r.violations.push_back(Violation{k, it, v, obs, exp});
  };

  for (std::size_t i = 0; i < trace.popped.size(); ++i) {
    const auto& p = trace.popped[i];
    const auto it = static_cast<std::uint32_t>(i + 1);
    if (p.d != oracle[p.u]) add(InvariantKind::pop_not_exact, it, p.u, p.d, oracle[p.u]);
    if (i > 0) {
      const VertexId prev = trace.popped[i - 1].u;
      if (oracle[p.u] < oracle[prev]) add(InvariantKind::pop_order, it, p.u, oracle[p.u], oracle[prev]);
    }
  }
  if (trace.max_step3_depth > 1) {
    add(InvariantKind::step3_depth, 0, kNoVertex, trace.max_step3_depth, 1);
  }
  if (!trace.instrumented) return r;

  std::vector<Weight> last(oracle.size(), kUnreached);
  for (const auto& w : trace.writes) {
    if (w.value < oracle[w.v]) add(InvariantKind::below_distance, w.iteration, w.v, w.value, oracle[w.v]);
    if (!(w.value < last[w.v])) add(InvariantKind::write_increase, w.iteration, w.v, w.value, last[w.v]);
    last[w.v] = w.value;
  }
  for (const auto& w : trace.after_step1) {
    if (w.value != oracle[w.v]) add(InvariantKind::bundle_not_exact, w.iteration, w.v, w.value, oracle[w.v]);
  }
  return r;
}

}  // namespace bsssp
