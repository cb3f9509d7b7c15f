#pragma once

// Comparison-addition cost model. Solver code never touches a weight except
// through a meter's add() and cmp()/less(), so CostMeter sees every real-number
// operation a run performs. NullMeter is the same interface with no counting;
// the choice is a template parameter, so unmetered builds pay nothing.
//
// kUnreached is control flow, not a real number: comparisons that involve it
// are answered but not counted, and callers never add to it.

#include <compare>
#include <concepts>
#include <cstdint>

#include "bsssp/graph.hpp"

namespace bsssp {

struct MeterSnapshot {
  std::uint64_t comparisons = 0;
  std::uint64_t additions = 0;

  std::uint64_t total() const noexcept { return comparisons + additions; }
  friend bool operator==(const MeterSnapshot&, const MeterSnapshot&) = default;
};

namespace detail {

inline std::weak_ordering compare_weights(Weight a, Weight b) noexcept {
  if (a < b) return std::weak_ordering::less;
  if (b < a) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace detail

class CostMeter {
 public:
  static constexpr bool counting = true;

  Weight add(Weight a, Weight b) noexcept {
    ++additions_;
    return a + b;
  }

  std::weak_ordering cmp(Weight a, Weight b) noexcept {
    if (!is_unreached(a) && !is_unreached(b)) ++comparisons_;
    return detail::compare_weights(a, b);
  }

  bool less(Weight a, Weight b) noexcept { return cmp(a, b) < 0; }

  MeterSnapshot snapshot() const noexcept { return {comparisons_, additions_}; }

  void reset() noexcept {
    comparisons_ = 0;
    additions_ = 0;
  }

 private:
  std::uint64_t comparisons_ = 0;
  std::uint64_t additions_ = 0;
};

class NullMeter {
 public:
  static constexpr bool counting = false;

  Weight add(Weight a, Weight b) const noexcept { return a + b; }
  std::weak_ordering cmp(Weight a, Weight b) const noexcept { return detail::compare_weights(a, b); }
  bool less(Weight a, Weight b) const noexcept { return a < b; }
  MeterSnapshot snapshot() const noexcept { return {}; }
  void reset() noexcept {}
};

template <class M>
concept Meter = requires(M m, Weight w) {
  { m.add(w, w) } -> std::same_as<Weight>;
  { m.cmp(w, w) } -> std::same_as<std::weak_ordering>;
  { m.less(w, w) } -> std::same_as<bool>;
  { m.snapshot() } -> std::same_as<MeterSnapshot>;
};

}  // namespace bsssp
