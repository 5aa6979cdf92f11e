#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "cdn/core.hpp"
#include "cdn/solution.hpp"

namespace cdn {

// Inclusive target range of a game.
struct Range {
  int lo = 101;
  int hi = 999;
  int size() const { return hi - lo + 1; }
  bool contains(Value v) const {
    return v >= Value(lo) && v <= Value(hi);
  }
};

inline constexpr std::uint16_t kUnsolved = std::numeric_limits<std::uint16_t>::max();

// Result of solving one instance over a target range.
//
// `min_ops[t-lo]` is the fewest operations reaching t (kUnsolved if t is
// unreachable). `reachable` additionally marks every value the instance
// can build in the window [1, 2*hi], which is what nearest-number
// distances are measured against: the closest buildable number can sit
// below the range or above it, and nothing past 2*hi can ever be nearer
// than a tile.
//
// `nodes_visited` is the solver's work counter. For the depth-first
// family it counts complete operation sequences explored (the quantity
// the n!(n-1)!c^(n-1) bounds describe); for breadth-first it counts
// attempted combines, four per value pair.
struct SolveReport {
  Pool instance;
  Range range;
  std::vector<std::uint16_t> min_ops;
  std::vector<bool> reachable;  // index = value, size 2*hi + 1
  std::uint64_t nodes_visited = 0;
  std::vector<Solution> best;  // per target, empty unless solutions were recorded

  bool solved(int target) const {
    return min_ops[target - range.lo] != kUnsolved;
  }
  std::uint16_t ops(int target) const { return min_ops[target - range.lo]; }

  int solved_count() const {
    int c = 0;
    for (auto m : min_ops) c += m != kUnsolved;
    return c;
  }
  bool solves_all() const { return solved_count() == range.size(); }

  // Distance from `target` to the nearest buildable number.
  int nearest_distance(int target) const {
    if (solved(target)) return 0;
    int limit = int(reachable.size());
    for (int d = 1; d < limit; ++d) {
      if (target - d >= 1 && reachable[target - d]) return d;
      if (target + d < limit && reachable[target + d]) return d;
    }
    return -1;  // empty report
  }

  // Nearest buildable number itself (lower one on ties, matching the
  // distance scan order).
  std::optional<Value> nearest_value(int target) const {
    if (solved(target)) return Value(target);
    int d = nearest_distance(target);
    if (d < 0) return std::nullopt;
    if (target - d >= 1 && reachable[target - d]) return Value(target - d);
    return Value(target + d);
  }
};

}  // namespace cdn
