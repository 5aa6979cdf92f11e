#pragma once

#include <vector>

#include "cdn/report.hpp"
#include "cdn/solution.hpp"

namespace cdn::detail {

// Shared marking state for the solvers. Values are marked over the window
// [1, 2*hi] so nearest-number distances come out exact: the closest
// buildable number may lie outside the target range, and nothing past
// 2*hi can be nearer than a tile.
struct Marker {
  std::vector<std::uint16_t> min_at;  // per value in window
  Range range;
  Value window_hi;
  bool record;
  std::vector<Solution>* best = nullptr;
  std::vector<Step> stack;

  Marker(Range r, bool record_solutions, std::vector<Solution>* best_out)
      : range(r), window_hi(Value(2) * r.hi), record(record_solutions), best(best_out) {
    min_at.assign(std::size_t(window_hi) + 1, kUnsolved);
  }

  void mark(Value v, int depth) {
    if (v > window_hi) return;
    if (std::uint16_t(depth) < min_at[v]) {
      min_at[v] = std::uint16_t(depth);
      if (record && range.contains(v)) {
        Solution& s = (*best)[std::size_t(v) - range.lo];
        s.steps = stack;
        s.final = v;
      }
    }
  }

  void finish(SolveReport& rep) const {
    rep.min_ops.assign(range.size(), kUnsolved);
    for (int t = range.lo; t <= range.hi; ++t) rep.min_ops[t - range.lo] = min_at[t];
    rep.reachable.assign(std::size_t(window_hi) + 1, false);
    for (std::size_t v = 1; v < min_at.size(); ++v)
      if (min_at[v] != kUnsolved) rep.reachable[v] = true;
  }
};

}  // namespace cdn::detail
