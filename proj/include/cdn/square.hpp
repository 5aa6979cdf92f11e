#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cdn/core.hpp"
#include "cdn/report.hpp"
#include "cdn/solvers.hpp"

namespace cdn {

// Variant rules: any pool value v with 2 <= v <= bound_A may be replaced
// by v*v as one operation. bound_A caps the squaring chain so the state
// space stays finite; 45000 keeps every square inside 63 bits.
struct SquareConfig {
  Value bound_A = 1;  // 1 disables squaring entirely
  Value value_cap = kValueCap;
  bool allow_large_bound = false;  // lift the 45000 ceiling

  void validate() const;
};

// Breadth-first search over pool states, one operation per level, so the
// first time a value appears is with its minimal op count. Repeated
// states are cut by an additive 64-bit pool signature; the search stops
// early once every target in range is solved, otherwise it exhausts the
// state space. With bound_A = 1 the solved set and min-ops equal
// solve_dfs (the reachable window may stay partial under early stop).
SolveReport solve_with_square(const Pool& instance, Range range,
                              const SquareConfig& cfg, const SolveOptions& opts = {});

struct SweepRow {
  Value bound_A = 0;
  std::uint64_t unsolved_sets = 0;      // sets with >= 1 unsolved target
  std::uint64_t unsolved_problems = 0;  // (set, target) pairs unsolved
};

struct UnsolvedSet {
  Pool set;
  std::vector<int> targets;  // still unsolved at the final bound
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<UnsolvedSet> remaining;  // holdouts after the last bound
};

struct SweepOptions {
  int workers = 1;
  bool allow_large_bound = false;
  // called after each instance at each bound
  std::function<void(Value bound, std::size_t done, std::size_t total)> progress;
};

// Runs the instances through ascending bounds. A problem solved at some
// bound stays solved at every larger one, so each pass only re-solves the
// still-open targets of the previous pass. Bound 1 delegates to the
// standard hashed DFS, which computes the identical solved set faster.
SweepResult bound_sweep(const std::vector<Pool>& instances, Range range,
                        std::vector<Value> bounds, const SweepOptions& opts = {});

}  // namespace cdn
