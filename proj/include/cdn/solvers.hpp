#pragma once

#include <optional>

#include "cdn/core.hpp"
#include "cdn/hashing.hpp"
#include "cdn/report.hpp"
#include "cdn/solution.hpp"

namespace cdn {

struct SolveOptions {
  bool record_solutions = false;  // keep the best Solution per in-range target
};

// Exhaustive naive depth-first search: pick two numbers, combine, recurse
// on the reduced pool until one number remains. Marks every reachable
// value and records minimal op counts.
SolveReport solve_dfs(const Pool& instance, Range range, const SolveOptions& opts = {});

// Depth-first search with a transposition table: a pool seen a second
// time in the tree is discarded, since its subtree was already fully
// developed at the same depth. Produces the same solved set and min-ops
// as solve_dfs with strictly less work.
SolveReport solve_dfs_hashed(const Pool& instance, Range range, int bits = 15,
                             CollisionPolicy policy = CollisionPolicy::ReplaceAlways,
                             const SolveOptions& opts = {});

// Historical backward chaining (Buisson): from the goal, alternate a
// +/- adjustment with an exact division by a pool number until a pool
// number itself is reached. Incomplete by design: solutions needing
// independently built intermediates are out of reach.
std::optional<Solution> solve_backward_buisson(const Pool& instance, Value target);

// Backward chaining refined with all four operations at each step; still
// unable to use intermediate-product solutions.
std::optional<Solution> solve_backward_allops(const Pool& instance, Value target);

}  // namespace cdn
