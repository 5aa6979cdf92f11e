#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdn/core.hpp"

namespace cdn {

// Wide integer for the complexity formulas; d_max(12) does not fit in 64 bits.
using BigCount = unsigned __int128;

std::string big_to_string(BigCount v);

// The standard tile pool: 1..10 twice, 25/50/75/100 once. 24 tiles total.
struct StandardPoolSpec {
  static const std::vector<std::pair<Value, int>>& tiles();  // (value, multiplicity)
};

// Every legal n-tile multiset exactly once, pools sorted ascending and
// listed in lexicographic order. That order fixes database record order.
std::vector<Pool> standard_instances(int n);

// Closed form: sum over i pairs of C(10,i) * C(14-i, n-2i). Valid for n <= 20.
std::uint64_t standard_instance_count(int n);

// Combinations with repetition: k numbers drawn from 1..maxval.
std::uint64_t extended_instance_count(int k, int maxval);

// Deterministic uniform sample without replacement from the
// combinations-with-repetition space. Throws if count exceeds the space.
std::vector<Pool> extended_instances_sample(int k, int maxval, std::uint64_t count,
                                            std::uint64_t seed);

enum class Algorithm : std::uint8_t {
  DfsMax,
  DfsMin,
  BfsMax,
  BfsMin,
  BackwardMax,
  BackwardMin,
};

// Exact evaluation of the worst/best-case operation counts:
//   dfs:      n! (n-1)! c^(n-1) with c = 2 (max) or 3/2 (min)
//   bfs:      sum_p C(n,p) c^(p-1) prod_{i<p} (2i-1) with c = 4 or 3
//   backward: prod (max) or sum (min) of (4i+1)(2i-1) over i = 1..floor(n/2)
BigCount complexity_bounds(Algorithm algorithm, int n);

}  // namespace cdn
