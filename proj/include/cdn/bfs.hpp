#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cdn/core.hpp"
#include "cdn/report.hpp"

namespace cdn {

using SubsetIndex = std::uint32_t;

// Per subset-bitmask, the unordered 2-partitions used to generate it:
// for every listed pair, sub | complement == mask, sub & complement == 0
// and sub < complement. Singleton masks carry an empty list. A p-bit mask
// has (2^p - 2) / 2 pairs.
struct DecompositionTable {
  int n = 0;
  std::vector<std::vector<std::pair<SubsetIndex, SubsetIndex>>> pairs;  // index = mask

  const std::vector<std::pair<SubsetIndex, SubsetIndex>>& of(SubsetIndex mask) const {
    return pairs[mask];
  }
};

DecompositionTable build_decomposition(int n);

// N(p): the maximal number of values generated by a p-element subset,
// N(p) = 4^(p-1) * prod_{i=1}^{p-1} (2i-1). Sizes the array-variant buffers.
std::uint64_t subset_generation_bound(int p);

enum class BfsStorage : std::uint8_t { Arrays, Sets };

struct MemoryBudgetExceeded : std::runtime_error {
  MemoryBudgetExceeded(SubsetIndex mask, std::size_t bytes)
      : std::runtime_error("breadth-first array budget exceeded at mask " +
                           std::to_string(mask) + " (" + std::to_string(bytes) +
                           " bytes)"),
        mask(mask) {}
  SubsetIndex mask;
};

struct BfsOptions {
  BfsStorage storage = BfsStorage::Arrays;
  std::size_t memory_budget = std::size_t(2) << 30;  // bytes, Arrays variant
  // When set, receives the generated values per mask (full mask excluded).
  std::vector<std::vector<Value>>* capture = nullptr;
};

// Breadth-first generation over all subsets of the instance, in
// increasing mask order (every proper submask precedes its mask). Values
// for the full mask are tested against the range but never stored.
SolveReport solve_bfs(const Pool& instance, Range range, const BfsOptions& opts = {});

}  // namespace cdn
