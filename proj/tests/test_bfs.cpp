#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cdn/bfs.hpp"
#include "cdn/enumeration.hpp"
#include "cdn/solvers.hpp"

using namespace cdn;

TEST_CASE("decomposition table lists every unordered 2-partition once") {
  for (int n : {2, 3, 4, 6}) {
    DecompositionTable t = build_decomposition(n);
    REQUIRE(t.n == n);
    REQUIRE(t.pairs.size() == std::size_t(1) << n);
    for (SubsetIndex mask = 1; mask < (SubsetIndex(1) << n); ++mask) {
      int bits = __builtin_popcount(mask);
      const auto& pairs = t.of(mask);
      // a p-bit mask decomposes into (2^p - 2) / 2 unordered pairs
      CHECK(pairs.size() == std::size_t(((1u << bits) - 2) / 2));
      for (auto [a, b] : pairs) {
        CHECK((a | b) == mask);
        CHECK((a & b) == 0u);
        CHECK(a < b);
        CHECK(a != 0u);
      }
    }
  }
}

TEST_CASE("subset generation bound: N(p) = 4^(p-1) prod (2i-1)") {
  CHECK(subset_generation_bound(1) == 1);
  CHECK(subset_generation_bound(2) == 4);
  CHECK(subset_generation_bound(3) == 48);
  CHECK(subset_generation_bound(4) == 960);
  CHECK(subset_generation_bound(6) == 967680);
}

TEST_CASE("both storage variants match the DFS family exactly") {
  std::mt19937_64 rng(99);
  std::vector<Value> tiles;
  for (auto [v, m] : StandardPoolSpec::tiles())
    for (int i = 0; i < m; ++i) tiles.push_back(v);
  Range range{101, 999};
  for (int n : {4, 5, 6}) {
    for (int it = 0; it < 15; ++it) {
      std::shuffle(tiles.begin(), tiles.end(), rng);
      Pool p;
      for (int i = 0; i < n; ++i) p.add(tiles[i]);
      SolveReport ref = solve_dfs_hashed(p, range);
      for (auto storage : {BfsStorage::Arrays, BfsStorage::Sets}) {
        BfsOptions opts;
        opts.storage = storage;
        SolveReport b = solve_bfs(p, range, opts);
        REQUIRE_MESSAGE(b.min_ops == ref.min_ops, p.to_string());
        REQUIRE(b.reachable == ref.reachable);
      }
    }
  }
}

TEST_CASE("attempted-combine counter stays within the 6-tile bound") {
  for (Pool p : {Pool{1, 2, 3, 4, 5, 6}, Pool{25, 50, 75, 100, 9, 10}, Pool{1, 1, 2, 2, 3, 3}}) {
    SolveReport rep = solve_bfs(p, Range{101, 999});
    CHECK(rep.nodes_visited <= 1144386);
    CHECK(rep.nodes_visited > 0);
  }
}

TEST_CASE("capture exposes per-mask values consistent with the bound") {
  Pool p{3, 7, 25, 50};
  std::vector<std::vector<Value>> captured;
  BfsOptions opts;
  opts.capture = &captured;
  solve_bfs(p, Range{101, 999}, opts);
  REQUIRE(captured.size() == std::size_t(1) << 4);
  for (SubsetIndex mask = 1; mask < 16; ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits == 1) {
      REQUIRE(captured[mask].size() == 1);
      continue;
    }
    CHECK(captured[mask].size() <= subset_generation_bound(bits));
    for (Value v : captured[mask]) CHECK(v >= 1);
  }
  // full mask is tested against the range but never stored
  CHECK(captured[15].empty());
}

TEST_CASE("array variant enforces its memory budget") {
  BfsOptions opts;
  opts.storage = BfsStorage::Arrays;
  opts.memory_budget = 16;  // bytes: nothing fits
  CHECK_THROWS_AS(solve_bfs(Pool{1, 2, 3, 4, 5, 6}, Range{101, 999}, opts),
                  MemoryBudgetExceeded);
}
