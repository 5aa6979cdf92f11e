#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cdn/enumeration.hpp"
#include "cdn/solvers.hpp"

using namespace cdn;

namespace {

Pool random_standard_instance(int n, std::mt19937_64& rng) {
  // draw without replacement from the standard 24-tile pool
  std::vector<Value> tiles;
  for (auto [v, m] : StandardPoolSpec::tiles())
    for (int i = 0; i < m; ++i) tiles.push_back(v);
  std::shuffle(tiles.begin(), tiles.end(), rng);
  Pool p;
  for (int i = 0; i < n; ++i) p.add(tiles[i]);
  return p;
}

}  // namespace

TEST_CASE("naive DFS on {1,2,3,4,5,6}: frozen solved count and node count") {
  SolveReport rep = solve_dfs(Pool{1, 2, 3, 4, 5, 6}, Range{101, 999});
  CHECK(rep.solved_count() == 441);
  CHECK(rep.nodes_visited == 1340488);
  // completed-sequence count lies inside the 6-tile complexity bounds
  CHECK(rep.nodes_visited >= 656100);
  CHECK(rep.nodes_visited <= 2764800);
}

TEST_CASE("hashed DFS matches naive DFS exactly, with far fewer nodes") {
  SolveReport naive = solve_dfs(Pool{1, 2, 3, 4, 5, 6}, Range{101, 999});
  SolveReport hashed = solve_dfs_hashed(Pool{1, 2, 3, 4, 5, 6}, Range{101, 999});
  CHECK(hashed.min_ops == naive.min_ops);
  CHECK(hashed.reachable == naive.reachable);
  CHECK(hashed.nodes_visited == 5282);
  CHECK(hashed.nodes_visited < naive.nodes_visited / 100);
}

TEST_CASE("hashed DFS equivalence across bit sizes and collision policies") {
  std::mt19937_64 rng(2024);
  Range range{101, 999};
  for (int n : {4, 5, 6}) {
    for (int it = 0; it < 25; ++it) {
      Pool p = random_standard_instance(n, rng);
      SolveReport ref = solve_dfs(p, range);
      for (int bits : {10, 15, 20}) {
        for (auto pol : {CollisionPolicy::ReplaceAlways, CollisionPolicy::SetPerSlot}) {
          SolveReport h = solve_dfs_hashed(p, range, bits, pol);
          REQUIRE_MESSAGE(h.min_ops == ref.min_ops, p.to_string());
          REQUIRE(h.reachable == ref.reachable);
        }
      }
    }
  }
}

TEST_CASE("recorded solutions replay to their targets with minimal length") {
  SolveOptions opts;
  opts.record_solutions = true;
  Range range{101, 999};
  SolveReport rep = solve_dfs_hashed(Pool{1, 3, 7, 10, 25, 50}, range, 15,
                                     CollisionPolicy::ReplaceAlways, opts);
  for (int t = range.lo; t <= range.hi; ++t) {
    if (!rep.solved(t)) continue;
    const Solution& s = rep.best[t - range.lo];
    CHECK(replay(Pool{1, 3, 7, 10, 25, 50}, s) == Value(t));
    CHECK(s.op_count() == rep.ops(t));
  }
}

TEST_CASE("nearest-number reporting for an unsolvable instance") {
  SolveReport rep = solve_dfs_hashed(Pool{1, 1, 2, 2, 3, 3}, Range{101, 999});
  CHECK(rep.solved_count() == 0);
  for (int t : {101, 500, 999}) {
    CHECK(rep.nearest_distance(t) >= 1);
    auto v = rep.nearest_value(t);
    REQUIRE(v.has_value());
    CHECK(*v != Value(t));
  }
}

TEST_CASE("backward chaining finds 822 from {3,50,7,4,75,8}") {
  Pool pool{3, 50, 7, 4, 75, 8};
  for (auto* solver : {&solve_backward_buisson, &solve_backward_allops}) {
    auto sol = (*solver)(pool, 822);
    REQUIRE(sol.has_value());
    CHECK(replay(pool, *sol) == Value(822));
  }
}

TEST_CASE("backward chaining is incomplete: independent products are out of reach") {
  // 899 = 29 * 31 where both factors must be built first
  Pool pool{1, 1, 4, 5, 6, 7};
  CHECK(solve_dfs_hashed(pool, Range{898, 900}).solved(899));
  CHECK(!solve_backward_buisson(pool, 899).has_value());
  CHECK(!solve_backward_allops(pool, 899).has_value());
}

TEST_CASE("backward solutions always replay when they exist") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Pool p = random_standard_instance(6, rng);
    Value target = 101 + rng() % 899;
    SolveReport ref = solve_dfs_hashed(p, Range{101, 999});
    for (auto* solver : {&solve_backward_buisson, &solve_backward_allops}) {
      auto sol = (*solver)(p, target);
      if (sol) {
        CHECK(replay(p, *sol) == target);
        // backward success implies the exhaustive solver agrees
        CHECK(ref.solved(int(target)));
      }
    }
  }
}
