#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdn/database.hpp"

namespace cdn {

// Count of (instance, target) problems per distance to the nearest
// solvable number. Distance 0 = solved. Counts sum to problem count.
struct DistanceHistogram {
  std::vector<std::uint64_t> counts;

  std::uint64_t at(std::size_t d) const { return d < counts.size() ? counts[d] : 0; }
  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
};

// Buckets every problem by the distance from its target to the nearest
// solvable target within the game range (0 = solved). Instances solving
// nothing in the range land in the bucket at index game.size().
DistanceHistogram distance_histogram(const GameDatabase& db, Range game);
inline DistanceHistogram distance_histogram(const GameDatabase& db) {
  return distance_histogram(db, db.range());
}

// Per-target count of instances solving it (index = target - lo).
std::vector<std::uint32_t> per_target_success(const GameDatabase& db, Range game);

// Instances solving every target of the game range.
std::vector<Pool> instances_solving_all(const GameDatabase& db, Range game);

struct LargeCountRow {
  int large_numbers = 0;
  std::uint64_t instances = 0;
  std::uint64_t problems = 0;
  std::uint64_t solved = 0;
};
// Rows for 0..4 large numbers (25/50/75/100) in the instance.
std::vector<LargeCountRow> large_count_breakdown(const GameDatabase& db, Range game);

struct TupleSuccess {
  std::uint64_t instances = 0;  // instances containing the tuple
  std::uint64_t problems = 0;
  std::uint64_t solved = 0;
  double rate() const { return problems ? double(solved) / double(problems) : 0.0; }
};
// Solvable-problem rate over instances containing `tuple` as a sub-multiset.
TupleSuccess tuple_success(const GameDatabase& db, Range game, const Pool& tuple);

struct PerNumberRow {
  Value number = 0;
  std::uint64_t instances = 0;  // presence count
  std::uint64_t problems = 0;
  std::uint64_t solved = 0;
};
// Presence count and solved share for every distinct tile value.
std::vector<PerNumberRow> per_number_stats(const GameDatabase& db, Range game);

struct SmallSetScore {
  Pool set;
  int targets_solved = 0;
};
// Solves every standard k-tile instance directly and ranks them by the
// number of game targets solved. Independent of any database.
std::vector<SmallSetScore> best_small_sets(int k, Range game, std::size_t top);

struct ProblemFilter {
  std::optional<int> min_ops_at_least;           // solved problems needing >= k ops
  std::optional<int> unsolved_distance_at_least; // unsolved, nearest >= d away
  std::optional<int> nearest_ops_at_least;       // unsolved, nearest needs >= k ops
  std::size_t limit = SIZE_MAX;
};

struct SelectedProblem {
  std::size_t instance_index = 0;
  int target = 0;
  std::uint8_t min_ops = GameDatabase::kUnsolvedByte;
  int distance = 0;
};
// Pure filter over the database, in canonical (instance, target) order.
std::vector<SelectedProblem> select_problems(const GameDatabase& db, Range game,
                                             const ProblemFilter& filter);

}  // namespace cdn
