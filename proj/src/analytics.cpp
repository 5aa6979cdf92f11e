#include "cdn/analytics.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdn/enumeration.hpp"
#include "cdn/solvers.hpp"

namespace cdn {

namespace {

void check_covers(const GameDatabase& db, Range game) {
  if (game.lo < db.range().lo || game.hi > db.range().hi)
    throw std::invalid_argument("database does not cover the requested target range");
}

bool is_large(Value v) { return v == 25 || v == 50 || v == 75 || v == 100; }

}  // namespace

DistanceHistogram distance_histogram(const GameDatabase& db, Range game) {
  check_covers(db, game);
  DistanceHistogram h;
  int width = game.size();
  std::vector<int> solved_targets;
  for (std::size_t i = 0; i < db.record_count(); ++i) {
    solved_targets.clear();
    for (int t = game.lo; t <= game.hi; ++t)
      if (db.solved(i, t)) solved_targets.push_back(t);
    for (int t = game.lo; t <= game.hi; ++t) {
      int d;
      if (db.solved(i, t)) {
        d = 0;
      } else if (solved_targets.empty()) {
        d = width;  // nothing solvable anywhere in the game range
      } else {
        auto it = std::lower_bound(solved_targets.begin(), solved_targets.end(), t);
        d = width;
        if (it != solved_targets.end()) d = *it - t;
        if (it != solved_targets.begin()) d = std::min(d, t - *(it - 1));
      }
      if (std::size_t(d) >= h.counts.size()) h.counts.resize(d + 1, 0);
      ++h.counts[d];
    }
  }
  return h;
}

std::vector<std::uint32_t> per_target_success(const GameDatabase& db, Range game) {
  check_covers(db, game);
  std::vector<std::uint32_t> counts(game.size(), 0);
  for (std::size_t i = 0; i < db.record_count(); ++i)
    for (int t = game.lo; t <= game.hi; ++t)
      if (db.solved(i, t)) ++counts[t - game.lo];
  return counts;
}

std::vector<Pool> instances_solving_all(const GameDatabase& db, Range game) {
  check_covers(db, game);
  std::vector<Pool> out;
  for (std::size_t i = 0; i < db.record_count(); ++i) {
    bool all = true;
    for (int t = game.lo; t <= game.hi && all; ++t) all = db.solved(i, t);
    if (all) out.push_back(db.instance(i));
  }
  return out;
}

std::vector<LargeCountRow> large_count_breakdown(const GameDatabase& db, Range game) {
  check_covers(db, game);
  std::vector<LargeCountRow> rows(5);
  for (int k = 0; k < 5; ++k) rows[k].large_numbers = k;
  for (std::size_t i = 0; i < db.record_count(); ++i) {
    Pool p = db.instance(i);
    int larges = 0;
    for (Value v : p) larges += is_large(v);
    LargeCountRow& row = rows[larges];
    ++row.instances;
    row.problems += game.size();
    for (int t = game.lo; t <= game.hi; ++t) row.solved += db.solved(i, t);
  }
  return rows;
}

TupleSuccess tuple_success(const GameDatabase& db, Range game, const Pool& tuple) {
  check_covers(db, game);
  TupleSuccess s;
  for (std::size_t i = 0; i < db.record_count(); ++i) {
    if (!db.instance(i).contains_all(tuple)) continue;
    ++s.instances;
    s.problems += game.size();
    for (int t = game.lo; t <= game.hi; ++t) s.solved += db.solved(i, t);
  }
  return s;
}

std::vector<PerNumberRow> per_number_stats(const GameDatabase& db, Range game) {
  check_covers(db, game);
  std::vector<PerNumberRow> rows;
  auto row_for = [&rows](Value v) -> PerNumberRow& {
    for (auto& r : rows)
      if (r.number == v) return r;
    rows.push_back({v, 0, 0, 0});
    return rows.back();
  };
  for (std::size_t i = 0; i < db.record_count(); ++i) {
    Pool p = db.instance(i);
    std::uint64_t solved = 0;
    for (int t = game.lo; t <= game.hi; ++t) solved += db.solved(i, t);
    Value prev = 0;
    for (Value v : p) {
      if (v == prev) continue;  // presence, not multiplicity
      prev = v;
      PerNumberRow& r = row_for(v);
      ++r.instances;
      r.problems += game.size();
      r.solved += solved;
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const PerNumberRow& a, const PerNumberRow& b) { return a.number < b.number; });
  return rows;
}

std::vector<SmallSetScore> best_small_sets(int k, Range game, std::size_t top) {
  std::vector<SmallSetScore> scores;
  for (const Pool& p : standard_instances(k)) {
    SolveReport rep = solve_dfs_hashed(p, game);
    scores.push_back({p, rep.solved_count()});
  }
  std::stable_sort(scores.begin(), scores.end(),
                   [](const SmallSetScore& a, const SmallSetScore& b) {
                     return a.targets_solved > b.targets_solved;
                   });
  if (scores.size() > top) scores.resize(top);
  return scores;
}

std::vector<SelectedProblem> select_problems(const GameDatabase& db, Range game,
                                             const ProblemFilter& filter) {
  check_covers(db, game);
  std::vector<SelectedProblem> out;
  std::vector<int> solved_targets;
  for (std::size_t i = 0; i < db.record_count() && out.size() < filter.limit; ++i) {
    solved_targets.clear();
    for (int t = game.lo; t <= game.hi; ++t)
      if (db.solved(i, t)) solved_targets.push_back(t);
    for (int t = game.lo; t <= game.hi && out.size() < filter.limit; ++t) {
      std::uint8_t ops = db.ops(i, t);
      bool solved = ops != GameDatabase::kUnsolvedByte;
      int distance = 0;
      int nearest = t;
      if (!solved) {
        distance = game.size();
        auto it = std::lower_bound(solved_targets.begin(), solved_targets.end(), t);
        if (it != solved_targets.end()) {
          distance = *it - t;
          nearest = *it;
        }
        if (it != solved_targets.begin() && t - *(it - 1) < distance) {
          distance = t - *(it - 1);
          nearest = *(it - 1);
        }
      }
      if (filter.min_ops_at_least && (!solved || ops < *filter.min_ops_at_least)) continue;
      if (filter.unsolved_distance_at_least &&
          (solved || distance < *filter.unsolved_distance_at_least))
        continue;
      if (filter.nearest_ops_at_least &&
          (solved || solved_targets.empty() ||
           db.ops(i, nearest) < *filter.nearest_ops_at_least))
        continue;
      out.push_back({i, t, ops, distance});
    }
  }
  return out;
}

}  // namespace cdn
