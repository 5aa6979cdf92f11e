// countdown: command-line surface for the Countdown numbers-game toolkit.
//
// Subcommands: solve, build-db, stats, bench, square, sweep-A,
// count-solutions. See docs/cli.md for flags and CSV column contracts.
//
// Exit codes: 0 success (an "unsolvable" answer is a valid result),
// 2 usage error, 3 I/O error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cdn/analytics.hpp"
#include "cdn/bfs.hpp"
#include "cdn/canonical.hpp"
#include "cdn/database.hpp"
#include "cdn/enumeration.hpp"
#include "cdn/solvers.hpp"
#include "cdn/square.hpp"

namespace {

using namespace cdn;
using Clock = std::chrono::steady_clock;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

double elapsed_ms(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

// ---------------------------------------------------------------- output

// One result table: fixed column set, rendered as aligned text or CSV.
// CSV emits a header row; column order is part of the CLI contract.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(bool csv) const {
    if (csv) {
      print_csv_row(header);
      for (const auto& r : rows) print_csv_row(r);
      return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c)
        width[c] = std::max(width[c], r[c].size());
    print_text_row(header, width);
    for (const auto& r : rows) print_text_row(r, width);
  }

 private:
  static void print_csv_row(const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c)
      std::printf("%s%s", c ? "," : "", r[c].c_str());
    std::printf("\n");
  }
  static void print_text_row(const std::vector<std::string>& r,
                             const std::vector<std::size_t>& width) {
    for (std::size_t c = 0; c < r.size(); ++c)
      std::printf("%s%-*s", c ? "  " : "", int(width[c]), r[c].c_str());
    std::printf("\n");
  }
};

std::string num(std::uint64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------- parsing

Pool parse_numbers(const std::string& spec) {
  Pool p;
  std::size_t i = 0;
  while (i < spec.size()) {
    std::size_t j = spec.find(',', i);
    if (j == std::string::npos) j = spec.size();
    p.add(Value(std::stoull(spec.substr(i, j - i))));
    i = j + 1;
  }
  if (p.empty()) throw CLI::ValidationError("--numbers", "needs at least one number");
  return p;
}

Range parse_range(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--range", "expected lo:hi");
  Range r{std::stoi(spec.substr(0, colon)), std::stoi(spec.substr(colon + 1))};
  if (r.lo < 1 || r.hi < r.lo)
    throw CLI::ValidationError("--range", "needs 1 <= lo <= hi");
  return r;
}

SolverChoice parse_solver(const std::string& algo) {
  if (algo == "dfs") return SolverChoice::Dfs;
  if (algo == "dfs-hash") return SolverChoice::DfsHash;
  if (algo == "dfs-hash-set") return SolverChoice::DfsHashSet;
  if (algo == "bfs-array") return SolverChoice::BfsArrays;
  if (algo == "bfs-set") return SolverChoice::BfsSets;
  throw CLI::ValidationError("--algo", "unknown algorithm: " + algo);
}

std::vector<std::string> split_list(const std::string& spec) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i <= spec.size()) {
    std::size_t j = spec.find(',', i);
    if (j == std::string::npos) j = spec.size();
    if (j > i) out.push_back(spec.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

// ---------------------------------------------------------------- solve

int cmd_solve(const std::string& numbers, std::int64_t target, const std::string& range_spec,
              const std::string& algo, int hash_bits, bool csv) {
  Pool pool = parse_numbers(numbers);
  Range range = parse_range(range_spec);

  if (target >= 0) {
    // Single target: widen the solve window around it so nearest-number
    // reporting works for any target, then answer just for `target`.
    Range window{std::max(1, int(target) - 1), int(target) + 1};
    if (algo == "backward" || algo == "backward-all") {
      auto sol = algo == "backward" ? solve_backward_buisson(pool, Value(target))
                                    : solve_backward_allops(pool, Value(target));
      if (!sol) {
        std::printf("unsolvable by %s (incomplete search; no fallback distance)\n",
                    algo.c_str());
        return 0;
      }
      std::printf("%s", format_solution(pool, *sol).c_str());
      std::printf("ops: %zu\n", sol->op_count());
      return 0;
    }
    SolveOptions opts;
    opts.record_solutions = true;
    SolveReport rep;
    if (algo == "dfs")
      rep = solve_dfs(pool, window, opts);
    else if (algo == "dfs-hash" || algo == "dfs-hash-set")
      rep = solve_dfs_hashed(pool, window, hash_bits,
                             algo == "dfs-hash" ? CollisionPolicy::ReplaceAlways
                                                : CollisionPolicy::SetPerSlot,
                             opts);
    else
      rep = run_solver(parse_solver(algo), pool, window, hash_bits);
    if (rep.solved(int(target))) {
      const Solution& sol = rep.best.empty() ? Solution{} : rep.best[target - window.lo];
      if (!sol.steps.empty() || pool.contains(Value(target))) {
        if (sol.steps.empty())
          std::printf("%llu  %s (given)\n", (unsigned long long)target,
                      pool.to_string().c_str());
        else
          std::printf("%s", format_solution(pool, sol).c_str());
      }
      std::printf("min-ops: %u\nnodes: %llu\n", rep.ops(int(target)),
                  (unsigned long long)rep.nodes_visited);
    } else {
      int d = rep.nearest_distance(int(target));
      auto v = rep.nearest_value(int(target));
      std::printf("unsolvable; nearest %llu at distance %d\nnodes: %llu\n",
                  v ? (unsigned long long)*v : 0ULL, d,
                  (unsigned long long)rep.nodes_visited);
    }
    return 0;
  }

  // Whole range: summary plus per-target rows.
  if (algo == "backward" || algo == "backward-all")
    throw CLI::ValidationError("--algo", "backward solvers need -t");
  SolveReport rep = run_solver(parse_solver(algo), pool, range, hash_bits);
  Table t;
  t.header = {"target", "min_ops", "nearest", "distance"};
  for (int tg = range.lo; tg <= range.hi; ++tg) {
    auto v = rep.nearest_value(tg);
    t.rows.push_back({num(tg), rep.solved(tg) ? num(rep.ops(tg)) : "unsolved",
                      v ? num(*v) : "-", num(rep.nearest_distance(tg))});
  }
  if (!csv)
    std::printf("solved %d/%d targets, nodes %llu\n", rep.solved_count(), range.size(),
                (unsigned long long)rep.nodes_visited);
  t.print(csv);
  return 0;
}

// ---------------------------------------------------------------- build-db

int cmd_build_db(int n, const std::string& range_spec, int workers, const std::string& algo,
                 int hash_bits, const std::string& out, bool quiet) {
  Range range = parse_range(range_spec);
  BuildOptions opts;
  opts.workers = workers;
  opts.algo = parse_solver(algo);
  opts.hash_bits = hash_bits;
  if (!quiet) {
    opts.progress = [](std::size_t done, std::size_t total) {
      if (done % 1024 == 0 || done == total)
        std::fprintf(stderr, "\r%zu/%zu", done, total);
    };
  }
  GameDatabase db = build_database(n, range, opts);
  if (!quiet) std::fprintf(stderr, "\n");
  try {
    db.save(out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  }
  std::printf("wrote %s: %zu instances x %d targets (%llu problems)\n", out.c_str(),
              db.record_count(), range.size(), (unsigned long long)db.problem_count());
  return 0;
}

// ---------------------------------------------------------------- stats

GameDatabase load_db(const std::string& path) { return GameDatabase::load(path); }

int stats_distances(const GameDatabase& db, Range game, bool csv) {
  DistanceHistogram h = distance_histogram(db, game);
  Table t;
  t.header = {"distance", "problems"};
  for (std::size_t d = 0; d < h.counts.size(); ++d)
    t.rows.push_back({num(d), num(h.counts[d])});
  t.print(csv);
  return 0;
}

int stats_per_target(const GameDatabase& db, Range game, bool csv) {
  auto counts = per_target_success(db, game);
  Table t;
  t.header = {"target", "instances_solving"};
  for (int tg = game.lo; tg <= game.hi; ++tg)
    t.rows.push_back({num(tg), num(counts[tg - game.lo])});
  t.print(csv);
  return 0;
}

int stats_per_number(const GameDatabase& db, Range game, bool csv) {
  Table t;
  t.header = {"number", "instances", "problems", "solved"};
  for (const auto& r : per_number_stats(db, game))
    t.rows.push_back({num(r.number), num(r.instances), num(r.problems), num(r.solved)});
  t.print(csv);
  return 0;
}

int stats_large_count(const GameDatabase& db, Range game, bool csv) {
  Table t;
  t.header = {"large_numbers", "instances", "problems", "solved"};
  for (const auto& r : large_count_breakdown(db, game))
    t.rows.push_back({num(r.large_numbers), num(r.instances), num(r.problems), num(r.solved)});
  t.print(csv);
  return 0;
}

int stats_tuples(const GameDatabase& db, Range game, const std::string& numbers, bool csv) {
  TupleSuccess s = tuple_success(db, game, parse_numbers(numbers));
  Table t;
  t.header = {"tuple", "instances", "problems", "solved", "rate"};
  char rate[32];
  std::snprintf(rate, sizeof rate, "%.6f", s.rate());
  t.rows.push_back({parse_numbers(numbers).to_string(), num(s.instances), num(s.problems),
                    num(s.solved), rate});
  t.print(csv);
  return 0;
}

int stats_solve_all(const GameDatabase& db, Range game, bool csv) {
  auto sets = instances_solving_all(db, game);
  Table t;
  t.header = {"instance"};
  for (const auto& p : sets) t.rows.push_back({p.to_string()});
  if (!csv) std::printf("instances solving all targets: %zu\n", sets.size());
  t.print(csv);
  return 0;
}

int stats_select(const GameDatabase& db, Range game, int min_ops, int distance,
                 int nearest_ops, std::int64_t limit, bool csv) {
  ProblemFilter f;
  if (min_ops >= 0) f.min_ops_at_least = min_ops;
  if (distance >= 0) f.unsolved_distance_at_least = distance;
  if (nearest_ops >= 0) f.nearest_ops_at_least = nearest_ops;
  if (limit >= 0) f.limit = std::size_t(limit);
  Table t;
  t.header = {"instance", "target", "min_ops", "distance"};
  for (const auto& p : select_problems(db, game, f))
    t.rows.push_back({db.instance(p.instance_index).to_string(), num(p.target),
                      p.min_ops == GameDatabase::kUnsolvedByte ? "unsolved" : num(p.min_ops),
                      num(p.distance)});
  t.print(csv);
  return 0;
}

// ---------------------------------------------------------------- bench

int cmd_bench(int n, std::int64_t count, const std::string& algos_spec,
              const std::string& bits_spec, int reps, std::uint64_t seed,
              const std::string& range_spec, bool csv) {
  Range range = parse_range(range_spec);
  auto all = standard_instances(n);
  std::vector<Pool> sample;
  if (count < 0 || std::size_t(count) >= all.size()) {
    sample = all;
  } else {
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(sample), std::size_t(count), rng);
  }

  struct Config {
    std::string name;
    SolverChoice algo;
    int bits;
  };
  std::vector<Config> configs;
  for (const std::string& a : split_list(algos_spec)) {
    if (a == "dfs-hash" || a == "dfs-hash-set") {
      for (const std::string& b : split_list(bits_spec))
        configs.push_back({a + "/" + b, parse_solver(a), std::stoi(b)});
    } else {
      configs.push_back({a, parse_solver(a), 15});
    }
  }

  Table t;
  t.header = {"algo",       "instances",   "reps",         "min_ms_total",
              "median_ms_total", "ms_per_instance", "nodes_total"};
  for (const auto& cfg : configs) {
    std::vector<double> times;
    std::uint64_t nodes = 0;
    for (int rep = 0; rep < reps; ++rep) {
      nodes = 0;
      auto t0 = Clock::now();
      for (const Pool& p : sample) nodes += run_solver(cfg.algo, p, range, cfg.bits).nodes_visited;
      times.push_back(elapsed_ms(t0, Clock::now()));
    }
    std::sort(times.begin(), times.end());
    double best = times.front(), median = times[times.size() / 2];
    char b1[32], b2[32], b3[32];
    std::snprintf(b1, sizeof b1, "%.1f", best);
    std::snprintf(b2, sizeof b2, "%.1f", median);
    std::snprintf(b3, sizeof b3, "%.3f", best / double(sample.size()));
    t.rows.push_back({cfg.name, num(sample.size()), num(reps), b1, b2, b3, num(nodes)});
  }
  t.print(csv);
  return 0;
}

// ---------------------------------------------------------------- square

int cmd_square(const std::string& numbers, std::int64_t target, const std::string& range_spec,
               std::int64_t bound_a, bool csv) {
  Pool pool = parse_numbers(numbers);
  SquareConfig cfg;
  cfg.bound_A = Value(bound_a);
  Range range = target >= 0 ? Range{std::max(1, int(target) - 1), int(target) + 1}
                            : parse_range(range_spec);
  SolveOptions opts;
  opts.record_solutions = target >= 0;
  SolveReport rep = solve_with_square(pool, range, cfg, opts);
  if (target >= 0) {
    if (rep.solved(int(target))) {
      const Solution& sol = rep.best[target - range.lo];
      if (!sol.steps.empty()) std::printf("%s", format_solution(pool, sol).c_str());
      std::printf("min-ops: %u\n", rep.ops(int(target)));
    } else {
      std::printf("unsolvable with A=%llu\n", (unsigned long long)cfg.bound_A);
    }
    return 0;
  }
  Table t;
  t.header = {"target", "min_ops"};
  for (int tg = range.lo; tg <= range.hi; ++tg)
    t.rows.push_back({num(tg), rep.solved(tg) ? num(rep.ops(tg)) : "unsolved"});
  if (!csv) std::printf("solved %d/%d targets\n", rep.solved_count(), range.size());
  t.print(csv);
  return 0;
}

int cmd_sweep_a(const std::string& values_spec, int n, const std::string& range_spec,
                int workers, bool allow_large, bool csv, bool quiet) {
  Range range = parse_range(range_spec);
  std::vector<Value> bounds;
  for (const std::string& v : split_list(values_spec)) bounds.push_back(std::stoull(v));
  SweepOptions opts;
  opts.workers = workers;
  opts.allow_large_bound = allow_large;
  if (!quiet) {
    opts.progress = [](Value bound, std::size_t done, std::size_t total) {
      if (done % 256 == 0 || done == total)
        std::fprintf(stderr, "\rA=%llu %zu/%zu", (unsigned long long)bound, done, total);
    };
  }
  SweepResult res = bound_sweep(standard_instances(n), range, bounds, opts);
  if (!quiet) std::fprintf(stderr, "\n");
  Table t;
  t.header = {"A", "unsolved_sets", "unsolved_problems"};
  for (const auto& row : res.rows)
    t.rows.push_back({num(row.bound_A), num(row.unsolved_sets), num(row.unsolved_problems)});
  t.print(csv);
  if (!csv) {
    for (const auto& u : res.remaining) {
      std::printf("%s:", u.set.to_string().c_str());
      for (int tg : u.targets) std::printf(" %d", tg);
      std::printf("\n");
    }
  }
  return 0;
}

// ------------------------------------------------------- count-solutions

int cmd_count_solutions(const std::string& numbers, std::int64_t target, bool list,
                        std::uint64_t budget) {
  Pool pool = parse_numbers(numbers);
  DistinctSolutions d = enumerate_distinct_solutions(pool, Value(target), budget);
  std::printf("distinct solutions: %zu (raw trees: %llu%s)\n", d.forms.size(),
              (unsigned long long)d.raw_trees,
              d.budget_exceeded ? ", budget exceeded - counts are a floor" : "");
  if (list)
    for (const auto& f : d.forms) std::printf("%s\n", f.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Countdown numbers-game solver and analytics toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv"}));

  std::string numbers, range_spec = "101:999", algo = "dfs-hash";
  std::int64_t target = -1;
  int hash_bits = 15;
  int workers = int(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  auto* solve = app.add_subcommand("solve", "solve one target or a whole range");
  solve->add_option("-n,--numbers", numbers, "comma-separated pool")->required();
  solve->add_option("-t,--target", target, "target number");
  solve->add_option("--range", range_spec, "target range lo:hi");
  solve->add_option("--algo", algo,
                    "dfs|dfs-hash|dfs-hash-set|bfs-array|bfs-set|backward|backward-all");
  solve->add_option("--hash-bits", hash_bits, "transposition table size (bits)");

  int db_n = 6;
  std::string out_path = "countdown.db";
  bool quiet = false;
  auto* build = app.add_subcommand("build-db", "solve every instance and save the results");
  build->add_option("--size", db_n, "tiles per instance")->check(CLI::Range(1, 10));
  build->add_option("--range", range_spec, "target range lo:hi");
  build->add_option("--workers", workers, "worker threads");
  build->add_option("--algo", algo, "dfs|dfs-hash|dfs-hash-set|bfs-array|bfs-set");
  build->add_option("--hash-bits", hash_bits, "transposition table size (bits)");
  build->add_option("-o,--out", out_path, "output file")->required();
  build->add_flag("--quiet", quiet, "suppress progress");

  std::string db_path, game_spec = "101:999", tuple_spec;
  int sel_min_ops = -1, sel_distance = -1, sel_nearest_ops = -1;
  std::int64_t sel_limit = -1;
  auto* stats = app.add_subcommand("stats", "query a database");
  stats->add_option("--db", db_path, "database file")->required();
  stats->add_option("--game", game_spec, "game target range lo:hi");
  stats->require_subcommand(1);
  auto* st_dist = stats->add_subcommand("distances", "distance-to-solution histogram");
  auto* st_target = stats->add_subcommand("per-target", "instances solving each target");
  auto* st_number = stats->add_subcommand("per-number", "presence and solve rate per tile");
  auto* st_large = stats->add_subcommand("large-count", "breakdown by large-tile count");
  auto* st_tuples = stats->add_subcommand("tuples", "success rate of instances holding a tuple");
  st_tuples->add_option("-n,--numbers", tuple_spec, "tuple to look for")->required();
  auto* st_all = stats->add_subcommand("solve-all", "instances solving every target");
  auto* st_select = stats->add_subcommand("select", "filter problems");
  st_select->add_option("--min-ops", sel_min_ops, "solved problems needing >= k ops");
  st_select->add_option("--distance", sel_distance, "unsolved with nearest >= d away");
  st_select->add_option("--nearest-ops", sel_nearest_ops, "unsolved, nearest needs >= k ops");
  st_select->add_option("--limit", sel_limit, "row cap");

  std::int64_t bench_count = -1;
  std::string bench_algos = "dfs,dfs-hash,dfs-hash-set,bfs-array,bfs-set";
  std::string bench_bits = "15";
  int bench_reps = 1, bench_n = 6;
  std::uint64_t bench_seed = 42;
  auto* bench = app.add_subcommand("bench", "compare algorithms on an instance sample");
  bench->add_option("--size", bench_n, "tiles per instance")->check(CLI::Range(1, 10));
  bench->add_option("--count", bench_count, "sample size (default: full corpus)");
  bench->add_option("--algos", bench_algos, "comma list of algorithms");
  bench->add_option("--hash-bits-sweep", bench_bits, "comma list of table sizes");
  bench->add_option("--reps", bench_reps, "repetitions (reports min/median)");
  bench->add_option("--seed", bench_seed, "sample seed");
  bench->add_option("--range", range_spec, "target range lo:hi");

  std::int64_t bound_a = 1;
  auto* square = app.add_subcommand("square", "solve with the square operation allowed");
  square->add_option("-n,--numbers", numbers, "comma-separated pool")->required();
  square->add_option("-t,--target", target, "target number");
  square->add_option("--range", range_spec, "target range lo:hi");
  square->add_option("-A,--square-bound", bound_a, "largest number that may be squared")
      ->check(CLI::Range(std::int64_t(1), std::int64_t(45000)));

  std::string sweep_values;
  bool allow_large = false;
  int sweep_n = 6;
  auto* sweep = app.add_subcommand("sweep-A", "unsolved counts per square bound");
  sweep->add_option("--values", sweep_values, "ascending comma list of A bounds")->required();
  sweep->add_option("--size", sweep_n, "tiles per instance")->check(CLI::Range(1, 10));
  sweep->add_option("--range", range_spec, "target range lo:hi");
  sweep->add_option("--workers", workers, "worker threads");
  sweep->add_flag("--allow-large-bound", allow_large, "lift the 45000 ceiling");
  sweep->add_flag("--quiet", quiet, "suppress progress");

  bool list_forms = false;
  std::uint64_t budget = 10'000'000;
  auto* count = app.add_subcommand("count-solutions", "count really-different solutions");
  count->add_option("-n,--numbers", numbers, "comma-separated pool")->required();
  count->add_option("-t,--target", target, "target number")->required();
  count->add_flag("--list", list_forms, "print each canonical form");
  count->add_option("--budget", budget, "raw-tree cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  bool csv = format == "csv";
  try {
    if (solve->parsed()) return cmd_solve(numbers, target, range_spec, algo, hash_bits, csv);
    if (build->parsed())
      return cmd_build_db(db_n, range_spec, workers, algo, hash_bits, out_path, quiet);
    if (stats->parsed()) {
      GameDatabase db;
      try {
        db = load_db(db_path);
      } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
      }
      Range game = parse_range(game_spec);
      if (st_dist->parsed()) return stats_distances(db, game, csv);
      if (st_target->parsed()) return stats_per_target(db, game, csv);
      if (st_number->parsed()) return stats_per_number(db, game, csv);
      if (st_large->parsed()) return stats_large_count(db, game, csv);
      if (st_tuples->parsed()) return stats_tuples(db, game, tuple_spec, csv);
      if (st_all->parsed()) return stats_solve_all(db, game, csv);
      if (st_select->parsed())
        return stats_select(db, game, sel_min_ops, sel_distance, sel_nearest_ops, sel_limit,
                            csv);
    }
    if (bench->parsed())
      return cmd_bench(bench_n, bench_count, bench_algos, bench_bits, bench_reps, bench_seed,
                       range_spec, csv);
    if (square->parsed()) return cmd_square(numbers, target, range_spec, bound_a, csv);
    if (sweep->parsed())
      return cmd_sweep_a(sweep_values, sweep_n, range_spec, workers, allow_large, csv, quiet);
    if (count->parsed()) return cmd_count_solutions(numbers, target, list_forms, budget);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  }
  return kExitUsage;
}
