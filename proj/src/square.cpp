#include "cdn/square.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "cdn/hashing.hpp"

namespace cdn {

void SquareConfig::validate() const {
  if (bound_A < 1) throw std::invalid_argument("square bound must be >= 1");
  if (bound_A > 45000 && !allow_large_bound)
    throw std::invalid_argument(
        "square bound above 45000 needs allow_large_bound (squaring chains past "
        "it have not been explored)");
  if (value_cap < 1 || value_cap > kValueCap)
    throw std::invalid_argument("value cap must stay within 63 bits");
}

namespace {

std::uint64_t pool_sig(const Pool& p) {
  std::uint64_t s = 0;
  for (Value v : p) s += value_key(v);
  return s;
}

struct Node {
  Pool pool;
  std::int32_t parent;
  Step step;  // the step that produced this state; unused for the root
};

// Core search. `scope` narrows the early-stop condition to a subset of
// range targets (min-ops outside the scope are still exact up to the
// depth reached). Null scope = the whole range.
SolveReport run_square(const Pool& instance, Range range, const SquareConfig& cfg,
                       bool record, const std::vector<int>* scope) {
  cfg.validate();
  SolveReport rep;
  rep.instance = instance;
  rep.range = range;
  if (record) rep.best.assign(std::size_t(range.size()), {});

  const Value window_hi = Value(2) * range.hi;
  std::vector<std::uint16_t> min_at(std::size_t(window_hi) + 1, kUnsolved);

  std::vector<char> open_flag(std::size_t(range.size()), scope ? 0 : 1);
  if (scope)
    for (int t : *scope) open_flag[std::size_t(t - range.lo)] = 1;
  int open = 0;
  for (char f : open_flag) open += f;

  std::vector<Node> nodes;
  nodes.push_back({instance, -1, Step{}});
  std::unordered_set<std::uint64_t> visited;
  visited.insert(pool_sig(instance));

  auto chain_steps = [&nodes](std::int32_t parent, const Step& last) {
    std::vector<Step> steps;
    for (std::int32_t i = parent; i > 0; i = nodes[i].parent) steps.push_back(nodes[i].step);
    std::reverse(steps.begin(), steps.end());
    steps.push_back(last);
    return steps;
  };

  // BFS order guarantees the first marking of a value is at minimal depth.
  auto mark = [&](Value v, int depth, std::int32_t parent, const Step* last) {
    if (v > window_hi) return;
    if (std::uint16_t(depth) >= min_at[v]) return;
    min_at[v] = std::uint16_t(depth);
    if (!range.contains(v)) return;
    std::size_t idx = std::size_t(v) - range.lo;
    if (open_flag[idx]) {
      open_flag[idx] = 0;
      --open;
    }
    if (record) {
      Solution& s = rep.best[idx];
      s.final = v;
      if (last) s.steps = chain_steps(parent, *last);
    }
  };

  for (Value v : instance) mark(v, 0, -1, nullptr);

  std::size_t level_begin = 0, level_end = 1;
  int depth = 0;
  while (level_begin < level_end && open > 0) {
    ++depth;
    for (std::size_t i = level_begin; i < level_end && open > 0; ++i) {
      const Pool pool = nodes[i].pool;  // copy: nodes may reallocate below
      int n = pool.size();
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          Value a = pool[x], b = pool[y];
          if (a < b) std::swap(a, b);
          for (BinOp op : {BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div}) {
            ++rep.nodes_visited;
            auto r = combine(a, b, op);
            if (!r || *r > cfg.value_cap) continue;
            Step st = Step::binary(a, op, b, *r);
            mark(*r, depth, std::int32_t(i), &st);
            Pool next = pool;
            next.remove(a);
            next.remove(b);
            next.add(*r);
            if (visited.insert(pool_sig(next)).second)
              nodes.push_back({next, std::int32_t(i), st});
          }
        }
      }
      Value prev = 0;
      for (Value v : pool) {
        if (v == prev) continue;
        prev = v;
        if (v < 2 || v > cfg.bound_A) continue;
        Value r;
        if (__builtin_mul_overflow(v, v, &r) || r > cfg.value_cap) continue;
        ++rep.nodes_visited;
        Step st = Step::square(v, r);
        mark(r, depth, std::int32_t(i), &st);
        Pool next = pool;
        next.remove(v);
        next.add(r);
        if (visited.insert(pool_sig(next)).second)
          nodes.push_back({next, std::int32_t(i), st});
      }
    }
    level_begin = level_end;
    level_end = nodes.size();
  }

  rep.min_ops.assign(std::size_t(range.size()), kUnsolved);
  for (int t = range.lo; t <= range.hi; ++t) rep.min_ops[t - range.lo] = min_at[t];
  rep.reachable.assign(min_at.size(), false);
  for (std::size_t v = 1; v < min_at.size(); ++v)
    if (min_at[v] != kUnsolved) rep.reachable[v] = true;
  return rep;
}

}  // namespace

SolveReport solve_with_square(const Pool& instance, Range range, const SquareConfig& cfg,
                              const SolveOptions& opts) {
  return run_square(instance, range, cfg, opts.record_solutions, nullptr);
}

SweepResult bound_sweep(const std::vector<Pool>& instances, Range range,
                        std::vector<Value> bounds, const SweepOptions& opts) {
  if (bounds.empty()) throw std::invalid_argument("no bounds to sweep");
  if (!std::is_sorted(bounds.begin(), bounds.end()) ||
      std::adjacent_find(bounds.begin(), bounds.end()) != bounds.end())
    throw std::invalid_argument("bounds must be strictly ascending");
  if (opts.workers < 1) throw std::invalid_argument("workers must be >= 1");
  for (Value b : bounds)
    SquareConfig{b, kValueCap, opts.allow_large_bound}.validate();

  std::vector<int> all_targets(std::size_t(range.size()));
  for (int t = range.lo; t <= range.hi; ++t) all_targets[t - range.lo] = t;

  std::vector<UnsolvedSet> pending;
  pending.reserve(instances.size());
  for (const Pool& p : instances) pending.push_back({p, all_targets});

  SweepResult result;
  for (Value bound : bounds) {
    std::vector<std::vector<int>> still(pending.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= pending.size()) return;
        const UnsolvedSet& entry = pending[i];
        SolveReport rep;
        if (bound == 1) {
          rep = solve_dfs_hashed(entry.set, range);
        } else {
          SquareConfig cfg{bound, kValueCap, opts.allow_large_bound};
          rep = run_square(entry.set, range, cfg, false, &entry.targets);
        }
        for (int t : entry.targets)
          if (!rep.solved(t)) still[i].push_back(t);
        std::size_t d = done.fetch_add(1) + 1;
        if (opts.progress) opts.progress(bound, d, pending.size());
      }
    };
    if (opts.workers == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < opts.workers; ++w) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
    }

    SweepRow row;
    row.bound_A = bound;
    std::vector<UnsolvedSet> survivors;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (still[i].empty()) continue;
      ++row.unsolved_sets;
      row.unsolved_problems += still[i].size();
      survivors.push_back({pending[i].set, std::move(still[i])});
    }
    result.rows.push_back(row);
    pending = std::move(survivors);
  }
  result.remaining = std::move(pending);
  return result;
}

}  // namespace cdn
