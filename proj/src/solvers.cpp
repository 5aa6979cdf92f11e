#include "cdn/solvers.hpp"

#include <cassert>
#include <cstring>

#include "cdn/detail/marker.hpp"

namespace cdn {
namespace {

using detail::Marker;

// Naive search: every pair, larger first, under basic legality only
// (positive subtraction, exact division). Every pair then admits 3 or 4
// operations, which is exactly the branching the d_min/d_max bounds
// count; nodes_visited tallies the complete operation sequences, i.e.
// the ops executed when two numbers remain.
struct NaiveDfs {
  Marker& m;
  std::uint64_t leaf_ops = 0;

  void run(Value* v, int k, int depth) {
    for (int i = 0; i < k - 1; ++i) {
      for (int j = i + 1; j < k; ++j) {
        Value a = v[i], b = v[j];
        if (a < b) std::swap(a, b);
        // collapse the pair in place: slot i takes the result, slot j the tail
        Value si = v[i], sj = v[j];
        v[j] = v[k - 1];

        Value r;
        if (!__builtin_add_overflow(a, b, &r) && r <= kValueCap) child(v, k, depth, i, r);
        if (!__builtin_mul_overflow(a, b, &r) && r <= kValueCap) child(v, k, depth, i, r);
        if (a > b) child(v, k, depth, i, a - b);
        if (a % b == 0) child(v, k, depth, i, a / b);

        v[i] = si;
        v[j] = sj;
      }
    }
  }

  void child(Value* v, int k, int depth, int i, Value r) {
    m.mark(r, depth + 1);
    if (k == 2) {
      ++leaf_ops;
    } else {
      v[i] = r;
      run(v, k - 1, depth + 1);
    }
  }
};

// Recording variant keeps the actual step list; it is slower, so the hot
// path above stays free of it.
struct NaiveDfsRecording {
  Marker& m;
  std::uint64_t leaf_ops = 0;

  void run(Value* v, int k, int depth) {
    for (int i = 0; i < k - 1; ++i) {
      for (int j = i + 1; j < k; ++j) {
        Value a = v[i], b = v[j];
        if (a < b) std::swap(a, b);
        Value si = v[i], sj = v[j];
        v[j] = v[k - 1];

        Value r;
        if (!__builtin_add_overflow(a, b, &r) && r <= kValueCap)
          child(v, k, depth, i, a, BinOp::Add, b, r);
        if (!__builtin_mul_overflow(a, b, &r) && r <= kValueCap)
          child(v, k, depth, i, a, BinOp::Mul, b, r);
        if (a > b) child(v, k, depth, i, a, BinOp::Sub, b, a - b);
        if (a % b == 0) child(v, k, depth, i, a, BinOp::Div, b, a / b);

        v[i] = si;
        v[j] = sj;
      }
    }
  }

  void child(Value* v, int k, int depth, int i, Value a, BinOp op, Value b, Value r) {
    m.stack.push_back(Step::binary(a, op, b, r));
    m.mark(r, depth + 1);
    if (k == 2) {
      ++leaf_ops;
    } else {
      v[i] = r;
      run(v, k - 1, depth + 1);
    }
    m.stack.pop_back();
  }
};

// Hash-cut search. Uses the full pruning rule set of combine() and skips
// any child pool already entered. A pool of size s is always reached
// after exactly n-s operations, so a cut never hides a shorter solution.
struct HashedDfs {
  Marker& m;
  HashState& hs;
  std::uint64_t leaf_ops = 0;
  int pool_n;

  void run(Value* v, int k, int depth) {
    assert(depth == pool_n - k);
    for (int i = 0; i < k - 1; ++i) {
      for (int j = i + 1; j < k; ++j) {
        Value a = v[i], b = v[j];
        if (a < b) std::swap(a, b);
        Value si = v[i], sj = v[j];
        v[j] = v[k - 1];

        Value r;
        if (!__builtin_add_overflow(a, b, &r) && r <= kValueCap)
          child(v, k, depth, i, a, BinOp::Add, b, r);
        if (b != 1 && !__builtin_mul_overflow(a, b, &r) && r <= kValueCap)
          child(v, k, depth, i, a, BinOp::Mul, b, r);
        if (a != b && a - b != b) child(v, k, depth, i, a, BinOp::Sub, b, a - b);
        if (b != 1 && a % b == 0 && a / b != b)
          child(v, k, depth, i, a, BinOp::Div, b, a / b);

        v[i] = si;
        v[j] = sj;
      }
    }
  }

  void child(Value* v, int k, int depth, int i, Value a, BinOp op, Value b, Value r) {
    if (m.record) m.stack.push_back(Step::binary(a, op, b, r));
    m.mark(r, depth + 1);
    if (k == 2) {
      ++leaf_ops;
    } else {
      hs.pop(a);
      hs.pop(b);
      hs.push(r);
      if (!hs.seen_or_insert()) {
        v[i] = r;
        run(v, k - 1, depth + 1);
      }
      hs.pop(r);
      hs.push(a);
      hs.push(b);
    }
    if (m.record) m.stack.pop_back();
  }
};

void seed_report(SolveReport& rep, const Pool& instance, Range range, bool record) {
  rep.instance = instance;
  rep.range = range;
  if (record) rep.best.assign(range.size(), {});
}

}  // namespace

SolveReport solve_dfs(const Pool& instance, Range range, const SolveOptions& opts) {
  SolveReport rep;
  seed_report(rep, instance, range, opts.record_solutions);
  Marker m(range, opts.record_solutions, &rep.best);
  for (Value v : instance) m.mark(v, 0);

  Value vals[Pool::kMaxSize];
  std::copy(instance.begin(), instance.end(), vals);
  if (instance.size() >= 2) {
    if (opts.record_solutions) {
      NaiveDfsRecording dfs{m};
      dfs.run(vals, instance.size(), 0);
      rep.nodes_visited = dfs.leaf_ops;
    } else {
      NaiveDfs dfs{m};
      dfs.run(vals, instance.size(), 0);
      rep.nodes_visited = dfs.leaf_ops;
    }
  }
  m.finish(rep);
  return rep;
}

SolveReport solve_dfs_hashed(const Pool& instance, Range range, int bits,
                             CollisionPolicy policy, const SolveOptions& opts) {
  SolveReport rep;
  seed_report(rep, instance, range, opts.record_solutions);
  Marker m(range, opts.record_solutions, &rep.best);
  for (Value v : instance) m.mark(v, 0);

  HashState hs(bits, policy);
  for (Value v : instance) hs.push(v);
  std::uint64_t initial_sig = hs.current();

  Value vals[Pool::kMaxSize];
  std::copy(instance.begin(), instance.end(), vals);
  if (instance.size() >= 2) {
    hs.seen_or_insert();  // store the root on entry too
    HashedDfs dfs{m, hs, 0, instance.size()};
    dfs.run(vals, instance.size(), 0);
    rep.nodes_visited = dfs.leaf_ops;
  }
  assert(hs.current() == initial_sig);  // push/pop symmetry
  (void)initial_sig;
  m.finish(rep);
  return rep;
}

namespace {

// Buisson scheme: returns forward steps building `goal` from `pool`.
bool buisson_rec(Value goal, Pool pool, std::vector<Step>& out) {
  if (pool.contains(goal)) return true;
  if (pool.empty()) return false;

  // candidate adjusted goals: goal itself, then goal +/- each pool number
  std::vector<Value> entries = pool.values();
  for (int xi = -1; xi < int(entries.size()); ++xi) {
    Value x = xi < 0 ? 0 : entries[xi];
    if (xi >= 0 && xi > 0 && entries[xi] == entries[xi - 1]) continue;  // duplicate tile
    for (int sign = 0; sign < (xi < 0 ? 1 : 2); ++sign) {
      Value adjusted;
      if (xi < 0) {
        adjusted = goal;
      } else if (sign == 0) {
        adjusted = goal + x;
      } else {
        if (x >= goal) continue;  // zero handled by the containment base case
        adjusted = goal - x;
      }
      Pool rest = pool;
      if (xi >= 0) rest.remove(x);

      std::vector<Value> divisors = rest.values();
      for (std::size_t yi = 0; yi < divisors.size(); ++yi) {
        Value y = divisors[yi];
        if (y < 2) continue;  // dividing by 1 builds nothing
        if (yi > 0 && divisors[yi] == divisors[yi - 1]) continue;
        if (adjusted % y != 0) continue;
        Pool next = rest;
        next.remove(y);
        if (buisson_rec(adjusted / y, next, out)) {
          out.push_back(Step::binary(adjusted / y, BinOp::Mul, y, adjusted));
          if (xi >= 0) {
            if (sign == 0)
              out.push_back(Step::binary(adjusted, BinOp::Sub, x, goal));
            else
              out.push_back(Step::binary(adjusted, BinOp::Add, x, goal));
          }
          return true;
        }
      }
    }
  }
  return false;
}

bool allops_rec(Value goal, Pool pool, std::vector<Step>& out) {
  if (pool.contains(goal)) return true;
  if (pool.empty()) return false;

  std::vector<Value> entries = pool.values();
  for (std::size_t xi = 0; xi < entries.size(); ++xi) {
    Value x = entries[xi];
    if (xi > 0 && entries[xi] == entries[xi - 1]) continue;
    Pool rest = pool;
    rest.remove(x);

    // backward goal+x  ->  forward (goal+x) - x
    Value sum;
    if (!__builtin_add_overflow(goal, x, &sum) && sum <= kValueCap &&
        allops_rec(sum, rest, out)) {
      out.push_back(Step::binary(sum, BinOp::Sub, x, goal));
      return true;
    }
    // backward goal-x  ->  forward (goal-x) + x
    if (x < goal && allops_rec(goal - x, rest, out)) {
      out.push_back(Step::binary(goal - x, BinOp::Add, x, goal));
      return true;
    }
    // backward goal*x  ->  forward (goal*x) / x
    Value prod;
    if (x != 1 && !__builtin_mul_overflow(goal, x, &prod) && prod <= kValueCap &&
        allops_rec(prod, rest, out)) {
      out.push_back(Step::binary(prod, BinOp::Div, x, goal));
      return true;
    }
    // backward goal/x  ->  forward (goal/x) * x
    if (x != 1 && goal % x == 0 && allops_rec(goal / x, rest, out)) {
      out.push_back(Step::binary(goal / x, BinOp::Mul, x, goal));
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Solution> solve_backward_buisson(const Pool& instance, Value target) {
  std::vector<Step> steps;
  if (!buisson_rec(target, instance, steps)) return std::nullopt;
  Solution s;
  s.steps = std::move(steps);
  s.final = target;
  return s;
}

std::optional<Solution> solve_backward_allops(const Pool& instance, Value target) {
  std::vector<Step> steps;
  if (!allops_rec(target, instance, steps)) return std::nullopt;
  Solution s;
  s.steps = std::move(steps);
  s.final = target;
  return s;
}

}  // namespace cdn
