#include "cdn/canonical.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "cdn/hashing.hpp"

namespace cdn {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return value_key(a + value_key(b)); }

}  // namespace

ExprPtr make_leaf(Value v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Leaf;
  e->value = v;
  e->hash = value_key(v);
  return e;
}

ExprPtr make_binary(BinOp op, ExprPtr l, ExprPtr r) {
  Value a = l->value, b = r->value, res = 0;
  bool ok = true;
  switch (op) {
    case BinOp::Add: ok = !__builtin_add_overflow(a, b, &res) && res <= kValueCap; break;
    case BinOp::Sub: ok = a > b; res = ok ? a - b : 0; break;
    case BinOp::Mul: ok = !__builtin_mul_overflow(a, b, &res) && res <= kValueCap; break;
    case BinOp::Div: ok = b != 0 && a % b == 0; res = ok ? a / b : 0; break;
  }
  if (!ok) throw std::invalid_argument("operation not computable");
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Binary;
  e->op = op;
  e->value = res;
  e->hash = mix(std::uint64_t(op) + 1, mix(l->hash, r->hash));
  e->left = std::move(l);
  e->right = std::move(r);
  return e;
}

ExprPtr make_square(ExprPtr child) {
  Value r;
  if (__builtin_mul_overflow(child->value, child->value, &r) || r > kValueCap)
    throw std::invalid_argument("square overflows");
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Square;
  e->value = r;
  e->hash = mix(17, child->hash);
  e->left = std::move(child);
  return e;
}

std::string to_string(const ExprPtr& t) {
  switch (t->kind) {
    case Expr::Kind::Leaf:
      return std::to_string(t->value);
    case Expr::Kind::Square:
      return "(sqr " + to_string(t->left) + ")";
    case Expr::Kind::Binary:
      return std::string("(") + op_symbol(t->op) + ' ' + to_string(t->left) + ' ' +
             to_string(t->right) + ')';
  }
  return "?";
}

namespace {

bool in_region(const ExprPtr& e, bool additive) {
  if (e->kind != Expr::Kind::Binary) return false;
  return additive ? (e->op == BinOp::Add || e->op == BinOp::Sub)
                  : (e->op == BinOp::Mul || e->op == BinOp::Div);
}

struct Atom {
  ExprPtr tree;
  bool positive;
  std::string serial;
};

std::optional<Value> apply_step(Value cur, Value x, bool positive, bool additive) {
  if (additive) {
    if (positive) {
      Value r;
      if (__builtin_add_overflow(cur, x, &r) || r > kValueCap) return std::nullopt;
      return r;
    }
    if (cur <= x) return std::nullopt;
    return cur - x;
  }
  if (positive) {
    Value r;
    if (__builtin_mul_overflow(cur, x, &r) || r > kValueCap) return std::nullopt;
    return r;
  }
  if (cur % x != 0) return std::nullopt;
  return cur / x;
}

// Left-deep rebuild in the order whose intermediate values are
// lexicographically smallest; every intermediate stays positive and
// every division exact. Prefixes whose value is a given number collapse
// to that leaf (rule 1 applies to rebuilt subtrees too). Null when no
// order exists (overflow corner).
ExprPtr rebuild_region(const std::vector<Atom>& atoms, bool additive, const Pool& pool) {
  int n = int(atoms.size());
  std::vector<char> used(n, 0);
  ExprPtr result;
  std::function<bool(ExprPtr, Value, int)> go = [&](ExprPtr tree, Value cur,
                                                    int placed) -> bool {
    if (placed == n) {
      result = std::move(tree);
      return true;
    }
    struct Cand {
      Value next;
      bool positive;
      int idx;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      if (placed == 0) {
        if (!atoms[i].positive) continue;
        cands.push_back({atoms[i].tree->value, true, i});
      } else if (auto nv =
                     apply_step(cur, atoms[i].tree->value, atoms[i].positive, additive)) {
        cands.push_back({*nv, atoms[i].positive, i});
      }
    }
    std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
      if (a.next != b.next) return a.next < b.next;
      if (a.positive != b.positive) return a.positive < b.positive;
      return atoms[a.idx].serial < atoms[b.idx].serial;
    });
    const Cand* last = nullptr;
    for (const Cand& c : cands) {
      if (last && last->next == c.next && last->positive == c.positive &&
          atoms[last->idx].serial == atoms[c.idx].serial)
        continue;  // identical alternative, same subtree ahead
      last = &c;
      used[c.idx] = 1;
      ExprPtr nt = placed == 0
                       ? atoms[c.idx].tree
                       : make_binary(additive ? (c.positive ? BinOp::Add : BinOp::Sub)
                                              : (c.positive ? BinOp::Mul : BinOp::Div),
                                     tree, atoms[c.idx].tree);
      if (nt->kind != Expr::Kind::Leaf && pool.contains(c.next)) nt = make_leaf(c.next);
      if (go(std::move(nt), c.next, placed + 1)) return true;
      used[c.idx] = 0;
    }
    return false;
  };
  if (!go(nullptr, 0, 0)) return nullptr;
  return result;
}

ExprPtr pass(const ExprPtr& t, const Pool& pool);

// Collects the atoms of the maximal same-kind region rooted at t, with
// their signs; atoms come back canonicalized.
std::vector<Atom> flatten(const ExprPtr& t, bool additive, const Pool& pool) {
  std::vector<Atom> atoms;
  std::vector<std::pair<ExprPtr, bool>> work;
  bool rneg = t->op == BinOp::Sub || t->op == BinOp::Div;
  work.push_back({t->left, true});
  work.push_back({t->right, !rneg});
  while (!work.empty()) {
    auto [e, sign] = work.back();
    work.pop_back();
    if (in_region(e, additive)) {
      bool neg = e->op == BinOp::Sub || e->op == BinOp::Div;
      work.push_back({e->left, sign});
      work.push_back({e->right, neg ? !sign : sign});
      continue;
    }
    ExprPtr c = pass(e, pool);
    if (in_region(c, additive)) {
      work.push_back({c, sign});
      continue;
    }
    atoms.push_back({std::move(c), sign, {}});
  }
  for (Atom& a : atoms) a.serial = to_string(a.tree);
  return atoms;
}

bool atom_before(const Atom& a, const Atom& b) {
  if (a.tree->value != b.tree->value) return a.tree->value < b.tree->value;
  return a.serial < b.serial;
}

// One top-down rewrite sweep; canonicalize() iterates it to fixpoint.
ExprPtr pass(const ExprPtr& t, const Pool& pool) {
  if (t->kind == Expr::Kind::Leaf) return t;
  if (pool.contains(t->value)) return make_leaf(t->value);  // prefer given numbers
  if (t->kind == Expr::Kind::Square) {
    ExprPtr c = pass(t->left, pool);
    return c == t->left ? t : make_square(std::move(c));
  }

  bool additive = t->op == BinOp::Add || t->op == BinOp::Sub;
  std::vector<Atom> atoms = flatten(t, additive, pool);

  if (!additive) {
    // *1 and /1 vanish; if units are all there is, keep one representative
    std::vector<Atom> units, rest;
    for (Atom& a : atoms) (a.tree->value == 1 ? units : rest).push_back(std::move(a));
    if (rest.empty())
      return std::min_element(units.begin(), units.end(), atom_before)->tree;
    atoms = std::move(rest);
  }

  std::vector<Atom> pos, neg;
  for (Atom& a : atoms) (a.positive ? pos : neg).push_back(std::move(a));
  std::sort(pos.begin(), pos.end(), atom_before);
  std::sort(neg.begin(), neg.end(), atom_before);

  // Suppress equal numbers and equal combinations of numbers across the
  // two lists: drop the largest positive/negative subsets with equal sum
  // (equal product for */÷). Unions of valid cancellations are valid, so
  // one maximal pair covers repeated application.
  const unsigned __int128 kSat = (unsigned __int128)1 << 100;
  auto subtotals = [&](const std::vector<Atom>& v) {
    std::vector<unsigned __int128> s(std::size_t(1) << v.size());
    s[0] = additive ? 0 : 1;
    for (std::size_t m = 1; m < s.size(); ++m) {
      int b = std::countr_zero(m);
      unsigned __int128 prev = s[m & (m - 1)];
      Value x = v[std::size_t(b)].tree->value;
      s[m] = additive ? prev + x : prev * x;
      if (s[m] > kSat) s[m] = kSat;
    }
    return s;
  };
  auto ps = subtotals(pos), ns = subtotals(neg);
  std::size_t full_p = ps.size() - 1, full_n = ns.size() - 1;
  std::size_t best_p = 0, best_n = 0;
  int best_cnt = 0;
  unsigned __int128 best_sum = 0;
  for (std::size_t mp = 1; mp <= full_p; ++mp) {
    if (ps[mp] >= kSat) continue;
    for (std::size_t mn = 1; mn <= full_n; ++mn) {
      if (ns[mn] >= kSat || ps[mp] != ns[mn]) continue;
      if (!additive && mp == full_p && mn == full_n) continue;  // keep a value-1 witness
      int cnt = std::popcount(mp) + std::popcount(mn);
      if (cnt < best_cnt) continue;
      if (cnt == best_cnt &&
          !(ps[mp] < best_sum || (ps[mp] == best_sum && (mp < best_p || (mp == best_p && mn < best_n)))))
        continue;
      best_cnt = cnt;
      best_sum = ps[mp];
      best_p = mp;
      best_n = mn;
    }
  }
  std::vector<Atom> kept;
  for (std::size_t x = 0; x < pos.size(); ++x)
    if (!(best_p >> x & 1)) kept.push_back(std::move(pos[x]));
  for (std::size_t x = 0; x < neg.size(); ++x)
    if (!(best_n >> x & 1)) kept.push_back(std::move(neg[x]));

  if (kept.size() == 1 && kept[0].positive) return kept[0].tree;

  if (ExprPtr rebuilt = rebuild_region(kept, additive, pool)) return rebuilt;

  // no exact positive ordering for the flat form (overflow corner):
  // keep the original shape with canonicalized children
  ExprPtr l = pass(t->left, pool);
  ExprPtr r = pass(t->right, pool);
  if (l == t->left && r == t->right) return t;
  return make_binary(t->op, std::move(l), std::move(r));
}

}  // namespace

ExprPtr canonicalize(const ExprPtr& tree, const Pool& initial) {
  ExprPtr t = tree;
  std::string s = to_string(t);
  for (int iter = 0; iter < 64; ++iter) {
    ExprPtr n = pass(t, initial);
    std::string ns = to_string(n);
    if (ns == s) return n;
    t = std::move(n);
    s = std::move(ns);
  }
  return t;
}

namespace {

struct Enumerator {
  Pool initial;
  Range scope;
  std::uint64_t budget;
  std::uint64_t raw_trees = 0;
  bool exceeded = false;
  std::vector<std::unordered_set<std::uint64_t>> raw_seen;
  std::vector<std::unordered_set<std::string>> canon;

  Enumerator(const Pool& p, Range sc, std::uint64_t b)
      : initial(p), scope(sc), budget(b), raw_seen(std::size_t(sc.size())),
        canon(std::size_t(sc.size())) {}

  void record(Value v, const ExprPtr& t) {
    if (!scope.contains(v)) return;
    if (raw_trees >= budget) {
      exceeded = true;
      return;
    }
    ++raw_trees;
    std::size_t idx = std::size_t(v) - scope.lo;
    if (!raw_seen[idx].insert(t->hash).second) return;
    canon[idx].insert(to_string(canonicalize(t, initial)));
  }

  void dfs(std::vector<Value>& vals, std::vector<ExprPtr>& trees, int k) {
    if (exceeded || k < 2) return;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        int hi = vals[i] >= vals[j] ? i : j;
        int lo = hi == i ? j : i;
        Value a = vals[hi], b = vals[lo];
        for (BinOp op : {BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div}) {
          Value r = 0;
          bool ok = false;
          switch (op) {
            case BinOp::Add:
              ok = !__builtin_add_overflow(a, b, &r) && r <= kValueCap;
              break;
            case BinOp::Sub:
              r = a - b;
              ok = a > b && r != b;
              break;
            case BinOp::Mul:
              ok = b != 1 && !__builtin_mul_overflow(a, b, &r) && r <= kValueCap;
              break;
            case BinOp::Div:
              ok = b != 1 && a % b == 0;
              r = ok ? a / b : 0;
              ok = ok && r != b;
              break;
          }
          if (!ok) continue;
          // Re-creating a value still available in the pool is never a new
          // solution: the derivation using the existing copy covers it.
          bool duplicate = false;
          for (int x = 0; x < k && !duplicate; ++x)
            duplicate = x != i && x != j && vals[x] == r;
          if (duplicate) continue;
          ExprPtr t = make_binary(op, trees[hi], trees[lo]);
          record(r, t);
          if (exceeded) return;
          Value sj = vals[j];
          ExprPtr tj = trees[j];
          vals[j] = vals[k - 1];
          trees[j] = trees[k - 1];
          Value si = vals[i];
          ExprPtr ti = trees[i];
          vals[i] = r;
          trees[i] = std::move(t);
          dfs(vals, trees, k - 1);
          vals[i] = si;
          trees[i] = std::move(ti);
          vals[j] = sj;
          trees[j] = std::move(tj);
        }
      }
    }
  }

  void run() {
    std::vector<Value> vals = initial.values();
    std::vector<ExprPtr> trees;
    trees.reserve(vals.size());
    for (Value v : vals) {
      ExprPtr leaf = make_leaf(v);
      record(v, leaf);
      trees.push_back(std::move(leaf));
    }
    dfs(vals, trees, int(vals.size()));
  }
};

}  // namespace

DistinctSolutions enumerate_distinct_solutions(const Pool& instance, Value target,
                                               std::uint64_t budget) {
  if (target < 1 || target > 1'000'000'000)
    throw std::invalid_argument("target out of range");
  Enumerator e(instance, Range{int(target), int(target)}, budget);
  e.run();
  DistinctSolutions d;
  d.forms.assign(e.canon[0].begin(), e.canon[0].end());
  std::sort(d.forms.begin(), d.forms.end());
  d.raw_trees = e.raw_trees;
  d.budget_exceeded = e.exceeded;
  return d;
}

SolutionCount count_distinct_solutions(const Pool& instance, Value target,
                                       std::uint64_t budget) {
  DistinctSolutions d = enumerate_distinct_solutions(instance, target, budget);
  return {d.forms.size(), d.raw_trees, d.budget_exceeded};
}

std::vector<std::uint32_t> distinct_solution_counts(const Pool& instance, Range range,
                                                    std::uint64_t budget) {
  Enumerator e(instance, range, budget);
  e.run();
  std::vector<std::uint32_t> out(std::size_t(range.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::uint32_t(e.canon[i].size());
  return out;
}

}  // namespace cdn
