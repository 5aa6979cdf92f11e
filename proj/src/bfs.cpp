#include "cdn/bfs.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "cdn/detail/marker.hpp"

namespace cdn {

DecompositionTable build_decomposition(int n) {
  if (n < 2 || n > Pool::kMaxSize)
    throw std::invalid_argument("decomposition table wants 2 <= n <= 10");
  DecompositionTable table;
  table.n = n;
  SubsetIndex total = SubsetIndex(1) << n;
  table.pairs.resize(total);
  for (SubsetIndex mask = 1; mask < total; ++mask) {
    if (std::popcount(mask) < 2) continue;
    auto& list = table.pairs[mask];
    // enumerate proper submasks; (sub, mask^sub) and its mirror are the
    // same split, keep sub < complement
    for (SubsetIndex sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
      SubsetIndex comp = mask ^ sub;
      if (sub < comp) list.emplace_back(sub, comp);
    }
  }
  return table;
}

std::uint64_t subset_generation_bound(int p) {
  if (p < 1 || p > Pool::kMaxSize)
    throw std::invalid_argument("subset_generation_bound wants 1 <= p <= 10");
  std::uint64_t n = 1;
  for (int i = 1; i <= p - 1; ++i) n *= 4 * (2 * std::uint64_t(i) - 1);
  return n;
}

SolveReport solve_bfs(const Pool& instance, Range range, const BfsOptions& opts) {
  int n = instance.size();
  if (n < 2) throw std::invalid_argument("solve_bfs wants 2..10 numbers");

  SolveReport rep;
  rep.instance = instance;
  rep.range = range;
  detail::Marker marker(range, false, nullptr);

  DecompositionTable table = build_decomposition(n);
  SubsetIndex total = SubsetIndex(1) << n;
  SubsetIndex full = total - 1;

  std::vector<std::vector<Value>> generated(total);
  std::size_t array_bytes = 0;
  std::uint64_t attempts = 0;

  std::unordered_set<Value> dedup;
  for (SubsetIndex mask = 1; mask < total; ++mask) {
    int p = std::popcount(mask);
    if (p == 1) {
      Value v = instance[std::countr_zero(mask)];
      generated[mask].push_back(v);
      marker.mark(v, 0);
      continue;
    }
    bool store = mask != full;  // full-mask values are never re-used
    std::vector<Value>& out = generated[mask];
    std::uint64_t bound = subset_generation_bound(p);  // upper bound on |out|
    if (store && opts.storage == BfsStorage::Arrays) {
      // grow in chunks up to N(p); the budget tracks actual allocation
      std::size_t first = std::size_t(std::min<std::uint64_t>(bound, 4096));
      if (array_bytes + first * sizeof(Value) > opts.memory_budget)
        throw MemoryBudgetExceeded(mask, array_bytes + first * sizeof(Value));
      out.reserve(first);
      array_bytes += first * sizeof(Value);
    }
    if (opts.storage == BfsStorage::Sets) dedup.clear();

    auto append = [&](Value r) {
      if (opts.storage == BfsStorage::Arrays && out.size() == out.capacity()) {
        std::size_t grown = std::size_t(std::min<std::uint64_t>(bound, out.capacity() * 2));
        std::size_t delta = (grown - out.capacity()) * sizeof(Value);
        if (array_bytes + delta > opts.memory_budget)
          throw MemoryBudgetExceeded(mask, array_bytes + delta);
        out.reserve(grown);
        array_bytes += delta;
      }
      out.push_back(r);
    };

    int ops = p - 1;
    for (auto [sub, comp] : table.of(mask)) {
      for (Value x : generated[sub]) {
        for (Value y : generated[comp]) {
          Value a = x, b = y;
          if (a < b) std::swap(a, b);
          attempts += 4;
          for (BinOp op : {BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div}) {
            if (auto r = combine(a, b, op)) {
              marker.mark(*r, ops);
              if (!store) continue;
              if (opts.storage == BfsStorage::Sets) {
                if (dedup.insert(*r).second) out.push_back(*r);
              } else {
                append(*r);
              }
            }
          }
        }
      }
    }
  }

  rep.nodes_visited = attempts;
  marker.finish(rep);
  if (opts.capture) *opts.capture = std::move(generated);
  return rep;
}

}  // namespace cdn
