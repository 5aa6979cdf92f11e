#include "cdn/enumeration.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace cdn {

std::string big_to_string(BigCount v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s += char('0' + int(v % 10));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

const std::vector<std::pair<Value, int>>& StandardPoolSpec::tiles() {
  static const std::vector<std::pair<Value, int>> t = {
      {1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2},  {6, 2},  {7, 2},  {8, 2},
      {9, 2}, {10, 2}, {25, 1}, {50, 1}, {75, 1}, {100, 1}};
  return t;
}

namespace {

void gen_standard(int n, std::size_t tile_idx, Pool& current, std::vector<Pool>& out) {
  if (current.size() == n) {
    out.push_back(current);
    return;
  }
  const auto& tiles = StandardPoolSpec::tiles();
  if (tile_idx >= tiles.size()) return;
  auto [value, mult] = tiles[tile_idx];
  int remaining = n - current.size();
  // take 0..mult copies of this tile value, ascending output order needs
  // smaller counts of later values explored after, so iterate count ascending
  for (int take = 0; take <= mult && take <= remaining; ++take) {
    for (int i = 0; i < take; ++i) current.add(value);
    gen_standard(n, tile_idx + 1, current, out);
    for (int i = 0; i < take; ++i) current.remove(value);
  }
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return std::uint64_t(r);
}

}  // namespace

std::vector<Pool> standard_instances(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("standard_instances wants 1 <= n <= 20");
  if (n > Pool::kMaxSize)
    throw std::invalid_argument("pools hold at most 10 numbers");
  std::vector<Pool> out;
  Pool current;
  gen_standard(n, 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t standard_instance_count(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("standard_instance_count wants 1 <= n <= 20");
  std::uint64_t total = 0;
  for (int i = 0; i <= n / 2; ++i) {
    total += binom(10, i) * binom(14 - i, n - 2 * i);
  }
  return total;
}

std::uint64_t extended_instance_count(int k, int maxval) {
  if (k < 1 || maxval < 1) throw std::invalid_argument("k and maxval must be >= 1");
  return binom(std::uint64_t(maxval) + k - 1, k);
}

namespace {

// Unranks a combination-with-repetition: rank in [0, C(m+k-1, k)) maps to
// the rank-th sorted k-multiset over 1..m in lexicographic order.
Pool unrank_multiset(int k, int m, std::uint64_t rank) {
  Pool pool;
  int low = 1;
  for (int slot = 0; slot < k; ++slot) {
    for (int v = low; v <= m; ++v) {
      // multisets of size k-slot-1 over values v..m
      std::uint64_t block = binom(std::uint64_t(m - v) + (k - slot - 1), k - slot - 1);
      if (rank < block) {
        pool.add(Value(v));
        low = v;
        break;
      }
      rank -= block;
    }
  }
  return pool;
}

}  // namespace

std::vector<Pool> extended_instances_sample(int k, int maxval, std::uint64_t count,
                                            std::uint64_t seed) {
  std::uint64_t space = extended_instance_count(k, maxval);
  if (count > space) throw std::invalid_argument("sample larger than the instance space");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, space - 1);
  std::set<std::uint64_t> ranks;
  while (ranks.size() < count) ranks.insert(dist(rng));
  std::vector<Pool> out;
  out.reserve(count);
  for (std::uint64_t r : ranks) out.push_back(unrank_multiset(k, maxval, r));
  return out;
}

BigCount complexity_bounds(Algorithm algorithm, int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("complexity_bounds wants 1 <= n <= 12");
  auto factorial = [](int m) {
    BigCount r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
  };
  switch (algorithm) {
    case Algorithm::DfsMax:
      return factorial(n) * factorial(n - 1) << (n - 1);
    case Algorithm::DfsMin: {
      BigCount r = factorial(n) * factorial(n - 1);
      for (int i = 1; i < n; ++i) r *= 3;
      return r >> (n - 1);  // n!(n-1)! carries enough factors of two
    }
    case Algorithm::BfsMax:
    case Algorithm::BfsMin: {
      int c = algorithm == Algorithm::BfsMax ? 4 : 3;
      BigCount total = 0;
      for (int p = 1; p <= n; ++p) {
        BigCount term = binom(n, p);
        for (int i = 1; i < p; ++i) term *= BigCount(c) * (2 * i - 1);
        total += term;
      }
      return total;
    }
    case Algorithm::BackwardMax: {
      BigCount r = 1;
      for (int i = 1; i <= n / 2; ++i) r *= BigCount(4 * i + 1) * (2 * i - 1);
      return r;
    }
    case Algorithm::BackwardMin: {
      BigCount r = 0;
      for (int i = 1; i <= n / 2; ++i) r += BigCount(4 * i + 1) * (2 * i - 1);
      return r;
    }
  }
  throw std::logic_error("unknown algorithm");
}

}  // namespace cdn
