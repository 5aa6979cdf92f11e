#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "cdn/enumeration.hpp"

using namespace cdn;

TEST_CASE("standard pool spec: 1..10 twice, 25/50/75/100 once") {
  const auto& tiles = StandardPoolSpec::tiles();
  int total = 0;
  for (auto [v, m] : tiles) {
    total += m;
    if (v <= 10)
      CHECK(m == 2);
    else
      CHECK(m == 1);
  }
  CHECK(total == 24);
  CHECK(tiles.size() == 14);
}

TEST_CASE("instance counts match the closed form and the corpus anchors") {
  CHECK(standard_instance_count(1) == 14);
  CHECK(standard_instance_count(2) == 101);
  CHECK(standard_instance_count(6) == 13243);
  CHECK(standard_instance_count(7) == 27522);
  CHECK(standard_instance_count(8) == 49248);
  CHECK(standard_instance_count(9) == 76702);
  CHECK(standard_instance_count(10) == 104753);
}

TEST_CASE("generated instances: count, order, uniqueness, legality") {
  for (int n : {1, 2, 3, 6}) {
    auto insts = standard_instances(n);
    CHECK(insts.size() == standard_instance_count(n));
    std::set<std::string> seen;
    Pool prev;
    std::map<Value, int> mult;
    for (auto [v, m] : StandardPoolSpec::tiles()) mult[v] = m;
    for (std::size_t i = 0; i < insts.size(); ++i) {
      const Pool& p = insts[i];
      REQUIRE(p.size() == n);
      CHECK(seen.insert(p.to_string()).second);     // unique
      if (i) CHECK(prev < p);                        // lexicographic order
      prev = p;
      for (Value v : p) CHECK(p.count(v) <= mult.at(v));  // legal multiset
    }
  }
}

TEST_CASE("extended pool counting: combinations with repetition") {
  CHECK(extended_instance_count(2, 3) == 6);      // {1,1},{1,2},{1,3},{2,2},{2,3},{3,3}
  CHECK(extended_instance_count(1, 100) == 100);
  CHECK(extended_instance_count(6, 100) == 1609344100ULL);
}

TEST_CASE("extended sampling is deterministic, unique and in-space") {
  auto a = extended_instances_sample(6, 100, 500, 42);
  auto b = extended_instances_sample(6, 100, 500, 42);
  auto c = extended_instances_sample(6, 100, 500, 43);
  REQUIRE(a.size() == 500);
  CHECK(a == b);
  CHECK(a != c);
  std::set<std::string> seen;
  for (const Pool& p : a) {
    REQUIRE(p.size() == 6);
    for (Value v : p) {
      CHECK(v >= 1);
      CHECK(v <= 100);
    }
    CHECK(seen.insert(p.to_string()).second);
  }
  CHECK_THROWS_AS(extended_instances_sample(2, 3, 7, 1), std::invalid_argument);
}

TEST_CASE("complexity bounds: depth-first family") {
  CHECK(complexity_bounds(Algorithm::DfsMax, 6) == BigCount(2764800));
  CHECK(complexity_bounds(Algorithm::DfsMin, 6) == BigCount(656100));
  CHECK(complexity_bounds(Algorithm::DfsMax, 7) == BigCount(232243200));
  CHECK(complexity_bounds(Algorithm::DfsMin, 7) == BigCount(41334300));
}

TEST_CASE("complexity bounds: breadth-first family") {
  CHECK(complexity_bounds(Algorithm::BfsMax, 6) == BigCount(1144386));
  CHECK(complexity_bounds(Algorithm::BfsMax, 7) == BigCount(49951531));
  CHECK(complexity_bounds(Algorithm::BfsMin, 8) == BigCount(363099899));
  // min variant is a lower bound of the max variant everywhere
  for (int n = 2; n <= 10; ++n)
    CHECK(complexity_bounds(Algorithm::BfsMin, n) < complexity_bounds(Algorithm::BfsMax, n));
}

TEST_CASE("complexity bounds: backward chaining family") {
  // product / sum of (4i+1)(2i-1) for i = 1..floor(n/2)
  CHECK(complexity_bounds(Algorithm::BackwardMax, 6) == BigCount(5 * 27 * 65));
  CHECK(complexity_bounds(Algorithm::BackwardMin, 6) == BigCount(5 + 27 + 65));
}

TEST_CASE("growth ratios: each extra tile multiplies the DFS worst case") {
  for (int n = 3; n <= 11; ++n) {
    BigCount prev = complexity_bounds(Algorithm::DfsMax, n - 1);
    BigCount cur = complexity_bounds(Algorithm::DfsMax, n);
    // n! (n-1)! 2^(n-1) grows by n (n-1) 2 per step
    CHECK(cur == prev * BigCount(2 * n * (n - 1)));
  }
}

TEST_CASE("big_to_string renders 128-bit values") {
  CHECK(big_to_string(BigCount(0)) == "0");
  CHECK(big_to_string(BigCount(232243200)) == "232243200");
  BigCount huge = BigCount(1000000000000000000ULL) * BigCount(1000000000000000000ULL);
  CHECK(big_to_string(huge) == "1000000000000000000000000000000000000");
}
