#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cdn/core.hpp"
#include "cdn/solution.hpp"

using namespace cdn;

TEST_CASE("combine applies the full pruning rule table") {
  // additions always admissible below the cap
  CHECK(combine(7, 7, BinOp::Add) == Value(14));
  CHECK(combine(kValueCap, 1, BinOp::Add) == std::nullopt);

  // never subtract equal numbers; discard a-b == b
  CHECK(combine(9, 9, BinOp::Sub) == std::nullopt);
  CHECK(combine(10, 5, BinOp::Sub) == std::nullopt);  // 10-5 == 5
  CHECK(combine(9, 5, BinOp::Sub) == Value(4));

  // never multiply or divide by 1
  CHECK(combine(9, 1, BinOp::Mul) == std::nullopt);
  CHECK(combine(9, 1, BinOp::Div) == std::nullopt);
  CHECK(combine(9, 3, BinOp::Mul) == Value(27));
  CHECK(combine(Value(1) << 62, 4, BinOp::Mul) == std::nullopt);  // past the cap

  // division must be exact; discard a/b == b
  CHECK(combine(9, 2, BinOp::Div) == std::nullopt);
  CHECK(combine(25, 5, BinOp::Div) == std::nullopt);  // 25/5 == 5
  CHECK(combine(24, 3, BinOp::Div) == Value(8));
}

TEST_CASE("combine against an unpruned reference on random operands") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<Value> dist(1, 200);
  for (int it = 0; it < 20000; ++it) {
    Value a = dist(rng), b = dist(rng);
    if (a < b) std::swap(a, b);
    for (BinOp op : {BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div}) {
      auto r = combine(a, b, op);
      if (!r) continue;
      // whenever combine admits a result, it is the exact arithmetic value
      switch (op) {
        case BinOp::Add: CHECK(*r == a + b); break;
        case BinOp::Sub: CHECK(*r == a - b); break;
        case BinOp::Mul: CHECK(*r == a * b); break;
        case BinOp::Div: CHECK(*r == a / b); CHECK(a % b == 0); break;
      }
      CHECK(*r >= 1);
      CHECK(*r <= kValueCap);
    }
  }
}

TEST_CASE("pool keeps a sorted multiset with distinct resources") {
  Pool p{5, 1, 1, 4, 7, 6};
  CHECK(p.size() == 6);
  CHECK(p[0] == 1);
  CHECK(p[1] == 1);
  CHECK(p[5] == 7);
  CHECK(p.count(1) == 2);
  CHECK(p.to_string() == "{1,1,4,5,6,7}");

  CHECK(p.remove(1));
  CHECK(p.count(1) == 1);
  CHECK(!p.remove(99));

  CHECK(Pool{1, 2, 3}.contains_all(Pool{1, 3}));
  CHECK(!Pool{1, 2, 3}.contains_all(Pool{1, 1}));
  CHECK_THROWS_AS(Pool{}.add(0), std::invalid_argument);
  Pool full{1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  CHECK_THROWS_AS(full.add(1), std::length_error);
}

TEST_CASE("canonical_pairs lists every position pair larger-first") {
  Pool p{3, 7, 7};
  auto pairs = canonical_pairs(p);
  REQUIRE(pairs.size() == 3);  // C(3,2), multiset positions count
  for (auto [a, b] : pairs) CHECK(a >= b);
  CHECK(pairs[0] == std::pair<Value, Value>{7, 3});
  CHECK(pairs[1] == std::pair<Value, Value>{7, 3});
  CHECK(pairs[2] == std::pair<Value, Value>{7, 7});
  CHECK(canonical_pairs(Pool{5}).empty());
}

TEST_CASE("worked example: 899 from {1,1,4,5,6,7}") {
  Pool pool{1, 1, 4, 5, 6, 7};
  Solution sol;
  sol.steps = {
      Step::binary(6, BinOp::Mul, 5, 30), Step::binary(30, BinOp::Add, 1, 31),
      Step::binary(4, BinOp::Mul, 7, 28), Step::binary(28, BinOp::Add, 1, 29),
      Step::binary(29, BinOp::Mul, 31, 899)};
  sol.final = 899;
  CHECK(replay(pool, sol) == Value(899));
  std::string listing = format_solution(pool, sol);
  CHECK(listing.find("6 * 5 = 30  {1,1,4,7,30}") != std::string::npos);
  CHECK(listing.find("29 * 31 = 899  {899}") != std::string::npos);
}

TEST_CASE("replay rejects illegal steps") {
  Pool pool{2, 3};
  Solution sol;
  sol.steps = {Step::binary(2, BinOp::Add, 4, 6)};
  sol.final = 6;
  CHECK_THROWS_AS(replay(pool, sol), IllegalStep);  // 4 not in pool

  sol.steps = {Step::binary(3, BinOp::Add, 2, 6)};
  CHECK_THROWS_AS(replay(pool, sol), IllegalStep);  // result misstated

  sol.steps = {Step::binary(2, BinOp::Sub, 3, 1)};
  sol.final = 1;
  CHECK_THROWS_AS(replay(pool, sol), IllegalStep);  // negative

  sol.steps = {};
  sol.final = 7;
  CHECK_THROWS_AS(replay(pool, sol), IllegalStep);  // final absent
}

TEST_CASE("replay handles square steps") {
  Pool pool{1, 2, 3, 4, 5, 6};
  Solution sol;
  sol.steps = {Step::binary(3, BinOp::Mul, 6, 18), Step::square(18, 324),
               Step::binary(4, BinOp::Add, 5, 9),  Step::binary(324, BinOp::Add, 9, 333),
               Step::binary(1, BinOp::Add, 2, 3),  Step::binary(333, BinOp::Mul, 3, 999)};
  sol.final = 999;
  CHECK(replay(pool, sol) == Value(999));
  CHECK(format_solution(pool, sol).find("18 ^ 2 = 324") != std::string::npos);
}

TEST_CASE("zero-step solution: the target is a tile") {
  Pool pool{5};
  Solution sol;
  sol.final = 5;
  CHECK(replay(pool, sol) == Value(5));
}
