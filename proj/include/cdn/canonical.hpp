#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cdn/core.hpp"
#include "cdn/report.hpp"

namespace cdn {

// Immutable expression tree over the initial pool. Nodes are shared;
// `value` is the exact evaluation and `hash` a structural fingerprint.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind : std::uint8_t { Leaf, Binary, Square };
  Kind kind = Kind::Leaf;
  BinOp op = BinOp::Add;  // Binary only
  Value value = 0;
  std::uint64_t hash = 0;
  ExprPtr left, right;  // Binary; Square uses left only
};

ExprPtr make_leaf(Value v);
// Exact arithmetic; throws std::invalid_argument when the operation is
// not computable (negative, inexact, overflow).
ExprPtr make_binary(BinOp op, ExprPtr l, ExprPtr r);
ExprPtr make_square(ExprPtr child);

// Parenthesized prefix form, e.g. "(* 5 (+ 3 100))"; leaves are numbers.
std::string to_string(const ExprPtr& t);

// Reduces a tree to its canonical representative, applying until stable:
// subtrees whose value appears in the initial pool become leaves; *1 and
// /1 disappear; maximal +/- and */÷ regions are flattened to atom lists,
// equal-valued atoms of opposite sign cancel, and the region is rebuilt
// in the deterministic order whose intermediate results are smallest
// (always positive, divisions exact). Two solutions are the same game
// solution exactly when their canonical trees serialize identically.
ExprPtr canonicalize(const ExprPtr& tree, const Pool& initial);

struct SolutionCount {
  std::uint64_t distinct = 0;
  std::uint64_t raw_trees = 0;   // target hits before deduplication
  bool budget_exceeded = false;  // hit the raw-tree cap; count is a floor
};

// Enumerates every derivation reaching the target (no transposition
// cutting: distinct derivations matter) and counts distinct canonical
// forms. 0 = unsolvable.
SolutionCount count_distinct_solutions(const Pool& instance, Value target,
                                       std::uint64_t budget = 10'000'000);

struct DistinctSolutions {
  std::vector<std::string> forms;  // sorted canonical serializations
  std::uint64_t raw_trees = 0;
  bool budget_exceeded = false;
};

DistinctSolutions enumerate_distinct_solutions(const Pool& instance, Value target,
                                               std::uint64_t budget = 10'000'000);

// Distinct-solution count for every target in range from one shared
// enumeration (index = target - lo). The budget spans the whole range.
std::vector<std::uint32_t> distinct_solution_counts(const Pool& instance, Range range,
                                                    std::uint64_t budget = 10'000'000);

}  // namespace cdn
