#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdn/core.hpp"

namespace cdn {

// One computation step: a binary operation on two pool values, or the
// square of one value. `result` is the exact arithmetic outcome.
struct Step {
  enum class Kind : std::uint8_t { Binary, Square };
  Kind kind = Kind::Binary;
  BinOp op = BinOp::Add;  // meaningful for Binary only
  Value left = 0;         // operand (Square uses left only)
  Value right = 0;
  Value result = 0;

  static Step binary(Value a, BinOp op, Value b, Value r) {
    Step s;
    s.kind = Kind::Binary;
    s.op = op;
    s.left = a;
    s.right = b;
    s.result = r;
    return s;
  }
  static Step square(Value v, Value r) {
    Step s;
    s.kind = Kind::Square;
    s.left = v;
    s.result = r;
    return s;
  }

  bool operator==(const Step& o) const {
    return kind == o.kind && op == o.op && left == o.left && right == o.right &&
           result == o.result;
  }
};

// An ordered list of steps from an initial pool to a final value.
struct Solution {
  std::vector<Step> steps;
  Value final = 0;

  std::size_t op_count() const { return steps.size(); }
};

struct IllegalStep : std::runtime_error {
  explicit IllegalStep(std::size_t index, const std::string& what)
      : std::runtime_error("illegal step " + std::to_string(index) + ": " + what),
        index(index) {}
  std::size_t index;
};

// Replays a solution against the initial pool, consuming operands as the
// game does. Throws IllegalStep when a step uses an absent value or
// misstates its result. Returns the final value, which must be present in
// the pool at the end.
inline Value replay(const Pool& initial, const Solution& solution) {
  Pool pool = initial;
  for (std::size_t i = 0; i < solution.steps.size(); ++i) {
    const Step& s = solution.steps[i];
    if (s.kind == Step::Kind::Square) {
      if (!pool.remove(s.left)) throw IllegalStep(i, "operand not in pool");
      Value r;
      if (__builtin_mul_overflow(s.left, s.left, &r) || r > kValueCap)
        throw IllegalStep(i, "square overflows");
      if (r != s.result) throw IllegalStep(i, "result mismatch");
      pool.add(r);
      continue;
    }
    if (!pool.remove(s.left)) throw IllegalStep(i, "left operand not in pool");
    if (!pool.remove(s.right)) throw IllegalStep(i, "right operand not in pool");
    Value a = s.left, b = s.right;
    Value r = 0;
    bool ok = true;
    switch (s.op) {
      case BinOp::Add: ok = !__builtin_add_overflow(a, b, &r) && r <= kValueCap; break;
      case BinOp::Sub: ok = a > b; r = ok ? a - b : 0; break;
      case BinOp::Mul: ok = !__builtin_mul_overflow(a, b, &r) && r <= kValueCap; break;
      case BinOp::Div: ok = b != 0 && a % b == 0; r = ok ? a / b : 0; break;
    }
    if (!ok) throw IllegalStep(i, "operation not computable");
    if (r != s.result) throw IllegalStep(i, "result mismatch");
    pool.add(r);
  }
  if (!pool.contains(solution.final))
    throw IllegalStep(solution.steps.size(), "final value not in pool");
  return solution.final;
}

// Renders steps in the game's listing style: "a op b = r  {remaining}".
inline std::string format_solution(const Pool& initial, const Solution& solution) {
  Pool pool = initial;
  std::string out;
  for (const Step& s : solution.steps) {
    pool.remove(s.left);
    if (s.kind == Step::Kind::Binary) pool.remove(s.right);
    pool.add(s.result);
    if (s.kind == Step::Kind::Square) {
      out += std::to_string(s.left) + " ^ 2 = " + std::to_string(s.result);
    } else {
      out += std::to_string(s.left) + ' ' + op_symbol(s.op) + ' ' +
             std::to_string(s.right) + " = " + std::to_string(s.result);
    }
    out += "  " + pool.to_string() + '\n';
  }
  return out;
}

}  // namespace cdn
