#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdn {

// Intermediate results are positive integers below 2^63. Anything that
// would exceed the cap is rejected, never wrapped.
using Value = std::uint64_t;
inline constexpr Value kValueCap = (Value(1) << 63) - 1;

enum class BinOp : std::uint8_t { Add, Sub, Mul, Div };

inline char op_symbol(BinOp op) {
  switch (op) {
    case BinOp::Add: return '+';
    case BinOp::Sub: return '-';
    case BinOp::Mul: return '*';
    case BinOp::Div: return '/';
  }
  return '?';
}

// Applies one binary operation under the full pruning rule set.
// Caller contract: a >= b (see Pool::canonical_pairs). Returns the exact
// result when admissible, nothing when the branch should be discarded:
//   - never multiply or divide by 1
//   - never subtract two equal numbers
//   - discard a-b when the result equals b, and a/b when the result equals b
//   - division must be exact
//   - results past the 63-bit cap are rejected
inline std::optional<Value> combine(Value a, Value b, BinOp op) {
  switch (op) {
    case BinOp::Add: {
      Value r = a + b;
      if (r < a || r > kValueCap) return std::nullopt;
      return r;
    }
    case BinOp::Sub: {
      if (a == b) return std::nullopt;
      Value r = a - b;
      if (r == b) return std::nullopt;
      return r;
    }
    case BinOp::Mul: {
      if (b == 1) return std::nullopt;
      Value r;
      if (__builtin_mul_overflow(a, b, &r) || r > kValueCap) return std::nullopt;
      return r;
    }
    case BinOp::Div: {
      if (b == 1 || a % b != 0) return std::nullopt;
      Value r = a / b;
      if (r == b) return std::nullopt;
      return r;
    }
  }
  return std::nullopt;
}

// A multiset of 1..10 usable numbers, kept sorted ascending. Equal values
// are distinct resources: {1,1,4,5,6,7} holds two 1s.
class Pool {
 public:
  static constexpr int kMaxSize = 10;

  Pool() = default;
  Pool(std::initializer_list<Value> vals) {
    for (Value v : vals) add(v);
  }
  explicit Pool(const std::vector<Value>& vals) {
    for (Value v : vals) add(v);
  }

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Value operator[](int i) const { return entries_[i]; }

  const Value* begin() const { return entries_.data(); }
  const Value* end() const { return entries_.data() + size_; }

  // Insert keeping ascending order.
  void add(Value v) {
    if (size_ >= kMaxSize) throw std::length_error("pool holds at most 10 numbers");
    if (v < 1) throw std::invalid_argument("pool values must be >= 1");
    int i = size_++;
    while (i > 0 && entries_[i - 1] > v) {
      entries_[i] = entries_[i - 1];
      --i;
    }
    entries_[i] = v;
  }

  // Remove one occurrence of v; false if absent.
  bool remove(Value v) {
    for (int i = 0; i < size_; ++i) {
      if (entries_[i] == v) {
        for (int j = i + 1; j < size_; ++j) entries_[j - 1] = entries_[j];
        --size_;
        return true;
      }
    }
    return false;
  }

  bool contains(Value v) const {
    for (int i = 0; i < size_; ++i)
      if (entries_[i] == v) return true;
    return false;
  }

  int count(Value v) const {
    int c = 0;
    for (int i = 0; i < size_; ++i) c += entries_[i] == v;
    return c;
  }

  // True when `other` is a sub-multiset of this pool.
  bool contains_all(const Pool& other) const {
    int i = 0;
    for (int j = 0; j < other.size_; ++j) {
      while (i < size_ && entries_[i] < other.entries_[j]) ++i;
      if (i == size_ || entries_[i] != other.entries_[j]) return false;
      ++i;
    }
    return true;
  }

  bool operator==(const Pool& o) const {
    if (size_ != o.size_) return false;
    for (int i = 0; i < size_; ++i)
      if (entries_[i] != o.entries_[i]) return false;
    return true;
  }
  bool operator!=(const Pool& o) const { return !(*this == o); }
  bool operator<(const Pool& o) const {
    int n = size_ < o.size_ ? size_ : o.size_;
    for (int i = 0; i < n; ++i) {
      if (entries_[i] != o.entries_[i]) return entries_[i] < o.entries_[i];
    }
    return size_ < o.size_;
  }

  std::vector<Value> values() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string s = "{";
    for (int i = 0; i < size_; ++i) {
      if (i) s += ',';
      s += std::to_string(entries_[i]);
    }
    s += '}';
    return s;
  }

 private:
  std::array<Value, kMaxSize> entries_{};
  int size_ = 0;
};

// Every unordered position pair of the pool, larger value first.
// C(size,2) pairs counting multiset positions; fewer than 2 entries
// yield nothing.
inline std::vector<std::pair<Value, Value>> canonical_pairs(const Pool& pool) {
  std::vector<std::pair<Value, Value>> out;
  int n = pool.size();
  out.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Value a = pool[i], b = pool[j];
      if (a < b) std::swap(a, b);
      out.emplace_back(a, b);
    }
  return out;
}

}  // namespace cdn
