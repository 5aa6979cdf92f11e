#pragma once

#include <cstdint>
#include <vector>

#include "cdn/core.hpp"

namespace cdn {

// Fixed avalanche mix (splitmix64 finalizer). Values are unbounded, so the
// per-value 64-bit key is derived instead of looked up in a random table;
// the key stream is deterministic across runs.
inline std::uint64_t value_key(Value v) {
  std::uint64_t z = v + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

enum class CollisionPolicy : std::uint8_t {
  ReplaceAlways,  // one signature per slot, overwrite on mismatch
  SetPerSlot,     // keep every signature seen for the slot
};

// Incremental multiset signature plus the transposition table.
//
// The accumulator is the wrapping sum of value_key over the pool entries:
// add on insert, subtract on removal (xor would cancel duplicate values).
// The slot index is the accumulator masked to `bits` bits; the stored
// signature is the full 64-bit accumulator. Cutting on full-signature
// equality accepts the vanishingly unlikely 64-bit collision.
class HashState {
 public:
  HashState(int bits, CollisionPolicy policy)
      : bits_(bits), mask_((std::uint64_t(1) << bits) - 1), policy_(policy) {
    if (policy_ == CollisionPolicy::ReplaceAlways)
      slots_.assign(std::size_t(1) << bits, 0);
    else
      slot_sets_.assign(std::size_t(1) << bits, {});
  }

  void push(Value v) { current_ += value_key(v); }
  void pop(Value v) { current_ -= value_key(v); }
  std::uint64_t current() const { return current_; }
  int bits() const { return bits_; }

  // True when the current pool was already entered: the branch can be
  // discarded. Otherwise records the pool (store on entry; identical
  // pools cannot nest on one DFS path since sizes strictly decrease, so
  // the entry can never cut its own ancestors).
  bool seen_or_insert() {
    std::uint64_t sig = current_;
    std::size_t slot = std::size_t(sig & mask_);
    if (policy_ == CollisionPolicy::ReplaceAlways) {
      if (slots_[slot] == sig) return true;
      slots_[slot] = sig;
      return false;
    }
    auto& set = slot_sets_[slot];
    for (std::uint64_t s : set)
      if (s == sig) return true;
    set.push_back(sig);
    return false;
  }

 private:
  std::uint64_t current_ = 0;
  int bits_;
  std::uint64_t mask_;
  CollisionPolicy policy_;
  std::vector<std::uint64_t> slots_;                // ReplaceAlways
  std::vector<std::vector<std::uint64_t>> slot_sets_;  // SetPerSlot
};

}  // namespace cdn
