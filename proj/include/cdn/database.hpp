#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cdn/core.hpp"
#include "cdn/report.hpp"

namespace cdn {

// Persisted per-instance results over the full target range.
//
// File format (all integers little-endian):
//   magic "CDWN", u8 version=1, u8 n, u16 lo, u16 hi, u32 record_count,
//   then per record: n bytes of sorted tile values followed by
//   (hi-lo+1) min-ops bytes, 255 = unsolved.
class GameDatabase {
 public:
  static constexpr std::uint8_t kUnsolvedByte = 255;

  GameDatabase() = default;
  GameDatabase(int n, Range range) : n_(n), range_(range) {}

  int n() const { return n_; }
  Range range() const { return range_; }
  std::size_t record_count() const { return tiles_.size() / std::size_t(n_); }
  std::uint64_t problem_count() const {
    return std::uint64_t(record_count()) * range_.size();
  }

  Pool instance(std::size_t i) const {
    Pool p;
    for (int j = 0; j < n_; ++j) p.add(tiles_[i * n_ + j]);
    return p;
  }
  // min-ops byte for instance i and target t; 255 = unsolved
  std::uint8_t ops(std::size_t i, int target) const {
    return min_ops_[i * range_.size() + (target - range_.lo)];
  }
  bool solved(std::size_t i, int target) const {
    return ops(i, target) != kUnsolvedByte;
  }

  void append(const Pool& instance, const std::vector<std::uint8_t>& ops_row);

  void save(const std::string& path) const;
  static GameDatabase load(const std::string& path);

 private:
  int n_ = 0;
  Range range_;
  std::vector<std::uint8_t> tiles_;    // record_count * n
  std::vector<std::uint8_t> min_ops_;  // record_count * range size
};

enum class SolverChoice : std::uint8_t {
  Dfs,
  DfsHash,
  DfsHashSet,
  BfsArrays,
  BfsSets,
};

SolveReport run_solver(SolverChoice algo, const Pool& instance, Range range,
                       int hash_bits = 15);

struct BuildOptions {
  int workers = 1;
  SolverChoice algo = SolverChoice::DfsHash;
  int hash_bits = 15;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

// Solves every standard n-tile instance and assembles the database in
// canonical instance order. Output is identical for any worker count.
GameDatabase build_database(int n, Range range, const BuildOptions& opts = {});

// Same, over an explicit instance list (used for sampled extended pools).
GameDatabase build_database_for(const std::vector<Pool>& instances, Range range,
                                const BuildOptions& opts = {});

}  // namespace cdn
