#include "cdn/database.hpp"

#include <atomic>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "cdn/bfs.hpp"
#include "cdn/enumeration.hpp"
#include "cdn/solvers.hpp"

namespace cdn {

void GameDatabase::append(const Pool& instance, const std::vector<std::uint8_t>& ops_row) {
  if (instance.size() != n_) throw std::invalid_argument("instance size mismatch");
  if (int(ops_row.size()) != range_.size())
    throw std::invalid_argument("ops row size mismatch");
  for (Value v : instance) {
    if (v > 255) throw std::invalid_argument("tile value does not fit one byte");
    tiles_.push_back(std::uint8_t(v));
  }
  min_ops_.insert(min_ops_.end(), ops_row.begin(), ops_row.end());
}

namespace {

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(char(v & 0xff));
  out.push_back(char(v >> 8));
}
void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

}  // namespace

void GameDatabase::save(const std::string& path) const {
  std::string header = "CDWN";
  header.push_back(char(1));  // version
  header.push_back(char(n_));
  put_u16(header, std::uint16_t(range_.lo));
  put_u16(header, std::uint16_t(range_.hi));
  put_u32(header, std::uint32_t(record_count()));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open database for writing: " + path);
  out.write(header.data(), std::streamsize(header.size()));
  std::size_t n = std::size_t(n_), rsize = std::size_t(range_.size());
  for (std::size_t i = 0; i < record_count(); ++i) {
    out.write(reinterpret_cast<const char*>(tiles_.data() + i * n), std::streamsize(n));
    out.write(reinterpret_cast<const char*>(min_ops_.data() + i * rsize),
              std::streamsize(rsize));
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

GameDatabase GameDatabase::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open database: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "CDWN", 4) != 0)
    throw std::runtime_error(path + ": bad magic, not a countdown database");
  std::uint8_t version = 0, n = 0;
  std::uint8_t b[4];
  in.read(reinterpret_cast<char*>(&version), 1);
  in.read(reinterpret_cast<char*>(&n), 1);
  if (version != 1)
    throw std::runtime_error(path + ": unsupported version " + std::to_string(version));
  in.read(reinterpret_cast<char*>(b), 2);
  int lo = b[0] | (b[1] << 8);
  in.read(reinterpret_cast<char*>(b), 2);
  int hi = b[0] | (b[1] << 8);
  in.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t records =
      std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) |
      (std::uint32_t(b[3]) << 24);
  if (!in) throw std::runtime_error(path + ": truncated header");

  GameDatabase db(n, Range{lo, hi});
  std::size_t row = std::size_t(n) + std::size_t(hi - lo + 1);
  db.tiles_.resize(std::size_t(records) * n);
  db.min_ops_.resize(std::size_t(records) * (hi - lo + 1));
  std::vector<char> buf(row);
  for (std::uint32_t i = 0; i < records; ++i) {
    in.read(buf.data(), std::streamsize(row));
    if (!in)
      throw std::runtime_error(path + ": truncated at record " + std::to_string(i));
    std::memcpy(db.tiles_.data() + std::size_t(i) * n, buf.data(), n);
    std::memcpy(db.min_ops_.data() + std::size_t(i) * (hi - lo + 1), buf.data() + n,
                std::size_t(hi - lo + 1));
  }
  return db;
}

SolveReport run_solver(SolverChoice algo, const Pool& instance, Range range,
                       int hash_bits) {
  switch (algo) {
    case SolverChoice::Dfs:
      return solve_dfs(instance, range);
    case SolverChoice::DfsHash:
      return solve_dfs_hashed(instance, range, hash_bits, CollisionPolicy::ReplaceAlways);
    case SolverChoice::DfsHashSet:
      return solve_dfs_hashed(instance, range, hash_bits, CollisionPolicy::SetPerSlot);
    case SolverChoice::BfsArrays:
      return solve_bfs(instance, range, {BfsStorage::Arrays});
    case SolverChoice::BfsSets:
      return solve_bfs(instance, range, {BfsStorage::Sets});
  }
  throw std::logic_error("unknown solver");
}

GameDatabase build_database_for(const std::vector<Pool>& instances, Range range,
                                const BuildOptions& opts) {
  if (instances.empty()) throw std::invalid_argument("no instances to solve");
  if (opts.workers < 1) throw std::invalid_argument("workers must be >= 1");
  int n = instances.front().size();

  std::vector<std::vector<std::uint8_t>> rows(instances.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      SolveReport rep = run_solver(opts.algo, instances[i], range, opts.hash_bits);
      std::vector<std::uint8_t>& row = rows[i];
      row.resize(range.size());
      for (int t = 0; t < range.size(); ++t) {
        std::uint16_t ops = rep.min_ops[t];
        row[t] = ops == kUnsolved ? GameDatabase::kUnsolvedByte
                                  : std::uint8_t(ops < 255 ? ops : 254);
      }
      std::size_t d = done.fetch_add(1) + 1;
      if (opts.progress) opts.progress(d, instances.size());
    }
  };

  if (opts.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < opts.workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  GameDatabase db(n, range);
  for (std::size_t i = 0; i < instances.size(); ++i) db.append(instances[i], rows[i]);
  return db;
}

GameDatabase build_database(int n, Range range, const BuildOptions& opts) {
  return build_database_for(standard_instances(n), range, opts);
}

}  // namespace cdn
