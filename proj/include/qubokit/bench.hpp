#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qubokit/bigint.hpp"
#include "qubokit/instance.hpp"

namespace qubokit {

// Deterministic, implementation-independent PRNG (splitmix64) so bench CSVs
// are byte-identical everywhere for a fixed seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) via rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

inline constexpr const char* kBenchGeneratorId = "splitmix64-v1";

enum class BenchFamily {
  squbo_random,     // {-1,0,+1} coefficients, density 1/2, size = n
  single_bigcoeff,  // n = 1, q_11 = -2^b, size = b
};

struct BenchConfig {
  BenchFamily family = BenchFamily::squbo_random;
  int size_lo = 4;
  int size_hi = 4;
  int trials = 1;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::string family;
  int size = 0;  // n or bit width, per family
  int trial = 0;
  std::uint64_t queries = 0;
  Int min_value;
};

// Deterministic sub-seed for one (size, trial) cell.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

// The squbo-random instance for a cell, exposed for tests.
QuboInstance make_squbo_random(int n, std::uint64_t cell_seed);

// Runs the family across the size range; throws CapacityError when a
// squbo-random size exceeds the oracle's free-variable guard.
std::vector<BenchRow> run_bench(const BenchConfig& config);

// CSV with a one-line '#' header recording config + generator id, then
// "family,n_or_bits,trial,queries,min_value" and one row per record.
std::string write_bench_csv(const BenchConfig& config,
                            const std::vector<BenchRow>& rows);

}  // namespace qubokit
