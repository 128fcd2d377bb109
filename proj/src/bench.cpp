#include "qubokit/bench.hpp"

#include "qubokit/errors.hpp"
#include "qubokit/oracle.hpp"
#include "qubokit/solvers.hpp"

namespace qubokit {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  for (;;) {
    const std::uint64_t v = next();
    if (v < limit || limit == 0) return v % bound;
  }
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t width =
      static_cast<std::uint64_t>(hi - lo) + 1;  // hi >= lo expected
  return lo + static_cast<std::int64_t>(below(width));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  SplitMix64 mixer(seed ^ (a * 0x9e3779b97f4a7c15ull) ^ (b * 0xc2b2ae3d27d4eb4full));
  mixer.next();
  return mixer.next();
}

QuboInstance make_squbo_random(int n, std::uint64_t cell_seed) {
  SplitMix64 rng(cell_seed);
  QuboBuilder builder(n);
  // Density 1/2, signs balanced: draw in {0,1,2,3}; 0 -> -1, 1 -> +1.
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const std::uint64_t r = rng.below(4);
      if (r == 0) builder.add(i, j, Int(-1));
      if (r == 1) builder.add(i, j, Int(1));
    }
  }
  return builder.build();
}

namespace {

const char* family_name(BenchFamily family) {
  switch (family) {
    case BenchFamily::squbo_random: return "squbo-random";
    case BenchFamily::single_bigcoeff: return "single-bigcoeff";
  }
  return "?";
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.size_lo < 1 || config.size_hi < config.size_lo) {
    throw ParameterError("size range must satisfy 1 <= lo <= hi");
  }
  if (config.trials < 0) throw ParameterError("trials must be >= 0");
  if (config.family == BenchFamily::squbo_random &&
      config.size_hi > DleOracle::kMaxFreeVariables) {
    throw CapacityError("squbo-random size " + std::to_string(config.size_hi) +
                        " exceeds the oracle guard of " +
                        std::to_string(DleOracle::kMaxFreeVariables) +
                        " free variables");
  }

  std::vector<BenchRow> rows;
  for (int size = config.size_lo; size <= config.size_hi; ++size) {
    for (int trial = 0; trial < config.trials; ++trial) {
      QuboInstance instance = [&] {
        if (config.family == BenchFamily::squbo_random) {
          return make_squbo_random(
              size, derive_seed(config.seed, static_cast<std::uint64_t>(size),
                                static_cast<std::uint64_t>(trial)));
        }
        return make_qubo(1, {{1, 1, -(Int(1) << size)}});
      }();
      DleOracle oracle(instance);
      const SolveReport report = solve_qubo(instance, oracle);
      rows.push_back({family_name(config.family), size, trial, report.queries,
                      report.min_value});
    }
  }
  return rows;
}

std::string write_bench_csv(const BenchConfig& config,
                            const std::vector<BenchRow>& rows) {
  std::string out = "# qubokit-bench generator=";
  out += kBenchGeneratorId;
  out += " family=";
  out += family_name(config.family);
  out += " sizes=" + std::to_string(config.size_lo) + ".." +
         std::to_string(config.size_hi);
  out += " trials=" + std::to_string(config.trials);
  out += " seed=" + std::to_string(config.seed);
  out += "\nfamily,n_or_bits,trial,queries,min_value\n";
  for (const auto& row : rows) {
    out += row.family + "," + std::to_string(row.size) + "," +
           std::to_string(row.trial) + "," + std::to_string(row.queries) + "," +
           to_decimal(row.min_value) + "\n";
  }
  return out;
}

}  // namespace qubokit
