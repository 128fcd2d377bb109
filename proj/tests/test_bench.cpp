#include <doctest.h>

#include "qubokit/bench.hpp"
#include "qubokit/errors.hpp"
#include "support/brute.hpp"

using namespace qubokit;

TEST_CASE("SplitMix64 reproduces the reference stream") {
  SplitMix64 a(0);
  CHECK(a.next() == 16294208416658607535ull);
  CHECK(a.next() == 7960286522194355700ull);
  CHECK(a.next() == 487617019471545679ull);

  SplitMix64 b(1234567);
  CHECK(b.next() == 6457827717110365317ull);
  CHECK(b.next() == 3203168211198807973ull);
}

TEST_CASE("SplitMix64 draws stay inside their bounds") {
  SplitMix64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    CHECK(rng.below(7) < 7);
    const std::int64_t v = rng.range(-3, 5);
    CHECK(v >= -3);
    CHECK(v <= 5);
  }
  SplitMix64 one(5);
  CHECK(one.below(1) == 0);
}

TEST_CASE("derive_seed separates bench cells") {
  CHECK(derive_seed(1, 4, 0) == 14072917602864530048ull);
  CHECK(derive_seed(1, 4, 1) == 14589856391045220548ull);
  CHECK(derive_seed(1, 5, 0) == 17388166129998380965ull);
  CHECK(derive_seed(1, 4, 0) != derive_seed(2, 4, 0));
}

TEST_CASE("make_squbo_random emits unit coefficients deterministically") {
  const QuboInstance q = make_squbo_random(8, 42);
  CHECK(q.n() == 8);
  CHECK(!q.entries().empty());
  for (const auto& [key, v] : q.entries()) {
    CHECK((v == 1 || v == -1));
  }
  CHECK(q.classify(std::nullopt, std::nullopt).small_coefficients);
  CHECK(make_squbo_random(8, 42) == q);
  CHECK(make_squbo_random(8, 43) != q);
}

TEST_CASE("run_bench covers the grid and reports true minima") {
  BenchConfig config;
  config.family = BenchFamily::squbo_random;
  config.size_lo = 4;
  config.size_hi = 8;
  config.trials = 2;
  config.seed = 1;
  const std::vector<BenchRow> rows = run_bench(config);
  REQUIRE(rows.size() == 10);

  std::size_t idx = 0;
  for (int size = 4; size <= 8; ++size) {
    for (int trial = 0; trial < 2; ++trial, ++idx) {
      const BenchRow& row = rows[idx];
      CHECK(row.family == "squbo-random");
      CHECK(row.size == size);
      CHECK(row.trial == trial);
      const QuboInstance q = make_squbo_random(
          size, derive_seed(config.seed, static_cast<std::uint64_t>(size),
                            static_cast<std::uint64_t>(trial)));
      CHECK(row.min_value == testsupport::brute_min(q));
      // |min| <= n(n+1)/2 keeps the search logarithmic in n.
      CHECK(row.queries <= 2u * static_cast<unsigned>(ceil_log2(Int(size))) + 4u);
    }
  }
}

TEST_CASE("single-bigcoeff rows scale linearly in the bit width") {
  BenchConfig config;
  config.family = BenchFamily::single_bigcoeff;
  config.size_lo = 4;
  config.size_hi = 10;
  config.trials = 1;
  const std::vector<BenchRow> rows = run_bench(config);
  REQUIRE(rows.size() == 7);
  for (const BenchRow& row : rows) {
    CHECK(row.min_value == -(Int(1) << row.size));
    // The interval [-2^b, 0] needs b + 1 halvings; never fewer than b - 1.
    CHECK(row.queries == static_cast<std::uint64_t>(row.size) + 1);
    CHECK(row.queries >= static_cast<std::uint64_t>(row.size) - 1);
  }
}

TEST_CASE("write_bench_csv is byte-stable") {
  BenchConfig config;
  config.family = BenchFamily::single_bigcoeff;
  config.size_lo = 4;
  config.size_hi = 5;
  config.trials = 1;
  config.seed = 7;
  const std::string csv = write_bench_csv(config, run_bench(config));
  CHECK(csv ==
        "# qubokit-bench generator=splitmix64-v1 family=single-bigcoeff "
        "sizes=4..5 trials=1 seed=7\n"
        "family,n_or_bits,trial,queries,min_value\n"
        "single-bigcoeff,4,0,5,-16\n"
        "single-bigcoeff,5,0,6,-32\n");

  BenchConfig random_config;
  random_config.family = BenchFamily::squbo_random;
  random_config.size_lo = 4;
  random_config.size_hi = 12;
  random_config.trials = 3;
  random_config.seed = 99;
  const std::string first = write_bench_csv(random_config, run_bench(random_config));
  const std::string second = write_bench_csv(random_config, run_bench(random_config));
  CHECK(first == second);

  BenchConfig empty = random_config;
  empty.trials = 0;
  CHECK(write_bench_csv(empty, run_bench(empty)) ==
        "# qubokit-bench generator=splitmix64-v1 family=squbo-random "
        "sizes=4..12 trials=0 seed=99\n"
        "family,n_or_bits,trial,queries,min_value\n");
}

TEST_CASE("run_bench rejects impossible configurations") {
  BenchConfig config;
  config.family = BenchFamily::squbo_random;
  config.size_lo = 4;
  config.size_hi = 31;
  CHECK_THROWS_AS(run_bench(config), CapacityError);

  config.family = BenchFamily::single_bigcoeff;
  config.size_hi = 40;  // single variable; no capacity concern
  config.trials = 1;
  CHECK_NOTHROW(run_bench(config));

  config.size_lo = 0;
  CHECK_THROWS_AS(run_bench(config), ParameterError);
  config.size_lo = 6;
  config.size_hi = 5;
  CHECK_THROWS_AS(run_bench(config), ParameterError);
  config.size_hi = 7;
  config.trials = -1;
  CHECK_THROWS_AS(run_bench(config), ParameterError);
}
