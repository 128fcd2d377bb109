#include <doctest.h>

#include "qubokit/solvers.hpp"
#include "support/brute.hpp"
#include "support/gen.hpp"

using namespace qubokit;

namespace {

QuboInstance path3() {
  return make_qubo(3, {{1, 1, -1}, {2, 2, -1}, {3, 3, -1}, {1, 3, 1}});
}

std::uint64_t query_budget(const Int& lb) {
  return static_cast<std::uint64_t>(ceil_log2(-lb + 1)) + 1;
}

}  // namespace

TEST_CASE("solve_qubo pins the worked examples") {
  {
    const QuboInstance q = path3();
    DleOracle oracle(q);
    const SolveReport r = solve_qubo(q, oracle);
    CHECK(r.min_value == -2);
    CHECK(r.search_interval.first == -3);
    CHECK(r.search_interval.second == 0);
    CHECK(r.queries == 2);  // four candidate values halve twice
    CHECK(r.queries <= query_budget(q.lower_bound()));
    CHECK(r.offset_applied == 0);
  }
  {
    const QuboInstance zero(2, {});
    DleOracle oracle(zero);
    const SolveReport r = solve_qubo(zero, oracle);
    CHECK(r.min_value == 0);
    CHECK(r.queries <= 1);
  }
  {
    const QuboInstance q = make_qubo(1, {{1, 1, -(Int(1) << 20)}});
    DleOracle oracle(q);
    const SolveReport r = solve_qubo(q, oracle);
    CHECK(r.min_value == -(Int(1) << 20));
    CHECK(r.queries == 21);  // ceil(log2(2^20 + 1))
  }
}

TEST_CASE("solve_qubo rejects an unbound oracle") {
  const QuboInstance q = path3();
  DleOracle other(QuboInstance(3, {}));
  CHECK_THROWS_AS(solve_qubo(q, other), ParameterError);
}

TEST_CASE("solve_qubo agrees with brute force on a random corpus") {
  SplitMix64 rng(4242);
  for (int round = 0; round < 60; ++round) {
    const QuboInstance q = testsupport::random_qubo(rng, 1, 12, 50);
    DleOracle oracle(q);
    const SolveReport r = solve_qubo(q, oracle);
    CHECK(r.min_value == testsupport::brute_min(q));
    CHECK(r.queries <= query_budget(q.lower_bound()));
  }
}

TEST_CASE("solve_lqubo validates the class and honours its budget") {
  const QuboInstance q = path3();
  {
    DleOracle oracle(q);
    const SolveReport r = solve_lqubo(q, Int(-2), oracle);
    CHECK(r.min_value == -2);
    CHECK(r.queries <= 6);  // ceil(log2(2 * 9 + 1)) + 1
  }
  {
    DleOracle oracle(q);
    // q_ii = -1 is not strictly above ell = -1.
    CHECK_THROWS_AS(solve_lqubo(q, Int(-1), oracle), SubclassError);
    CHECK_THROWS_AS(solve_lqubo(q, Int(0), oracle), ParameterError);
  }
}

TEST_CASE("uqubo_split pins the worked examples") {
  {
    const QuboInstance q = make_qubo(2, {{1, 1, -5}, {2, 2, -1}});
    const UquboSplit s = uqubo_split(q, Int(1));  // threshold -2
    CHECK((s.i_b == std::vector<std::pair<int, int>>{{1, 1}}));
    CHECK(s.offset == -5);
    CHECK(s.forced.forced_one == std::set<int>{1});
    CHECK(s.a_matrix == make_qubo(2, {{2, 2, -1}}));
  }
  {
    const UquboSplit s = uqubo_split(path3(), Int(2));  // threshold -8
    CHECK(s.i_b.empty());
    CHECK(s.offset == 0);
    CHECK(s.a_matrix == path3());
  }
  {
    const QuboInstance q = make_qubo(2, {{1, 2, -3}});
    const UquboSplit s = uqubo_split(q, Int(1));  // threshold -2
    CHECK((s.i_b == std::vector<std::pair<int, int>>{{1, 2}}));
    CHECK((s.forced.forced_one == std::set<int>{1, 2}));
    CHECK(s.offset == -3);
    CHECK(s.a_matrix.entries().empty());
  }
  CHECK_THROWS_AS(uqubo_split(make_qubo(1, {{1, 1, 2}}), Int(1)), SubclassError);
  CHECK_THROWS_AS(uqubo_split(path3(), Int(0)), ParameterError);
}

TEST_CASE("uqubo_split reconstructs the instance") {
  SplitMix64 rng(555);
  for (int round = 0; round < 40; ++round) {
    const QuboInstance q = testsupport::random_uqubo(rng, 2, 9, 1 + rng.below(3));
    Int umax = 0;
    for (const auto& [key, v] : q.entries()) umax = std::max(umax, v);
    const Int u = umax + 1;
    const UquboSplit s = uqubo_split(q, u);
    QuboBuilder rebuilt(q.n());
    for (const auto& [key, v] : s.a_matrix.entries()) rebuilt.add(key.first, key.second, v);
    Int offset = 0;
    for (const auto& key : s.i_b) {
      rebuilt.add(key.first, key.second, q.coefficient(key.first, key.second));
      offset += q.coefficient(key.first, key.second);
    }
    CHECK(rebuilt.build() == q);
    CHECK(offset == s.offset);
  }
}

TEST_CASE("solve_uqubo pins the worked examples") {
  {
    const QuboInstance q = make_qubo(2, {{1, 1, -5}, {2, 2, -1}});
    DleOracle oracle(q);
    const SolveReport r = solve_uqubo(q, Int(1), oracle);
    CHECK(r.min_value == -6);
    CHECK(r.offset_applied == -5);
  }
  {
    const QuboInstance q = path3();
    DleOracle oracle(q);
    const SolveReport r = solve_uqubo(q, Int(2), oracle);
    CHECK(r.min_value == -2);  // trivial split equals the general solver
    CHECK(r.offset_applied == 0);
  }
  {
    // u = 1 excludes the coefficient 1 on the diagonal.
    const QuboInstance q = make_qubo(2, {{1, 1, 1}, {1, 2, -3}});
    DleOracle oracle(q);
    CHECK_THROWS_AS(solve_uqubo(q, Int(1), oracle), SubclassError);
    const SolveReport r = solve_uqubo(q, Int(2), oracle);
    CHECK(r.min_value == -2);  // x = (1,1) gives 1 - 3
  }
  {
    // Forced pair with positive diagonals: the restricted search tops out
    // above zero, which the interval must accommodate.
    const QuboInstance q = make_qubo(2, {{1, 1, 1}, {2, 2, 1}, {1, 2, -5}});
    DleOracle oracle(q);
    const SolveReport r = solve_uqubo(q, Int(2), oracle);
    CHECK(r.min_value == -3);
    CHECK(r.offset_applied == -5);
  }
}

TEST_CASE("solve_uqubo equals solve_qubo across a random corpus within budget") {
  SplitMix64 rng(31337);
  for (int round = 0; round < 60; ++round) {
    const std::int64_t u64 = 1 + static_cast<std::int64_t>(rng.below(3));
    const QuboInstance q = testsupport::random_uqubo(rng, 2, 10, u64);
    const Int u = u64;
    DleOracle a(q);
    DleOracle b(q);
    const SolveReport general = solve_qubo(q, a);
    const SolveReport split = solve_uqubo(q, u, b);
    CHECK(split.min_value == general.min_value);
    const Int n2 = Int(q.n()) * q.n();
    CHECK(split.queries <=
          static_cast<std::uint64_t>(ceil_log2(Int(2) * (q.n() - 1) * u * n2 + 1)) + 1);
  }
}

TEST_CASE("decide_dqubo is true exactly at the minimum") {
  const QuboInstance q = path3();
  {
    DleOracle oracle(q);
    CHECK(decide_dqubo(q, Int(-2), oracle));
    CHECK(oracle.stats().queries == 2);
  }
  {
    DleOracle oracle(q);
    CHECK_FALSE(decide_dqubo(q, Int(-3), oracle));
    CHECK(oracle.stats().queries == 1);  // first answer false short-circuits
  }
  {
    DleOracle oracle(q);
    CHECK_FALSE(decide_dqubo(q, Int(-1), oracle));
    CHECK(oracle.stats().queries == 2);
  }

  SplitMix64 rng(808);
  for (int round = 0; round < 25; ++round) {
    const QuboInstance inst = testsupport::random_qubo(rng, 1, 8, 9);
    const Int truth = testsupport::brute_min(inst);
    DleOracle oracle(inst);
    int trues = 0;
    for (Int probe = inst.lower_bound() - 1; probe <= 1; ++probe) {
      const std::uint64_t before = oracle.stats().queries;
      const bool ans = decide_dqubo(inst, probe, oracle);
      CHECK(oracle.stats().queries - before <= 2);
      CHECK(ans == (probe == truth));
      if (ans) ++trues;
    }
    CHECK(trues == 1);
  }
}

TEST_CASE("extract_argmin walks to the zero-preferring minimiser") {
  {
    const QuboInstance q = path3();
    DleOracle oracle(q);
    const Assignment x = extract_argmin(q, Int(-2), oracle);
    CHECK(x == Assignment::from_bits({0, 1, 1}));
    CHECK(oracle.stats().queries == 3);  // exactly n
  }
  {
    const QuboInstance zero(3, {});
    DleOracle oracle(zero);
    CHECK(extract_argmin(zero, Int(0), oracle) == Assignment::from_bits({0, 0, 0}));
  }
  {
    const QuboInstance q = path3();
    DleOracle oracle(q);
    CHECK_THROWS_AS(extract_argmin(q, Int(-3), oracle), InconsistencyError);
  }
}

TEST_CASE("extract_argmin attains the solver minimum on random corpora") {
  SplitMix64 rng(64);
  for (int round = 0; round < 40; ++round) {
    const QuboInstance q = testsupport::random_qubo(rng, 1, 10, 30);
    DleOracle oracle(q);
    const SolveReport r = solve_qubo(q, oracle);
    const std::uint64_t after_solve = oracle.stats().queries;
    const Assignment x = extract_argmin(q, r.min_value, oracle);
    CHECK(q.evaluate(x) == r.min_value);
    CHECK(oracle.stats().queries - after_solve ==
          static_cast<std::uint64_t>(q.n()));
  }
}
