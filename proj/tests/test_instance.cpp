#include <doctest.h>

#include "qubokit/instance.hpp"
#include "support/brute.hpp"
#include "support/gen.hpp"

using namespace qubokit;

namespace {

// Path-graph clique embedding on three vertices; recurs through the suites.
QuboInstance path3() {
  return make_qubo(3, {{1, 1, -1}, {2, 2, -1}, {3, 3, -1}, {1, 3, 1}});
}

}  // namespace

TEST_CASE("construction validates shape") {
  CHECK_THROWS_AS(QuboInstance(0, {}), ParameterError);
  CHECK_THROWS_AS(QuboInstance(-2, {}), ParameterError);
  CHECK_THROWS_AS(make_qubo(2, {{2, 1, 5}}), ParameterError);   // lower triangle
  CHECK_THROWS_AS(make_qubo(2, {{1, 3, 5}}), ParameterError);   // out of range
  CHECK_THROWS_AS(make_qubo(2, {{0, 1, 5}}), ParameterError);

  // Zero coefficients are dropped so equal models compare equal.
  CHECK(make_qubo(2, {{1, 2, 0}}) == make_qubo(2, {}));
  CHECK(make_qubo(2, {{1, 1, 3}}).coefficient(1, 2) == 0);
}

TEST_CASE("builder accumulates repeated keys") {
  QuboBuilder b(2);
  b.add(1, 2, 3);
  b.add(1, 2, -3);
  b.add(2, 2, 7);
  const QuboInstance q = b.build();
  CHECK(q.entries().size() == 1);  // the (1,2) total cancelled to zero
  CHECK(q.coefficient(2, 2) == 7);
}

TEST_CASE("evaluate matches hand-computed values") {
  const QuboInstance q = path3();
  CHECK(q.evaluate(Assignment::from_bits({1, 1, 0})) == -2);
  CHECK(q.evaluate(Assignment::from_bits({1, 1, 1})) == -2);  // -3 + 1
  CHECK(q.evaluate(Assignment::from_bits({0, 0, 0})) == 0);
  CHECK(q.evaluate(Assignment::from_bits({0, 1, 1})) == -2);

  CHECK_THROWS_AS(q.evaluate(Assignment::from_bits({1, 0})), DimensionError);
}

TEST_CASE("lower and upper bounds sum one-sided coefficients") {
  CHECK(path3().lower_bound() == -3);
  CHECK(path3().upper_bound() == 1);
  CHECK(make_qubo(2, {}).lower_bound() == 0);
  CHECK(make_qubo(2, {{1, 1, 4}, {1, 2, 2}}).lower_bound() == 0);
  CHECK(make_qubo(2, {{1, 1, 4}, {1, 2, 2}}).upper_bound() == 6);
}

TEST_CASE("classify reports subclass membership") {
  const QuboInstance q = path3();

  const auto both = q.classify(Int(-2), Int(2));
  CHECK(both.small_coefficients);
  CHECK(both.all_above_lower.value());
  CHECK(both.all_below_upper.value());

  // Boundary values are excluded: coefficients must be strictly inside.
  CHECK_FALSE(q.classify(Int(-1), std::nullopt).all_above_lower.value());
  CHECK_FALSE(q.classify(std::nullopt, Int(1)).all_below_upper.value());

  const auto none = q.classify(std::nullopt, std::nullopt);
  CHECK_FALSE(none.all_above_lower.has_value());
  CHECK_FALSE(none.all_below_upper.has_value());

  CHECK_FALSE(make_qubo(1, {{1, 1, -5}}).classify(std::nullopt, std::nullopt)
                  .small_coefficients);

  CHECK_THROWS_AS(q.classify(Int(0), std::nullopt), ParameterError);
  CHECK_THROWS_AS(q.classify(std::nullopt, Int(0)), ParameterError);
  CHECK_THROWS_AS(q.classify(std::nullopt, Int(-1)), ParameterError);
}

TEST_CASE("restriction validation") {
  Restriction r;
  r.forced_one = {1};
  r.forced_zero = {2};
  CHECK_NOTHROW(r.validate(2));

  r.forced_zero.insert(1);
  CHECK_THROWS_AS(r.validate(2), RestrictionError);

  Restriction out;
  out.forced_one = {3};
  CHECK_THROWS_AS(out.validate(2), RestrictionError);
}

TEST_CASE("property: every assignment value sits between the bounds") {
  SplitMix64 rng(2024);
  for (int round = 0; round < 50; ++round) {
    const QuboInstance q = testsupport::random_qubo(rng, 1, 8, 9);
    const Int lb = q.lower_bound();
    const Int ub = q.upper_bound();
    for (std::uint32_t mask = 0; mask < (1u << q.n()); ++mask) {
      const Int v = q.evaluate(testsupport::mask_to_assignment(q.n(), mask));
      CHECK(v >= lb);
      CHECK(v <= ub);
      CHECK(v == testsupport::mask_value(q, mask));
    }
    CHECK(q.evaluate(Assignment::zeros(q.n())) == 0);
  }
}

TEST_CASE("property: evaluate is linear in the coefficients") {
  SplitMix64 rng(77);
  for (int round = 0; round < 30; ++round) {
    const int n = static_cast<int>(rng.range(1, 6));
    QuboBuilder ba(n);
    QuboBuilder bb(n);
    QuboBuilder bsum(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        const std::int64_t va = rng.range(-20, 20);
        const std::int64_t vb = rng.range(-20, 20);
        ba.add(i, j, va);
        bb.add(i, j, vb);
        bsum.add(i, j, va + vb);
      }
    }
    const QuboInstance qa = ba.build();
    const QuboInstance qb = bb.build();
    const QuboInstance qs = bsum.build();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto x = testsupport::mask_to_assignment(n, mask);
      CHECK(qs.evaluate(x) == qa.evaluate(x) + qb.evaluate(x));
    }
  }
}
