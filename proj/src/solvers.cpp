#include "qubokit/solvers.hpp"

#include <cassert>

#include "qubokit/errors.hpp"

namespace qubokit {

namespace {

void check_bound(const QuboInstance& instance, const DleOracle& oracle) {
  if (oracle.instance() != instance) {
    throw ParameterError("oracle is not bound to this instance");
  }
}

// Least value in [lo, hi] the oracle affirms; the answer must lie inside.
// Midpoints round toward -infinity; true descends, false ascends.
Int binary_search_min(DleOracle& oracle, Int lo, Int hi,
                      const Restriction& restriction) {
  while (lo < hi) {
    const Int mid = floor_half(lo + hi);
    if (oracle.decide_le(mid, restriction)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

SolveReport solve_qubo(const QuboInstance& instance, DleOracle& oracle) {
  check_bound(instance, oracle);
  const std::uint64_t before = oracle.stats().queries;
  const Int lb = instance.lower_bound();

  SolveReport report;
  report.search_interval = {lb, Int(0)};
  report.min_value = binary_search_min(oracle, lb, Int(0), Restriction{});
  report.queries = oracle.stats().queries - before;
  report.offset_applied = 0;
  return report;
}

SolveReport solve_lqubo(const QuboInstance& instance, const Int& ell,
                        DleOracle& oracle) {
  check_bound(instance, oracle);
  const auto flags = instance.classify(ell, std::nullopt);
  if (!flags.all_above_lower.value()) {
    throw SubclassError("coefficient <= ell = " + to_decimal(ell) +
                        "; instance is outside the lower-bounded class");
  }

  SolveReport report = solve_qubo(instance, oracle);

  // Every coefficient exceeds ell and there are fewer than n^2 of them, so
  // the tighter [lower_bound, 0] interval stays within the class budget.
  const Int n2 = Int(instance.n()) * instance.n();
  assert(report.queries <=
         static_cast<std::uint64_t>(ceil_log2(-ell * n2 + 1)) + 1);
  return report;
}

UquboSplit uqubo_split(const QuboInstance& instance, const Int& u) {
  const auto flags = instance.classify(std::nullopt, u);
  if (!flags.all_below_upper.value()) {
    throw SubclassError("coefficient >= u = " + to_decimal(u) +
                        "; instance is outside the upper-bounded class");
  }

  // Any entry below -2(n-1)u outweighs everything the rest of a row can add,
  // so both endpoints are active in every minimiser.
  const Int threshold = Int(-2) * (instance.n() - 1) * u;

  UquboSplit split{QuboInstance(instance.n(), {}), {}, Int(0), Restriction{}};
  QuboInstance::EntryMap kept;
  for (const auto& [key, v] : instance.entries()) {
    if (v < threshold) {
      split.i_b.push_back(key);
      split.offset += v;
      split.forced.forced_one.insert(key.first);
      split.forced.forced_one.insert(key.second);
    } else {
      kept.emplace(key, v);
    }
  }
  split.a_matrix = QuboInstance(instance.n(), std::move(kept));
  return split;
}

SolveReport solve_uqubo(const QuboInstance& instance, const Int& u,
                        DleOracle& oracle) {
  check_bound(instance, oracle);
  UquboSplit split = uqubo_split(instance, u);
  const std::uint64_t before = oracle.stats().queries;

  // Searching the original instance under the forced-one restriction equals
  // searching the A-matrix and re-adding the offset: every consistent
  // assignment pays the forced entries exactly once.
  Assignment base = Assignment::zeros(instance.n());
  {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(instance.n()), 0);
    for (int i : split.forced.forced_one) bits[static_cast<std::size_t>(i - 1)] = 1;
    base = Assignment(std::move(bits));
  }
  const Int lo = instance.lower_bound();
  const Int hi = instance.evaluate(base);  // attained, so the minimum is <= hi

  SolveReport report;
  report.search_interval = {lo, hi};
  report.min_value = binary_search_min(oracle, lo, hi, split.forced);
  report.queries = oracle.stats().queries - before;
  report.offset_applied = split.offset;

  const Int n2 = Int(instance.n()) * instance.n();
  assert(report.queries <=
         static_cast<std::uint64_t>(ceil_log2(Int(2) * (instance.n() - 1) * u * n2 + 1)) + 1);
  return report;
}

bool decide_dqubo(const QuboInstance& instance, const Int& q, DleOracle& oracle) {
  check_bound(instance, oracle);
  if (!oracle.decide_le(q)) return false;
  return !oracle.decide_le(q - 1);
}

Assignment extract_argmin(const QuboInstance& instance, const Int& min_value,
                          DleOracle& oracle) {
  check_bound(instance, oracle);
  const int n = instance.n();

  Restriction fixed;
  for (int i = 1; i <= n; ++i) {
    fixed.forced_zero.insert(i);
    if (!oracle.decide_le(min_value, fixed)) {
      fixed.forced_zero.erase(i);
      fixed.forced_one.insert(i);
    }
  }

  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  for (int i : fixed.forced_one) bits[static_cast<std::size_t>(i - 1)] = 1;
  Assignment result(std::move(bits));

  if (instance.evaluate(result) != min_value) {
    throw InconsistencyError("value " + to_decimal(min_value) +
                             " is not attained; extraction reached " +
                             to_decimal(instance.evaluate(result)));
  }
  return result;
}

}  // namespace qubokit
