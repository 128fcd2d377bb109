#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qubokit/bigint.hpp"
#include "qubokit/instance.hpp"
#include "qubokit/oracle.hpp"

namespace qubokit {

struct SolveReport {
  Int min_value;
  std::optional<Assignment> argmin;
  std::uint64_t queries = 0;        // oracle decisions this operation consumed
  std::pair<Int, Int> search_interval{0, 0};  // [lo, hi] actually searched
  Int offset_applied = 0;           // split constant for the upper-bounded solver
};

// Exact minimisation by binary search over [lower_bound, 0] driven by the
// decision oracle; consumes at most ceil(log2(-lower_bound + 1)) + 1 queries.
SolveReport solve_qubo(const QuboInstance& instance, DleOracle& oracle);

// Same search, but first validates that every coefficient exceeds ell
// (ell < 0); the theoretical budget ceil(log2(-ell * n^2 + 1)) + 1 is asserted.
SolveReport solve_lqubo(const QuboInstance& instance, const Int& ell,
                        DleOracle& oracle);

// Decomposition for instances whose coefficients all sit below u (u > 0):
// entries below -2(n-1)u are forcibly active in every minimiser.
struct UquboSplit {
  QuboInstance a_matrix;                       // original minus forced entries
  std::vector<std::pair<int, int>> i_b;        // forced entry keys, sorted
  Int offset;                                  // sum of forced coefficients
  Restriction forced;                          // forced_one = endpoints of i_b
};

UquboSplit uqubo_split(const QuboInstance& instance, const Int& u);

// Split, then binary-search the original instance under the forced-one
// restriction over [lower_bound, value(forced-ones-only)]; the result equals
// the unrestricted minimum and fits ceil(log2(2(n-1)*u*n^2 + 1)) + 1 queries.
SolveReport solve_uqubo(const QuboInstance& instance, const Int& u,
                        DleOracle& oracle);

// True exactly when q is the minimum: decide_le(q) and not decide_le(q - 1).
// At most two queries; one when the first answer is already false.
bool decide_dqubo(const QuboInstance& instance, const Int& q, DleOracle& oracle);

// Recover one minimising assignment with exactly n oracle queries by forcing
// variables to zero left to right whenever the minimum stays reachable
// (ties prefer zero).  Throws InconsistencyError when min_value is not
// attained by the assignment the walk produces.
Assignment extract_argmin(const QuboInstance& instance, const Int& min_value,
                          DleOracle& oracle);

}  // namespace qubokit
