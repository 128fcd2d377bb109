#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qubokit/bigint.hpp"
#include "qubokit/instance.hpp"

namespace qubokit {

struct OracleStats {
  std::uint64_t queries = 0;               // decisions served
  std::uint64_t assignments_examined = 0;  // diagnostic, order-dependent
};

enum class EnumerationEngine {
  sequential,  // single-threaded ascending-binary-order scan
};

// Decision oracle for "does some assignment consistent with the restriction
// reach value <= q?".  Exact: answers by enumeration with early exit, plus
// two always-sound shortcuts (q below the lower bound, q at or above the
// positive-coefficient sum).  Every served decision bumps stats().queries by
// exactly one; the answer never depends on the engine or on earlier calls.
class DleOracle {
 public:
  // Practical guard: queries with more free variables than this are refused.
  static constexpr int kMaxFreeVariables = 30;

  explicit DleOracle(QuboInstance instance,
                     EnumerationEngine engine = EnumerationEngine::sequential);

  const QuboInstance& instance() const { return instance_; }
  const OracleStats& stats() const { return stats_; }
  EnumerationEngine engine() const { return engine_; }

  void reset_stats() { stats_ = OracleStats{}; }

  bool decide_le(const Int& q);
  bool decide_le(const Int& q, const Restriction& restriction);

 private:
  template <typename T>
  struct Model {
    std::vector<T> diag;                               // 1-based
    std::vector<std::vector<std::pair<int, T>>> adj;   // off-diagonal, both ways
    std::vector<std::tuple<int, int, T>> entries;      // i <= j
  };

  template <typename T>
  bool enumerate_le(const Model<T>& m, const T& q,
                    const std::vector<int>& free_vars,
                    std::vector<std::uint8_t> bits);

  QuboInstance instance_;
  OracleStats stats_;
  EnumerationEngine engine_;

  Int lower_bound_;
  Int positive_sum_;
  bool fits64_ = false;
  Model<std::int64_t> model64_;
  Model<Int> model_big_;
};

}  // namespace qubokit
