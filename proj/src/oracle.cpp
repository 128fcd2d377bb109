#include "qubokit/oracle.hpp"

#include <tuple>

#include "qubokit/errors.hpp"

namespace qubokit {

DleOracle::DleOracle(QuboInstance instance, EnumerationEngine engine)
    : instance_(std::move(instance)), engine_(engine) {
  const int n = instance_.n();
  lower_bound_ = instance_.lower_bound();
  positive_sum_ = instance_.upper_bound();

  model_big_.diag.assign(static_cast<std::size_t>(n) + 1, Int(0));
  model_big_.adj.assign(static_cast<std::size_t>(n) + 1, {});
  Int total_abs = 0;
  for (const auto& [key, v] : instance_.entries()) {
    total_abs += boost::multiprecision::abs(v);
    model_big_.entries.emplace_back(key.first, key.second, v);
    if (key.first == key.second) {
      model_big_.diag[static_cast<std::size_t>(key.first)] = v;
    } else {
      model_big_.adj[static_cast<std::size_t>(key.first)].emplace_back(key.second, v);
      model_big_.adj[static_cast<std::size_t>(key.second)].emplace_back(key.first, v);
    }
  }

  // With the cumulative-magnitude budget inside int64 range, every partial
  // value and margin the scan can form fits; otherwise fall back to Int.
  fits64_ = total_abs <= (Int(1) << 62);
  if (fits64_) {
    model64_.diag.assign(static_cast<std::size_t>(n) + 1, 0);
    model64_.adj.assign(static_cast<std::size_t>(n) + 1, {});
    for (const auto& [i, j, v] : model_big_.entries) {
      const std::int64_t w = to_int64(v);
      model64_.entries.emplace_back(i, j, w);
      if (i == j) {
        model64_.diag[static_cast<std::size_t>(i)] = w;
      } else {
        model64_.adj[static_cast<std::size_t>(i)].emplace_back(j, w);
        model64_.adj[static_cast<std::size_t>(j)].emplace_back(i, w);
      }
    }
  }
}

bool DleOracle::decide_le(const Int& q) { return decide_le(q, Restriction{}); }

bool DleOracle::decide_le(const Int& q, const Restriction& restriction) {
  const int n = instance_.n();
  restriction.validate(n);

  const int free_count = n - restriction.forced_count();
  if (free_count > kMaxFreeVariables) {
    throw CapacityError("query has " + std::to_string(free_count) +
                        " free variables; the guard allows at most " +
                        std::to_string(kMaxFreeVariables));
  }

  ++stats_.queries;

  // Sound regardless of the restriction: lower_bound under-approximates and
  // positive_sum over-approximates every assignment value.
  if (q < lower_bound_) return false;
  if (q >= positive_sum_) return true;

  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) + 1, 0);
  for (int i : restriction.forced_one) bits[static_cast<std::size_t>(i)] = 1;
  std::vector<int> free_vars;
  free_vars.reserve(static_cast<std::size_t>(free_count));
  for (int i = 1; i <= n; ++i) {
    if (restriction.forced_one.count(i) == 0 && restriction.forced_zero.count(i) == 0) {
      free_vars.push_back(i);
    }
  }

  if (fits64_) {
    return enumerate_le<std::int64_t>(model64_, to_int64(q), free_vars, std::move(bits));
  }
  return enumerate_le<Int>(model_big_, q, free_vars, std::move(bits));
}

// Ascending binary order over the free variables, reading x_1..x_n as a
// numeral (last free variable flips fastest).  The running value and the
// per-variable flip margins are maintained incrementally, so one step costs
// the flipped variables' degrees instead of a full re-evaluation.
template <typename T>
bool DleOracle::enumerate_le(const Model<T>& m, const T& q,
                             const std::vector<int>& free_vars,
                             std::vector<std::uint8_t> bits) {
  const int n = instance_.n();

  T value{};
  for (const auto& [i, j, w] : m.entries) {
    if (bits[static_cast<std::size_t>(i)] && bits[static_cast<std::size_t>(j)]) {
      value += w;
    }
  }

  // margin[a]: change in value if x_a flips 0 -> 1 with the others fixed.
  std::vector<T> margin(static_cast<std::size_t>(n) + 1, T{});
  for (int a = 1; a <= n; ++a) {
    T s = m.diag[static_cast<std::size_t>(a)];
    for (const auto& [b, w] : m.adj[static_cast<std::size_t>(a)]) {
      if (bits[static_cast<std::size_t>(b)]) s += w;
    }
    margin[static_cast<std::size_t>(a)] = s;
  }

  const auto flip = [&](int a, bool on) {
    const std::size_t ua = static_cast<std::size_t>(a);
    if (on) {
      value += margin[ua];
      bits[ua] = 1;
      for (const auto& [b, w] : m.adj[ua]) margin[static_cast<std::size_t>(b)] += w;
    } else {
      value -= margin[ua];
      bits[ua] = 0;
      for (const auto& [b, w] : m.adj[ua]) margin[static_cast<std::size_t>(b)] -= w;
    }
  };

  for (;;) {
    ++stats_.assignments_examined;
    if (value <= q) return true;

    // Binary increment: clear trailing ones, set the next zero.
    int idx = static_cast<int>(free_vars.size()) - 1;
    while (idx >= 0 && bits[static_cast<std::size_t>(free_vars[static_cast<std::size_t>(idx)])]) {
      flip(free_vars[static_cast<std::size_t>(idx)], false);
      --idx;
    }
    if (idx < 0) return false;
    flip(free_vars[static_cast<std::size_t>(idx)], true);
  }
}

template bool DleOracle::enumerate_le<std::int64_t>(const Model<std::int64_t>&,
                                                    const std::int64_t&,
                                                    const std::vector<int>&,
                                                    std::vector<std::uint8_t>);
template bool DleOracle::enumerate_le<Int>(const Model<Int>&, const Int&,
                                           const std::vector<int>&,
                                           std::vector<std::uint8_t>);

}  // namespace qubokit
