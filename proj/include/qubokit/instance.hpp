#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qubokit/bigint.hpp"
#include "qubokit/errors.hpp"

namespace qubokit {

// One binary value per variable, 1-based access.
class Assignment {
 public:
  explicit Assignment(std::vector<std::uint8_t> bits);
  static Assignment zeros(int n);
  static Assignment from_bits(std::initializer_list<int> bits);

  int size() const { return static_cast<int>(bits_.size()); }
  int bit(int i) const;                 // i in [1, size()]
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const Assignment& other) const { return bits_ == other.bits_; }
  bool operator!=(const Assignment& other) const { return !(*this == other); }

  std::string to_string() const;        // e.g. "(0,1,1)"

 private:
  std::vector<std::uint8_t> bits_;
};

// Partial assignment: variables forced to one / zero, the rest free.
struct Restriction {
  std::set<int> forced_one;
  std::set<int> forced_zero;

  bool empty() const { return forced_one.empty() && forced_zero.empty(); }
  int forced_count() const {
    return static_cast<int>(forced_one.size() + forced_zero.size());
  }
  // Throws RestrictionError on out-of-range indices or overlapping sets.
  void validate(int n) const;
};

struct SubclassFlags {
  std::optional<bool> all_above_lower;  // every coefficient > ell (when ell given)
  std::optional<bool> all_below_upper;  // every coefficient < u (when u given)
  bool small_coefficients = false;      // every coefficient in {-1, 0, 1}
};

// Upper-triangular sparse integer matrix; minimise sum q_ij * x_i * x_j
// over binary x with 1-based indices i <= j.  Immutable after construction.
class QuboInstance {
 public:
  using Key = std::pair<int, int>;
  using EntryMap = std::map<Key, Int>;

  // Validates n >= 1 and 1 <= i <= j <= n for every key; zero coefficients
  // are dropped so equal models compare equal.
  QuboInstance(int n, EntryMap entries);

  int n() const { return n_; }
  const EntryMap& entries() const { return entries_; }
  Int coefficient(int i, int j) const;  // 0 when the key is absent

  // Objective value of a full assignment (length must equal n).
  Int evaluate(const Assignment& x) const;

  // Sum of all non-positive coefficients: a valid lower bound on every
  // assignment value, restricted or not.
  Int lower_bound() const;

  // Sum of all positive coefficients: a valid upper bound likewise.
  Int upper_bound() const;

  // Subclass membership; ell must be < 0 and u must be > 0 when supplied.
  SubclassFlags classify(const std::optional<Int>& ell,
                         const std::optional<Int>& u) const;

  bool operator==(const QuboInstance& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }
  bool operator!=(const QuboInstance& other) const { return !(*this == other); }

 private:
  int n_;
  EntryMap entries_;
};

// Accumulating constructor helper: add() sums repeated keys, build() drops
// zero totals.  Rejects i > j and out-of-range indices immediately.
class QuboBuilder {
 public:
  explicit QuboBuilder(int n);

  void add(int i, int j, const Int& value);
  bool contains(int i, int j) const;
  int n() const { return n_; }

  QuboInstance build();

 private:
  int n_;
  QuboInstance::EntryMap acc_;
};

// Convenience for tests and small construction sites.
QuboInstance make_qubo(int n,
                       std::initializer_list<std::tuple<int, int, Int>> entries);

}  // namespace qubokit
