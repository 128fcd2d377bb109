#include "qubokit/instance.hpp"

#include <sstream>

namespace qubokit {

namespace {

void check_key(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) {
    throw ParameterError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") outside [1, " + std::to_string(n) + "]");
  }
  if (i > j) {
    throw ParameterError("lower-triangle entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + "); keys need i <= j");
  }
}

}  // namespace

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw ParameterError("assignment values must be 0 or 1");
  }
}

Assignment Assignment::zeros(int n) {
  if (n < 1) throw ParameterError("assignment length must be >= 1");
  return Assignment(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

Assignment Assignment::from_bits(std::initializer_list<int> bits) {
  std::vector<std::uint8_t> v;
  v.reserve(bits.size());
  for (int b : bits) v.push_back(static_cast<std::uint8_t>(b));
  return Assignment(std::move(v));
}

int Assignment::bit(int i) const {
  if (i < 1 || i > size()) {
    throw DimensionError("assignment index " + std::to_string(i) + " outside [1, " +
                         std::to_string(size()) + "]");
  }
  return bits_[static_cast<std::size_t>(i - 1)];
}

std::string Assignment::to_string() const {
  std::string s = "(";
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) s += ",";
    s += bit(i) ? "1" : "0";
  }
  s += ")";
  return s;
}

void Restriction::validate(int n) const {
  for (int i : forced_one) {
    if (i < 1 || i > n) {
      throw RestrictionError("forced index " + std::to_string(i) + " outside [1, " +
                             std::to_string(n) + "]");
    }
  }
  for (int i : forced_zero) {
    if (i < 1 || i > n) {
      throw RestrictionError("forced index " + std::to_string(i) + " outside [1, " +
                             std::to_string(n) + "]");
    }
    if (forced_one.count(i) != 0) {
      throw RestrictionError("variable " + std::to_string(i) +
                             " forced to both one and zero");
    }
  }
}

QuboInstance::QuboInstance(int n, EntryMap entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw ParameterError("instance needs n >= 1");
  for (auto it = entries_.begin(); it != entries_.end();) {
    check_key(n_, it->first.first, it->first.second);
    if (it->second == 0) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
}

Int QuboInstance::coefficient(int i, int j) const {
  check_key(n_, i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Int(0) : it->second;
}

Int QuboInstance::evaluate(const Assignment& x) const {
  if (x.size() != n_) {
    throw DimensionError("assignment length " + std::to_string(x.size()) +
                         " does not match n = " + std::to_string(n_));
  }
  Int total = 0;
  const auto& bits = x.bits();
  for (const auto& [key, v] : entries_) {
    if (bits[static_cast<std::size_t>(key.first - 1)] &&
        bits[static_cast<std::size_t>(key.second - 1)]) {
      total += v;
    }
  }
  return total;
}

Int QuboInstance::lower_bound() const {
  Int total = 0;
  for (const auto& [key, v] : entries_) {
    if (v < 0) total += v;
  }
  return total;
}

Int QuboInstance::upper_bound() const {
  Int total = 0;
  for (const auto& [key, v] : entries_) {
    if (v > 0) total += v;
  }
  return total;
}

SubclassFlags QuboInstance::classify(const std::optional<Int>& ell,
                                     const std::optional<Int>& u) const {
  if (ell && *ell >= 0) throw ParameterError("ell must be negative");
  if (u && *u <= 0) throw ParameterError("u must be positive");

  SubclassFlags flags;
  flags.small_coefficients = true;
  bool above = true;
  bool below = true;
  for (const auto& [key, v] : entries_) {
    if (v < -1 || v > 1) flags.small_coefficients = false;
    if (ell && v <= *ell) above = false;
    if (u && v >= *u) below = false;
  }
  if (ell) flags.all_above_lower = above;
  if (u) flags.all_below_upper = below;
  return flags;
}

QuboBuilder::QuboBuilder(int n) : n_(n) {
  if (n_ < 1) throw ParameterError("instance needs n >= 1");
}

void QuboBuilder::add(int i, int j, const Int& value) {
  check_key(n_, i, j);
  acc_[{i, j}] += value;
}

bool QuboBuilder::contains(int i, int j) const { return acc_.count({i, j}) != 0; }

QuboInstance QuboBuilder::build() { return QuboInstance(n_, std::move(acc_)); }

QuboInstance make_qubo(int n,
                       std::initializer_list<std::tuple<int, int, Int>> entries) {
  QuboBuilder b(n);
  for (const auto& [i, j, v] : entries) b.add(i, j, v);
  return b.build();
}

}  // namespace qubokit
