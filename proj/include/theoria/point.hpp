#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "theoria/common.hpp"

namespace theoria {

using Bits = std::vector<bool>;

std::string bits_to_string(const Bits& b);
Bits bits_from_string(const std::string& s);

/// An ultimately periodic 0/1 sequence prefix . period^omega, stored in
/// canonical form: the period is primitive and the prefix is the shortest
/// one realizing the sequence. Two points denote the same sequence iff
/// their canonical forms are identical.
class TheoryPoint {
 public:
  TheoryPoint() : period_{false} {}  // all-zero point
  TheoryPoint(Bits prefix, Bits period);

  static TheoryPoint parse(const std::string& text);  // "101~0", "~01"

  const Bits& prefix() const { return prefix_; }
  const Bits& period() const { return period_; }

  bool bit_at(std::uint64_t i) const;
  std::string str() const;  // canonical "prefix~period"

  bool operator==(const TheoryPoint& o) const = default;
  auto operator<=>(const TheoryPoint& o) const = default;

 private:
  Bits prefix_;
  Bits period_;
};

struct PointsEqual {};
struct FirstDifference {
  std::uint64_t index;
};
using CompareResult = std::variant<PointsEqual, FirstDifference>;

/// Canonicalizing constructor exposed as a free function.
TheoryPoint normalize_point(const Bits& prefix, const Bits& period);
TheoryPoint normalize_point(const std::string& prefix, const std::string& period);

/// Equal iff canonical forms identical, else least index where the
/// denoted sequences differ.
CompareResult point_compare(const TheoryPoint& p, const TheoryPoint& q);

std::optional<std::uint64_t> first_difference(const TheoryPoint& p, const TheoryPoint& q);

}  // namespace theoria
