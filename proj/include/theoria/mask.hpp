#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "theoria/point.hpp"

namespace theoria {

enum class MaskLetter : std::uint8_t { Free, Fixed0, Fixed1 };

using MaskWord = std::vector<MaskLetter>;

char mask_letter_char(MaskLetter l);
MaskWord mask_word_from_string(const std::string& s);
std::string mask_word_to_string(const MaskWord& w);

/// Ultimately periodic map position -> Free | Fixed0 | Fixed1, canonical
/// like TheoryPoint (primitive period, shortest prefix). Denotes the set of
/// sequences consistent with it.
class CubeMask {
 public:
  CubeMask() : period_{MaskLetter::Free} {}  // the full cube
  CubeMask(MaskWord prefix, MaskWord period);
  static CubeMask parse(const std::string& text);  // "F0~F0", "~F0F1"

  const MaskWord& prefix() const { return prefix_; }
  const MaskWord& period() const { return period_; }
  MaskLetter at(std::uint64_t i) const;
  std::string str() const;

  bool period_has(MaskLetter l) const;
  bool consistent(const TheoryPoint& p, std::uint64_t pos) const;

  /// Every violation position of p against the mask below the decision
  /// horizon; `periodic` set when violations recur forever past it.
  struct Violations {
    std::vector<std::uint64_t> positions;  // violations in the pre-periodic zone
    bool periodic = false;                 // infinitely many more beyond
    std::uint64_t first_periodic = 0;
  };
  Violations violations(const TheoryPoint& p) const;
  bool contains(const TheoryPoint& p) const;

  /// k-th position (0-based) whose letter is Fixed0/Fixed1. Requires a
  /// fixed letter in the period.
  std::uint64_t fixed_position(std::uint64_t k) const;
  std::optional<std::uint64_t> fixed_index_of(std::uint64_t pos) const;
  /// k-th Free position. Requires a Free letter in the period.
  std::uint64_t free_position(std::uint64_t k) const;

  /// Point consistent with the mask whose k-th free coordinate is bit k of
  /// j and 0 beyond; the canonical dense enumeration of the cube.
  TheoryPoint dense_point(std::uint64_t j) const;
  /// Inverse of dense_point: index when p is consistent and its free
  /// coordinates are finitely supported, else nullopt.
  std::optional<std::uint64_t> dense_index_of(const TheoryPoint& p) const;

  bool operator==(const CubeMask& o) const = default;
  auto operator<=>(const CubeMask& o) const = default;

 private:
  MaskWord prefix_;
  MaskWord period_;
};

}  // namespace theoria
