#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "theoria/indexset.hpp"
#include "theoria/mask.hpp"
#include "theoria/point.hpp"
#include "theoria/sentence.hpp"
#include "theoria/trichotomy.hpp"

namespace theoria {

/// p with bit q flipped (prefix extended as needed, period phase kept).
TheoryPoint flip_bit(const TheoryPoint& p, std::uint64_t q);
/// First n bits of p.
Bits window_of(const TheoryPoint& p, std::uint64_t n);

/// Finite duplicate-free set of points.
struct FinsetBlock {
  std::vector<TheoryPoint> points;  // sorted, unique

  bool operator==(const FinsetBlock&) const = default;
};

/// Discrete sequence t_0, t_1, ... converging to `limit`: t_i agrees with
/// the limit below h(i) = stride*i + offset, carries the opposite bit at
/// h(i), then `deviation`, then zeros. Members are pairwise distinct.
struct FanBlock {
  TheoryPoint limit;
  std::uint64_t stride = 1;  // >= 1
  std::uint64_t offset = 0;
  Bits deviation;  // canonical: trailing zeros stripped
  bool include_limit = false;

  bool operator==(const FanBlock&) const = default;

  std::uint64_t flip_pos(std::uint64_t i) const { return stride * i + offset; }
  TheoryPoint member_at(std::uint64_t i) const;
  /// Index i with member_at(i) == p, if any.
  std::optional<std::uint64_t> index_of(const TheoryPoint& p) const;
};

/// Perfect closed set: all sequences consistent with the mask.
struct CubeBlock {
  CubeMask mask;

  bool operator==(const CubeBlock&) const = default;
};

/// Fans attached to the dense enumeration d_0, d_1, ... of a base cube.
/// The fan point (j,i) converging to d_j flips the base mask at the fixed
/// position with index cantor(coding, cantor(j,i)); every violation
/// position is used by at most one fan point, so fan points are pairwise
/// distinct, disjoint from the base, and arrays with distinct `coding`
/// have disjoint fan sets.
struct FanArrayBlock {
  CubeMask base;
  std::uint64_t coding = 1;  // >= 1
  bool include_base = false;
  std::vector<std::uint64_t> excluded;  // violation positions removed; sorted

  bool operator==(const FanArrayBlock&) const = default;

  std::uint64_t violation_pos(std::uint64_t j, std::uint64_t i) const;
  TheoryPoint fan_point(std::uint64_t j, std::uint64_t i) const;
  bool is_excluded(std::uint64_t q) const;
  /// The unique fan point whose violation position is q, if q codes one.
  std::optional<TheoryPoint> point_at_violation(std::uint64_t q) const;
};

using Block = std::variant<FinsetBlock, FanBlock, CubeBlock, FanArrayBlock>;

void validate_block(const Block& b);

bool block_member(const Block& b, const TheoryPoint& p);
/// Exact classification of block ∩ ⟦phi⟧.
Trichotomy block_clopen_count(const Block& b, const Sentence& phi, std::size_t block_id = 0);
/// Accumulation set of the block's denotation, as blocks.
std::vector<Block> block_acc(const Block& b);

/// Smallest depth n such that the n-bit prefix neighborhood of p meets the
/// block in at most {p}; nullopt when p lies in the block's accumulation set.
std::optional<std::uint64_t> block_separation_depth(const Block& b, const TheoryPoint& p);

/// Indices i with fan.member_at(i) consistent with the mask (exact,
/// eventually periodic).
IndexSet fan_indices_in_cube(const FanBlock& fan, const CubeMask& mask);
/// Indices i with fan.member_at(i) in the point set of `other` (members
/// plus included limit).
IndexSet fan_indices_in_fan(const FanBlock& fan, const FanBlock& other);

std::string block_dsl(const Block& b);

}  // namespace theoria
