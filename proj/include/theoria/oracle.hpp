#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "theoria/family.hpp"
#include "theoria/parallel.hpp"

namespace theoria {

/// Finite-depth ground truth, computed by direct combinatorial counting
/// per block; deliberately independent of the symbolic closure engine.
struct DepthProjection {
  std::uint64_t depth = 0;
  /// Reachable cells only; anything missing is Empty.
  std::map<std::string, Trichotomy> cells;

  Trichotomy cell(const std::string& word) const;
  /// Lines `prefix<TAB>EMPTY|FINITE:k|INF`, sorted, reachable cells only.
  std::string dump() const;
};

inline constexpr std::uint64_t kMaxOracleDepth = 24;

DepthProjection project(const Family& f, std::uint64_t depth,
                        par::Mode mode = par::default_mode());

enum class OracleVerdict { Yes, No, Inconclusive };

struct OracleAnswer {
  OracleVerdict verdict = OracleVerdict::Inconclusive;
  std::uint64_t decided_at = 0;  // depth of the deciding cell, when decided
};

OracleAnswer oracle_in_closure(const TheoryPoint& t, const Family& f, std::uint64_t depth);

/// Points isolated by some prefix cell of length <= depth, with the
/// witnessing cell word. Sound under-approximation of the isolated set.
std::vector<std::pair<TheoryPoint, std::string>> oracle_isolated(const Family& f, std::uint64_t depth);

}  // namespace theoria
