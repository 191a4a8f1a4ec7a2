#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "theoria/point.hpp"

namespace theoria {

/// Exact cardinality classification of a clopen slice of a family:
/// empty, finite with the full duplicate-free witness list, or infinite
/// with the id of a block certifying infinitude.
struct Trichotomy {
  enum class Kind { Empty, Finite, Infinite } kind = Kind::Empty;
  std::vector<TheoryPoint> points;  // Finite only
  std::size_t witness_block = 0;    // Infinite only

  static Trichotomy empty() { return {}; }
  static Trichotomy finite(std::vector<TheoryPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return {};
    return {Kind::Finite, std::move(pts), 0};
  }
  static Trichotomy infinite(std::size_t block_id) { return {Kind::Infinite, {}, block_id}; }

  bool is_empty() const { return kind == Kind::Empty; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }

  bool contains(const TheoryPoint& p) const {
    return is_finite() && std::binary_search(points.begin(), points.end(), p);
  }

  /// Set-union merge: any Infinite dominates, finite lists deduplicate.
  static Trichotomy merge(Trichotomy a, const Trichotomy& b) {
    if (a.is_infinite()) return a;
    if (b.is_infinite()) return b;
    a.points.insert(a.points.end(), b.points.begin(), b.points.end());
    return finite(std::move(a.points));
  }
};

}  // namespace theoria
