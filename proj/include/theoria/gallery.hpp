#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "theoria/family.hpp"

namespace theoria {

/// Canonical constructions used as fixtures everywhere: named families
/// plus a frozen record of expected engine verdicts.
struct GalleryCase {
  std::string name;
  std::string title;
  std::vector<std::pair<std::string, Family>> families;
  /// key -> expected value, rendered as strings ("true", "4", "fin{~0}").
  std::vector<std::pair<std::string, std::string>> expected;
};

std::vector<std::string> gallery_names();
GalleryCase make_gallery_case(const std::string& name);  // UndefinedName

GalleryCase make_fan_pair();                    // "remark2.4"
GalleryCase make_intersection_counterexample(); // "remark2.2"
GalleryCase make_singleton_union_case();        // "remark2.3"

/// Recomputes every expected verdict with the live engine; returns the
/// mismatches as "key: expected X, got Y" lines.
std::vector<std::string> gallery_mismatches(const GalleryCase& c, std::uint64_t oracle_depth = 12);

/// Reproducible pseudo-random families. The plain generator draws finite
/// sets, fans and cubes (the block kinds whose pairwise operations are all
/// inside the supported table); the lgs variant omits cubes so the closure
/// has a least generating set.
Family make_random_family(std::uint64_t seed, std::size_t size_budget);
Family make_random_lgs_family(std::uint64_t seed, std::size_t size_budget);
TheoryPoint make_random_point(std::mt19937_64& rng);

/// Every canonical point with |prefix| + |period| <= max_len.
std::vector<TheoryPoint> probe_points(std::size_t max_len);

}  // namespace theoria
