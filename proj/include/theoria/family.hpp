#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theoria/blocks.hpp"

namespace theoria {

/// Finite union of blocks in normal form: at most one finset (merged,
/// no point of it belongs to another block), identical parameter blocks
/// merged, fan limits flagged at most once per limit value, blocks in a
/// canonical order.
class Family {
 public:
  Family() = default;  // empty family
  explicit Family(std::vector<Block> blocks, std::optional<std::string> name = std::nullopt);

  static Family of_points(std::vector<TheoryPoint> pts, std::optional<std::string> name = std::nullopt);

  const std::vector<Block>& blocks() const { return blocks_; }
  const std::optional<std::string>& name() const { return name_; }
  Family named(std::string n) const;

  bool is_empty() const { return blocks_.empty(); }
  /// True when the denotation is a finite set (finset blocks only).
  bool is_finite() const;
  std::vector<TheoryPoint> finite_points() const;  // requires is_finite()

  bool operator==(const Family& o) const { return blocks_ == o.blocks_; }

 private:
  std::vector<Block> blocks_;
  std::optional<std::string> name_;
  void normalize();
};

bool member(const Family& f, const TheoryPoint& p);
Trichotomy family_count(const Family& f, const Sentence& phi);
Trichotomy clopen_count(const Block& b, const Sentence& phi);

Family family_union(const Family& a, const Family& b);
/// Exact symbolic intersection over the supported block-pair table;
/// UnsupportedIntersection outside it, never an approximation.
Family intersect(const Family& a, const Family& b);
/// Exact containment decision over the same supported table.
bool family_subset(const Family& a, const Family& b);
bool family_eq(const Family& a, const Family& b);
/// Exact difference where representable (discrete families and the block
/// pairs the table supports); UnsupportedComparison otherwise.
Family family_difference(const Family& a, const Family& b);

std::string family_dsl(const Family& f);
/// Compact display label: the name when set, else the DSL text.
std::string family_label(const Family& f);

}  // namespace theoria
