#include "theoria/family.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "theoria/common.hpp"

namespace theoria {

namespace {

int block_rank(const Block& b) { return static_cast<int>(b.index()); }

struct BlockKey {
  int rank;
  std::string dsl;
  bool operator<(const BlockKey& o) const { return std::tie(rank, dsl) < std::tie(o.rank, o.dsl); }
};

BlockKey key_of(const Block& b) { return {block_rank(b), block_dsl(b)}; }

Bits strip_trailing_zeros(Bits d) {
  while (!d.empty() && !d.back()) d.pop_back();
  return d;
}

}  // namespace

Family::Family(std::vector<Block> blocks, std::optional<std::string> name)
    : blocks_(std::move(blocks)), name_(std::move(name)) {
  normalize();
}

Family Family::of_points(std::vector<TheoryPoint> pts, std::optional<std::string> name) {
  return Family({FinsetBlock{std::move(pts)}}, std::move(name));
}

Family Family::named(std::string n) const {
  Family f = *this;
  f.name_ = std::move(n);
  return f;
}

bool Family::is_finite() const {
  for (const auto& b : blocks_)
    if (!std::holds_alternative<FinsetBlock>(b)) return false;
  return true;
}

std::vector<TheoryPoint> Family::finite_points() const {
  std::vector<TheoryPoint> out;
  for (const auto& b : blocks_) {
    const auto* fs = std::get_if<FinsetBlock>(&b);
    if (!fs) fail(Errc::Internal, "finite_points on an infinite family");
    out.insert(out.end(), fs->points.begin(), fs->points.end());
  }
  return out;
}

void Family::normalize() {
  std::vector<TheoryPoint> loose;
  std::vector<FanBlock> fans;
  std::vector<CubeBlock> cubes;
  std::vector<FanArrayBlock> arrays;

  for (auto& b : blocks_) {
    if (auto* fs = std::get_if<FinsetBlock>(&b)) {
      loose.insert(loose.end(), fs->points.begin(), fs->points.end());
    } else if (auto* fan = std::get_if<FanBlock>(&b)) {
      fan->deviation = strip_trailing_zeros(std::move(fan->deviation));
      fans.push_back(std::move(*fan));
    } else if (auto* cube = std::get_if<CubeBlock>(&b)) {
      cubes.push_back(std::move(*cube));
    } else {
      auto& fa = std::get<FanArrayBlock>(b);
      std::sort(fa.excluded.begin(), fa.excluded.end());
      fa.excluded.erase(std::unique(fa.excluded.begin(), fa.excluded.end()), fa.excluded.end());
      arrays.push_back(std::move(fa));
    }
  }

  // Merge blocks with identical parameters (the family is their union).
  std::vector<FanBlock> fans2;
  for (auto& f : fans) {
    auto same = std::find_if(fans2.begin(), fans2.end(), [&](const FanBlock& g) {
      return g.limit == f.limit && g.stride == f.stride && g.offset == f.offset &&
             g.deviation == f.deviation;
    });
    if (same != fans2.end())
      same->include_limit |= f.include_limit;
    else
      fans2.push_back(std::move(f));
  }
  std::vector<CubeBlock> cubes2;
  for (auto& c : cubes)
    if (std::find_if(cubes2.begin(), cubes2.end(),
                     [&](const CubeBlock& d) { return d.mask == c.mask; }) == cubes2.end())
      cubes2.push_back(std::move(c));
  std::vector<FanArrayBlock> arrays2;
  for (auto& a : arrays) {
    auto same = std::find_if(arrays2.begin(), arrays2.end(), [&](const FanArrayBlock& b2) {
      return b2.base == a.base && b2.coding == a.coding;
    });
    if (same != arrays2.end()) {
      same->include_base |= a.include_base;
      std::vector<std::uint64_t> common;
      std::set_intersection(same->excluded.begin(), same->excluded.end(), a.excluded.begin(),
                            a.excluded.end(), std::back_inserter(common));
      same->excluded = std::move(common);
    } else {
      arrays2.push_back(std::move(a));
    }
  }

  std::vector<Block> others;
  for (auto& f : fans2) others.emplace_back(std::move(f));
  for (auto& c : cubes2) others.emplace_back(std::move(c));
  for (auto& a : arrays2) others.emplace_back(std::move(a));

  // A fan limit is listed (flagged) at most once per limit value.
  std::set<TheoryPoint> flagged;
  for (auto& b : others) {
    auto* fan = std::get_if<FanBlock>(&b);
    if (!fan || !fan->include_limit) continue;
    if (!flagged.insert(fan->limit).second) fan->include_limit = false;
  }

  // Loose points absorb into blocks: members are dropped, a point equal to
  // an unflagged fan limit becomes that fan's flag.
  std::sort(loose.begin(), loose.end());
  loose.erase(std::unique(loose.begin(), loose.end()), loose.end());
  std::vector<TheoryPoint> kept;
  for (const auto& p : loose) {
    bool absorbed = false;
    for (auto& b : others) {
      if (block_member(b, p)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) {
      for (auto& b : others) {
        auto* fan = std::get_if<FanBlock>(&b);
        if (fan && !fan->include_limit && fan->limit == p && !flagged.count(p)) {
          fan->include_limit = true;
          flagged.insert(p);
          absorbed = true;
          break;
        }
      }
    }
    if (!absorbed) kept.push_back(p);
  }

  blocks_.clear();
  if (!kept.empty()) blocks_.emplace_back(FinsetBlock{std::move(kept)});
  std::sort(others.begin(), others.end(),
            [](const Block& a, const Block& b) { return key_of(a) < key_of(b); });
  for (auto& b : others) blocks_.push_back(std::move(b));
  for (const auto& b : blocks_) validate_block(b);
}

bool member(const Family& f, const TheoryPoint& p) {
  for (const auto& b : f.blocks())
    if (block_member(b, p)) return true;
  return false;
}

Trichotomy clopen_count(const Block& b, const Sentence& phi) { return block_clopen_count(b, phi); }

Trichotomy family_count(const Family& f, const Sentence& phi) {
  Trichotomy acc = Trichotomy::empty();
  for (std::size_t id = 0; id < f.blocks().size(); ++id) {
    acc = Trichotomy::merge(std::move(acc), block_clopen_count(f.blocks()[id], phi, id));
    if (acc.is_infinite()) return acc;
  }
  return acc;
}

Family family_union(const Family& a, const Family& b) {
  std::vector<Block> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return Family(std::move(blocks));
}

// ------------------------------------------------------- mask pair helpers

namespace {

struct MaskConflicts {
  std::vector<std::uint64_t> positions;  // pre-periodic conflicts
  bool periodic = false;
  bool any() const { return periodic || !positions.empty(); }
  std::size_t count_at_least_3() const { return periodic || positions.size() >= 3; }
};

MaskConflicts mask_conflicts(const CubeMask& a, const CubeMask& b) {
  MaskConflicts out;
  std::uint64_t pre = std::max(a.prefix().size(), b.prefix().size());
  std::uint64_t l = lcm_guarded(a.period().size(), b.period().size());
  for (std::uint64_t i = 0; i < pre + l; ++i) {
    MaskLetter x = a.at(i), y = b.at(i);
    if (x == MaskLetter::Free || y == MaskLetter::Free || x == y) continue;
    if (i < pre)
      out.positions.push_back(i);
    else
      out.periodic = true;
  }
  return out;
}

// Positionwise meet of two masks: empty on conflict, a cube when free
// positions persist in the joint period, else the finite set of points.
struct MaskMerge {
  bool empty = false;
  std::optional<CubeMask> cube;
  std::vector<TheoryPoint> points;
};

MaskMerge merge_masks(const CubeMask& a, const CubeMask& b) {
  MaskMerge out;
  std::uint64_t pre = std::max(a.prefix().size(), b.prefix().size());
  std::uint64_t l = lcm_guarded(a.period().size(), b.period().size());
  MaskWord prefix(pre), period(l);
  for (std::uint64_t i = 0; i < pre + l; ++i) {
    MaskLetter x = a.at(i), y = b.at(i);
    MaskLetter m;
    if (x == y)
      m = x;
    else if (x == MaskLetter::Free)
      m = y;
    else if (y == MaskLetter::Free)
      m = x;
    else {
      out.empty = true;
      return out;
    }
    (i < pre ? prefix[i] : period[i - pre]) = m;
  }
  if (std::find(period.begin(), period.end(), MaskLetter::Free) != period.end()) {
    out.cube = CubeMask(std::move(prefix), std::move(period));
    return out;
  }
  // Finitely many free coordinates: enumerate the points.
  std::vector<std::uint64_t> frees;
  for (std::uint64_t i = 0; i < prefix.size(); ++i)
    if (prefix[i] == MaskLetter::Free) frees.push_back(i);
  if (frees.size() > 16) fail(Errc::CapExceeded, "cube intersection has too many free coordinates");
  Bits pbits(prefix.size(), false), per(period.size(), false);
  for (std::uint64_t i = 0; i < prefix.size(); ++i) pbits[i] = (prefix[i] == MaskLetter::Fixed1);
  for (std::uint64_t i = 0; i < period.size(); ++i) per[i] = (period[i] == MaskLetter::Fixed1);
  for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << frees.size()); ++assign) {
    Bits w = pbits;
    for (std::size_t k = 0; k < frees.size(); ++k) w[frees[k]] = (assign >> k & 1) != 0;
    out.points.emplace_back(w, per);
  }
  return out;
}

// C subseteq union(cubes)? Exact: a C-point avoiding every cube needs a
// violation choice per cube; choices at distinct positions are independent,
// so only cubes with finitely many violation options constrain the search.
bool cube_covered_by(const CubeMask& c, const std::vector<CubeMask>& cubes) {
  if (cubes.empty()) return false;
  std::uint64_t pre = c.prefix().size();
  std::uint64_t l = c.period().size();
  for (const auto& m : cubes) {
    pre = std::max(pre, static_cast<std::uint64_t>(m.prefix().size()));
    l = lcm_guarded(l, m.period().size());
  }
  std::uint64_t horizon = pre + l;
  std::vector<std::vector<std::pair<std::uint64_t, bool>>> constraints;
  for (const auto& m : cubes) {
    bool auto_violated = false;
    bool infinite_options = false;
    std::vector<std::pair<std::uint64_t, bool>> options;
    for (std::uint64_t i = 0; i < horizon && !auto_violated; ++i) {
      MaskLetter cl = c.at(i), ml = m.at(i);
      if (cl != MaskLetter::Free && ml != MaskLetter::Free && cl != ml) auto_violated = true;
      if (cl == MaskLetter::Free && ml != MaskLetter::Free) {
        options.emplace_back(i, ml == MaskLetter::Fixed0);  // violate with the opposite value
        if (i >= pre) infinite_options = true;
      }
    }
    if (auto_violated) continue;             // m covers nothing of c
    if (options.empty()) return true;        // c subseteq m
    if (infinite_options) continue;          // always violable at fresh positions
    constraints.push_back(std::move(options));
  }
  // Does a conflict-free choice exist (same position may repeat only with
  // the same value)? If yes, some c-point escapes every cube.
  std::map<std::uint64_t, bool> chosen;
  std::function<bool(std::size_t)> assign = [&](std::size_t k) {
    if (k == constraints.size()) return true;
    for (auto [pos, val] : constraints[k]) {
      auto it = chosen.find(pos);
      if (it != chosen.end()) {
        if (it->second == val && assign(k + 1)) return true;
        continue;
      }
      chosen[pos] = val;
      if (assign(k + 1)) return true;
      chosen.erase(pos);
    }
    return false;
  };
  return !assign(0);
}

// Subset of the fan's members plus optionally its limit, as blocks.
std::vector<Block> blocks_from_fan_indices(const FanBlock& fan, const IndexSet& idx, bool with_limit) {
  std::vector<Block> out;
  std::vector<TheoryPoint> pts;
  if (idx.finite_only()) {
    for (auto i : idx.finite_members()) pts.push_back(fan.member_at(i));
    if (with_limit) pts.push_back(fan.limit);
    if (!pts.empty()) out.emplace_back(FinsetBlock{std::move(pts)});
    return out;
  }
  for (auto i : idx.members_below(idx.horizon())) pts.push_back(fan.member_at(i));
  if (!pts.empty()) out.emplace_back(FinsetBlock{std::move(pts)});
  bool first = true;
  for (auto [first_i, step] : idx.progressions()) {
    FanBlock sub{fan.limit, fan.stride * step, fan.stride * first_i + fan.offset, fan.deviation,
                 with_limit && first};
    first = false;
    out.emplace_back(std::move(sub));
  }
  return out;
}

std::vector<CubeMask> cube_parts(const Family& f) {
  std::vector<CubeMask> out;
  for (const auto& b : f.blocks()) {
    if (auto* cube = std::get_if<CubeBlock>(&b)) out.push_back(cube->mask);
    if (auto* fa = std::get_if<FanArrayBlock>(&b))
      if (fa->include_base) out.push_back(fa->base);
  }
  return out;
}

bool has_fanarray(const Family& f) {
  for (const auto& b : f.blocks())
    if (std::holds_alternative<FanArrayBlock>(b)) return true;
  return false;
}

[[noreturn]] void unsupported_pair(Errc errc, const Block& a, const Block& b) {
  fail(errc, "unsupported block pair: " + block_dsl(a) + " vs " + block_dsl(b));
}

// --------------------------------------------------- pairwise intersection

std::vector<Block> intersect_blocks(const Block& ba, const Block& bb) {
  // Finset against anything: filter by membership.
  if (auto* fs = std::get_if<FinsetBlock>(&ba)) {
    std::vector<TheoryPoint> pts;
    for (const auto& p : fs->points)
      if (block_member(bb, p)) pts.push_back(p);
    if (pts.empty()) return {};
    return {FinsetBlock{std::move(pts)}};
  }
  if (std::holds_alternative<FinsetBlock>(bb)) return intersect_blocks(bb, ba);

  if (auto* f1 = std::get_if<FanBlock>(&ba)) {
    if (auto* f2 = std::get_if<FanBlock>(&bb)) {
      IndexSet common = fan_indices_in_fan(*f1, *f2);
      bool with_limit;
      if (f1->limit == f2->limit) {
        with_limit = f1->include_limit && f2->include_limit;
      } else {
        with_limit = f1->include_limit &&
                     (f2->index_of(f1->limit) || (f2->include_limit && f1->limit == f2->limit));
      }
      return blocks_from_fan_indices(*f1, common, with_limit);
    }
    if (auto* cube = std::get_if<CubeBlock>(&bb)) {
      IndexSet inside = fan_indices_in_cube(*f1, cube->mask);
      bool with_limit = f1->include_limit && cube->mask.contains(f1->limit);
      return blocks_from_fan_indices(*f1, inside, with_limit);
    }
    unsupported_pair(Errc::UnsupportedIntersection, ba, bb);
  }
  if (std::holds_alternative<FanBlock>(bb)) return intersect_blocks(bb, ba);

  if (auto* c1 = std::get_if<CubeBlock>(&ba)) {
    if (auto* c2 = std::get_if<CubeBlock>(&bb)) {
      MaskMerge m = merge_masks(c1->mask, c2->mask);
      if (m.empty) return {};
      if (m.cube) return {CubeBlock{*m.cube}};
      if (m.points.empty()) return {};
      return {FinsetBlock{std::move(m.points)}};
    }
    const auto& fa = std::get<FanArrayBlock>(bb);
    if (fa.base == c1->mask) {
      if (fa.include_base) return {CubeBlock{fa.base}};
      return {};
    }
    MaskConflicts conf = mask_conflicts(fa.base, c1->mask);
    if (!conf.any()) unsupported_pair(Errc::UnsupportedIntersection, ba, bb);
    // Disjoint bases: a fan point can enter the cube only by flipping the
    // single conflict position, and each position codes at most one point.
    if (conf.periodic || conf.positions.size() >= 2) return {};
    std::uint64_t p_star = conf.positions[0];
    if (fa.is_excluded(p_star)) return {};
    auto u = fa.point_at_violation(p_star);
    if (u && c1->mask.contains(*u)) return {FinsetBlock{{*u}}};
    return {};
  }
  if (std::holds_alternative<CubeBlock>(bb)) return intersect_blocks(bb, ba);

  const auto& a = std::get<FanArrayBlock>(ba);
  const auto& b = std::get<FanArrayBlock>(bb);
  if (a.base == b.base) {
    if (a.coding == b.coding) {
      FanArrayBlock c = a;
      c.include_base = a.include_base && b.include_base;
      std::vector<std::uint64_t> excl;
      std::set_union(a.excluded.begin(), a.excluded.end(), b.excluded.begin(), b.excluded.end(),
                     std::back_inserter(excl));
      c.excluded = std::move(excl);
      return {std::move(c)};
    }
    // Distinct codings use disjoint violation positions.
    if (a.include_base && b.include_base) return {CubeBlock{a.base}};
    return {};
  }
  MaskConflicts conf = mask_conflicts(a.base, b.base);
  if (conf.count_at_least_3()) return {};
  unsupported_pair(Errc::UnsupportedIntersection, ba, bb);
}

}  // namespace

Family intersect(const Family& a, const Family& b) {
  std::vector<Block> blocks;
  for (const auto& ba : a.blocks())
    for (const auto& bb : b.blocks()) {
      auto part = intersect_blocks(ba, bb);
      blocks.insert(blocks.end(), part.begin(), part.end());
    }
  return Family(std::move(blocks));
}

// ----------------------------------------------------------------- subset

namespace {

// Which fan members lie in the family? nullopt when fan-array blocks make
// the capture set unrepresentable.
std::optional<IndexSet> fan_captured_by(const FanBlock& fan, const Family& f,
                                        bool* saw_fanarray = nullptr) {
  IndexSet captured = IndexSet::none();
  bool arrays = false;
  for (const auto& b : f.blocks()) {
    if (auto* fs = std::get_if<FinsetBlock>(&b)) {
      std::vector<std::uint64_t> hits;
      for (const auto& p : fs->points)
        if (auto i = fan.index_of(p)) hits.push_back(*i);
      captured = captured.unite(IndexSet::finite(std::move(hits)));
    } else if (auto* f2 = std::get_if<FanBlock>(&b)) {
      captured = captured.unite(fan_indices_in_fan(fan, *f2));
    } else if (auto* cube = std::get_if<CubeBlock>(&b)) {
      captured = captured.unite(fan_indices_in_cube(fan, cube->mask));
    } else {
      arrays = true;  // handled pointwise by the caller when the residue is finite
    }
  }
  if (saw_fanarray) *saw_fanarray = arrays;
  return captured;
}

bool fan_subset_of(const FanBlock& fan, const Family& f) {
  bool arrays = false;
  IndexSet captured = *fan_captured_by(fan, f, &arrays);
  IndexSet residual = captured.complement();
  if (!residual.finite_only()) {
    if (arrays)
      fail(Errc::UnsupportedComparison,
           "fan containment against fan-array families is outside the supported table");
    return false;
  }
  for (auto i : residual.finite_members())
    if (!member(f, fan.member_at(i))) return false;
  if (fan.include_limit && !member(f, fan.limit)) return false;
  return true;
}

bool block_subset_of(const Block& b, const Family& f) {
  if (auto* fs = std::get_if<FinsetBlock>(&b)) {
    for (const auto& p : fs->points)
      if (!member(f, p)) return false;
    return true;
  }
  if (auto* fan = std::get_if<FanBlock>(&b)) return fan_subset_of(*fan, f);
  if (auto* cube = std::get_if<CubeBlock>(&b)) {
    // Countable parts never cover a chunk of a perfect set, so only the
    // cube-like parts of f matter.
    return cube_covered_by(cube->mask, cube_parts(f));
  }
  const auto& fa = std::get<FanArrayBlock>(b);
  const FanArrayBlock* mate = nullptr;
  for (const auto& ob : f.blocks()) {
    auto* other = std::get_if<FanArrayBlock>(&ob);
    if (other && other->base == fa.base && other->coding == fa.coding) {
      mate = other;
      break;
    }
  }
  if (fa.include_base && !cube_covered_by(fa.base, cube_parts(f))) return false;
  if (mate) {
    // Only the mate's extra exclusions can be missing.
    for (auto q : mate->excluded) {
      if (fa.is_excluded(q)) continue;
      auto u = fa.point_at_violation(q);
      if (u && !member(f, *u)) return false;
    }
    return true;
  }
  // Without a matching array the other supported blocks capture at most
  // finitely many fan points, so containment fails; make sure the blocks
  // are ones the table can reason about before answering.
  for (const auto& ob : f.blocks()) {
    if (std::holds_alternative<FinsetBlock>(ob)) continue;
    if (std::holds_alternative<FanBlock>(ob)) unsupported_pair(Errc::UnsupportedComparison, b, ob);
    if (auto* cube = std::get_if<CubeBlock>(&ob)) {
      if (cube->mask == fa.base) continue;
      if (mask_conflicts(fa.base, cube->mask).any()) continue;
      unsupported_pair(Errc::UnsupportedComparison, b, ob);
    }
    if (auto* other = std::get_if<FanArrayBlock>(&ob)) {
      if (other->base == fa.base) continue;
      if (mask_conflicts(fa.base, other->base).count_at_least_3()) continue;
      unsupported_pair(Errc::UnsupportedComparison, b, ob);
    }
  }
  // Witness: some fan point escapes every right-hand block.
  std::size_t inspected = 0;
  for (std::uint64_t k = 0; inspected < 64; ++k) {
    auto [c, z] = cantor_unpair(k);
    if (c != fa.coding) continue;
    std::uint64_t q = fa.base.fixed_position(k);
    if (fa.is_excluded(q)) continue;
    ++inspected;
    auto [j, i] = cantor_unpair(z);
    if (!member(f, fa.fan_point(j, i))) return false;
  }
  fail(Errc::UnsupportedComparison,
       "fan-array containment witness search exhausted without a decision");
}

}  // namespace

bool family_subset(const Family& a, const Family& b) {
  for (const auto& blk : a.blocks())
    if (!block_subset_of(blk, b)) return false;
  return true;
}

bool family_eq(const Family& a, const Family& b) {
  if (a == b) return true;  // canonical structural fast path
  return family_subset(a, b) && family_subset(b, a);
}

// -------------------------------------------------------------- difference

namespace {

std::vector<Block> block_difference(const Block& blk, const Family& f) {
  if (auto* fs = std::get_if<FinsetBlock>(&blk)) {
    std::vector<TheoryPoint> keep;
    for (const auto& p : fs->points)
      if (!member(f, p)) keep.push_back(p);
    if (keep.empty()) return {};
    return {FinsetBlock{std::move(keep)}};
  }
  if (auto* fan = std::get_if<FanBlock>(&blk)) {
    bool arrays = false;
    IndexSet captured = *fan_captured_by(*fan, f, &arrays);
    IndexSet residual = captured.complement();
    if (!residual.finite_only() && arrays)
      fail(Errc::UnsupportedComparison,
           "fan difference against fan-array families is outside the supported table");
    if (residual.finite_only()) {
      std::vector<std::uint64_t> keep;
      for (auto i : residual.finite_members())
        if (!member(f, fan->member_at(i))) keep.push_back(i);
      residual = IndexSet::finite(std::move(keep));
    }
    bool with_limit = fan->include_limit && !member(f, fan->limit);
    return blocks_from_fan_indices(*fan, residual, with_limit);
  }
  if (auto* cube = std::get_if<CubeBlock>(&blk)) {
    if (cube_covered_by(cube->mask, cube_parts(f))) return {};
    bool touched = false;
    for (const auto& ob : f.blocks())
      if (!intersect_blocks(blk, ob).empty()) touched = true;
    if (!touched) return {blk};
    fail(Errc::UnsupportedComparison, "partial cube difference is not representable");
  }
  const auto& fa = std::get<FanArrayBlock>(blk);
  const FanArrayBlock* mate = nullptr;
  for (const auto& ob : f.blocks()) {
    if (auto* other = std::get_if<FanArrayBlock>(&ob)) {
      if (other->base == fa.base && other->coding == fa.coding) {
        mate = other;
      } else if (other->base == fa.base) {
        continue;  // disjoint fan sets, nothing removed
      } else if (mask_conflicts(fa.base, other->base).count_at_least_3()) {
        continue;
      } else {
        unsupported_pair(Errc::UnsupportedComparison, blk, ob);
      }
    } else if (std::holds_alternative<FanBlock>(ob)) {
      unsupported_pair(Errc::UnsupportedComparison, blk, ob);
    }
  }
  std::vector<Block> out;
  if (mate) {
    // Leftover fan points are the mate's extra exclusions.
    std::vector<TheoryPoint> keep;
    for (auto q : mate->excluded) {
      if (fa.is_excluded(q)) continue;
      auto u = fa.point_at_violation(q);
      if (u && !member(f, *u)) keep.push_back(*u);
    }
    if (!keep.empty()) out.emplace_back(FinsetBlock{std::move(keep)});
  } else {
    FanArrayBlock res = fa;
    res.include_base = false;
    std::set<std::uint64_t> excl(fa.excluded.begin(), fa.excluded.end());
    for (const auto& ob : f.blocks()) {
      if (auto* fs = std::get_if<FinsetBlock>(&ob)) {
        for (const auto& p : fs->points) {
          auto v = fa.base.violations(p);
          if (v.positions.size() == 1 && !v.periodic) {
            auto u = fa.point_at_violation(v.positions[0]);
            if (u && *u == p) excl.insert(v.positions[0]);
          }
        }
      } else if (auto* cube = std::get_if<CubeBlock>(&ob)) {
        if (cube->mask == fa.base) continue;  // removes base points only
        MaskConflicts conf = mask_conflicts(fa.base, cube->mask);
        if (!conf.any()) unsupported_pair(Errc::UnsupportedComparison, blk, ob);
        if (!conf.periodic && conf.positions.size() == 1) {
          auto u = fa.point_at_violation(conf.positions[0]);
          if (u && cube->mask.contains(*u)) excl.insert(conf.positions[0]);
        }
      }
    }
    res.excluded.assign(excl.begin(), excl.end());
    out.emplace_back(std::move(res));
  }
  if (fa.include_base && !cube_covered_by(fa.base, cube_parts(f))) {
    bool touched = false;
    for (const auto& ob : f.blocks())
      if (!intersect_blocks(Block{CubeBlock{fa.base}}, ob).empty()) touched = true;
    if (touched) fail(Errc::UnsupportedComparison, "partial base-cube difference is not representable");
    out.emplace_back(CubeBlock{fa.base});
  }
  return out;
}

}  // namespace

Family family_difference(const Family& a, const Family& b) {
  std::vector<Block> blocks;
  for (const auto& blk : a.blocks()) {
    auto part = block_difference(blk, b);
    blocks.insert(blocks.end(), part.begin(), part.end());
  }
  return Family(std::move(blocks));
}

// ------------------------------------------------------------------- text

std::string family_dsl(const Family& f) {
  if (f.is_empty()) return "fin{}";
  std::string out = block_dsl(f.blocks()[0]);
  for (std::size_t i = 1; i < f.blocks().size(); ++i)
    out = "union(" + out + ", " + block_dsl(f.blocks()[i]) + ")";
  return out;
}

std::string family_label(const Family& f) {
  if (f.name()) return *f.name();
  return family_dsl(f);
}

}  // namespace theoria
