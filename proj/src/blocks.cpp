#include "theoria/blocks.hpp"

#include <algorithm>

#include "theoria/common.hpp"

namespace theoria {

TheoryPoint flip_bit(const TheoryPoint& p, std::uint64_t q) {
  std::uint64_t pre_len = p.prefix().size();
  if (q >= pre_len)
    pre_len += (q + 1 - pre_len + p.period().size() - 1) / p.period().size() * p.period().size();
  Bits pre(pre_len);
  for (std::uint64_t i = 0; i < pre_len; ++i) pre[i] = p.bit_at(i);
  pre[q] = !pre[q];
  return TheoryPoint(std::move(pre), p.period());
}

Bits window_of(const TheoryPoint& p, std::uint64_t n) {
  Bits w(n);
  for (std::uint64_t i = 0; i < n; ++i) w[i] = p.bit_at(i);
  return w;
}

// ---------------------------------------------------------------- FanBlock

TheoryPoint FanBlock::member_at(std::uint64_t i) const {
  std::uint64_t h = flip_pos(i);
  Bits pre;
  pre.reserve(h + 1 + deviation.size());
  for (std::uint64_t k = 0; k < h; ++k) pre.push_back(limit.bit_at(k));
  pre.push_back(!limit.bit_at(h));
  pre.insert(pre.end(), deviation.begin(), deviation.end());
  return TheoryPoint(std::move(pre), Bits{false});
}

std::optional<std::uint64_t> FanBlock::index_of(const TheoryPoint& p) const {
  auto f = first_difference(p, limit);
  if (!f) return std::nullopt;  // p is the limit, not an indexed member
  if (*f < offset || (*f - offset) % stride != 0) return std::nullopt;
  std::uint64_t i = (*f - offset) / stride;
  if (p == member_at(i)) return i;
  return std::nullopt;
}

// ----------------------------------------------------------- FanArrayBlock

std::uint64_t FanArrayBlock::violation_pos(std::uint64_t j, std::uint64_t i) const {
  return base.fixed_position(cantor_pair(coding, cantor_pair(j, i)));
}

TheoryPoint FanArrayBlock::fan_point(std::uint64_t j, std::uint64_t i) const {
  return flip_bit(base.dense_point(j), violation_pos(j, i));
}

bool FanArrayBlock::is_excluded(std::uint64_t q) const {
  return std::binary_search(excluded.begin(), excluded.end(), q);
}

std::optional<TheoryPoint> FanArrayBlock::point_at_violation(std::uint64_t q) const {
  auto k = base.fixed_index_of(q);
  if (!k) return std::nullopt;
  auto [c, z] = cantor_unpair(*k);
  if (c != coding) return std::nullopt;
  auto [j, i] = cantor_unpair(z);
  return fan_point(j, i);
}

// ------------------------------------------------------------- validation

void validate_block(const Block& b) {
  if (auto* fan = std::get_if<FanBlock>(&b)) {
    if (fan->stride == 0) fail(Errc::MalformedPoint, "fan stride must be >= 1");
    if (!fan->deviation.empty() && !fan->deviation.back())
      fail(Errc::Internal, "fan deviation must have trailing zeros stripped");
  } else if (auto* fa = std::get_if<FanArrayBlock>(&b)) {
    if (fa->coding == 0) fail(Errc::MalformedMask, "fan-array coding offset must be >= 1");
    if (!fa->base.period_has(MaskLetter::Fixed0) && !fa->base.period_has(MaskLetter::Fixed1))
      fail(Errc::MalformedMask, "fan-array base needs infinitely many fixed positions");
    if (!std::is_sorted(fa->excluded.begin(), fa->excluded.end()))
      fail(Errc::Internal, "fan-array exclusions must be sorted");
  } else if (auto* fs = std::get_if<FinsetBlock>(&b)) {
    if (!std::is_sorted(fs->points.begin(), fs->points.end()) ||
        std::adjacent_find(fs->points.begin(), fs->points.end()) != fs->points.end())
      fail(Errc::Internal, "finset points must be sorted and duplicate-free");
  }
}

// ------------------------------------------------------------- membership

bool block_member(const Block& b, const TheoryPoint& p) {
  if (auto* fs = std::get_if<FinsetBlock>(&b))
    return std::binary_search(fs->points.begin(), fs->points.end(), p);
  if (auto* fan = std::get_if<FanBlock>(&b)) {
    if (fan->include_limit && p == fan->limit) return true;
    return fan->index_of(p).has_value();
  }
  if (auto* cube = std::get_if<CubeBlock>(&b)) return cube->mask.contains(p);
  const auto& fa = std::get<FanArrayBlock>(b);
  auto v = fa.base.violations(p);
  if (v.periodic || v.positions.size() >= 2) return false;
  if (v.positions.empty()) return fa.include_base;
  std::uint64_t q = v.positions[0];
  if (fa.is_excluded(q)) return false;
  auto u = fa.point_at_violation(q);
  return u && *u == p;
}

// ------------------------------------------------------------ clopen count

namespace {

// Mask-consistent assignment of positions 0..m satisfying phi, by DFS over
// the free positions. Guarded against wide windows.
bool window_satisfiable(const CubeMask& mask, const Sentence& phi, std::int64_t m) {
  if (m < 0) {
    // Constant sentence: evaluate on any point, e.g. the dense origin.
    return phi.evaluate(mask.dense_point(0));
  }
  std::vector<std::uint64_t> frees;
  for (std::int64_t pos = 0; pos <= m; ++pos)
    if (mask.at(pos) == MaskLetter::Free) frees.push_back(pos);
  if (frees.size() > 20) fail(Errc::CapExceeded, "too many free coordinates in sentence window");
  Bits w(m + 1, false);
  for (std::int64_t pos = 0; pos <= m; ++pos) w[pos] = (mask.at(pos) == MaskLetter::Fixed1);
  std::uint64_t combos = std::uint64_t{1} << frees.size();
  for (std::uint64_t bits = 0; bits < combos; ++bits) {
    for (std::size_t k = 0; k < frees.size(); ++k) w[frees[k]] = (bits >> k & 1) != 0;
    // Zero tail beyond the window; phi never reads past m.
    if (phi.evaluate(TheoryPoint(w, Bits{false}))) return true;
  }
  return false;
}

}  // namespace

Trichotomy block_clopen_count(const Block& b, const Sentence& phi, std::size_t block_id) {
  std::int64_t m = phi.max_index();
  if (auto* fs = std::get_if<FinsetBlock>(&b)) {
    std::vector<TheoryPoint> hits;
    for (const auto& p : fs->points)
      if (phi.evaluate(p)) hits.push_back(p);
    return Trichotomy::finite(std::move(hits));
  }
  if (auto* fan = std::get_if<FanBlock>(&b)) {
    if (phi.evaluate(fan->limit)) return Trichotomy::infinite(block_id);
    // Members with flip position past the window share the limit's verdict.
    std::vector<TheoryPoint> hits;
    for (std::uint64_t i = 0; static_cast<std::int64_t>(fan->flip_pos(i)) <= m; ++i) {
      TheoryPoint t = fan->member_at(i);
      if (phi.evaluate(t)) hits.push_back(t);
    }
    return Trichotomy::finite(std::move(hits));
  }
  if (auto* cube = std::get_if<CubeBlock>(&b)) {
    return window_satisfiable(cube->mask, phi, m) ? Trichotomy::infinite(block_id)
                                                  : Trichotomy::empty();
  }
  const auto& fa = std::get<FanArrayBlock>(b);
  if (window_satisfiable(fa.base, phi, m)) return Trichotomy::infinite(block_id);
  // No consistent window: only fan points violating the mask inside the
  // window can satisfy phi, and each violation position codes one point.
  std::vector<TheoryPoint> hits;
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t q = fa.base.fixed_position(k);
    if (static_cast<std::int64_t>(q) > m) break;
    if (fa.is_excluded(q)) continue;
    auto u = fa.point_at_violation(q);
    if (u && phi.evaluate(*u)) hits.push_back(*u);
  }
  return Trichotomy::finite(std::move(hits));
}

// ----------------------------------------------------------- accumulation

std::vector<Block> block_acc(const Block& b) {
  if (std::holds_alternative<FinsetBlock>(b)) return {};
  if (auto* fan = std::get_if<FanBlock>(&b)) return {FinsetBlock{{fan->limit}}};
  if (auto* cube = std::get_if<CubeBlock>(&b)) return {*cube};
  return {CubeBlock{std::get<FanArrayBlock>(b).base}};
}

// ------------------------------------------------------- separation depth

std::optional<std::uint64_t> block_separation_depth(const Block& b, const TheoryPoint& p) {
  if (auto* fs = std::get_if<FinsetBlock>(&b)) {
    std::uint64_t n = 0;
    for (const auto& x : fs->points)
      if (auto f = first_difference(p, x)) n = std::max(n, *f + 1);
    return n;
  }
  if (auto* fan = std::get_if<FanBlock>(&b)) {
    if (p == fan->limit) return std::nullopt;
    if (auto idx = fan->index_of(p)) return fan->flip_pos(*idx) + 1;
    std::uint64_t f = *first_difference(p, fan->limit);
    std::uint64_t n = f + 1;
    for (std::uint64_t i = 0; fan->flip_pos(i) <= f; ++i)
      if (auto d = first_difference(p, fan->member_at(i))) n = std::max(n, *d + 1);
    return n;
  }
  if (auto* cube = std::get_if<CubeBlock>(&b)) {
    auto v = cube->mask.violations(p);
    if (v.positions.empty() && !v.periodic) return std::nullopt;
    std::uint64_t first = v.positions.empty() ? v.first_periodic : v.positions[0];
    return first + 1;
  }
  const auto& fa = std::get<FanArrayBlock>(b);
  auto v = fa.base.violations(p);
  if (v.positions.empty() && !v.periodic) return std::nullopt;  // p in the base cube
  std::uint64_t q = v.positions.empty() ? v.first_periodic : v.positions[0];
  std::uint64_t n = q + 1;
  // The lone fan point violating at q may agree with p longer.
  if (!fa.is_excluded(q)) {
    if (auto u = fa.point_at_violation(q)) {
      if (auto d = first_difference(p, *u)) n = std::max(n, *d + 1);
      // first_difference empty means p is that fan point itself.
    }
  }
  return n;
}

// --------------------------------------------------------- index analyses

IndexSet fan_indices_in_cube(const FanBlock& fan, const CubeMask& mask) {
  auto test = [&](std::uint64_t i) { return mask.contains(fan.member_at(i)); };
  auto lv = mask.violations(fan.limit);
  if (!lv.positions.empty() || lv.periodic) {
    // Members past the limit's first violation inherit it.
    std::uint64_t v = lv.positions.empty() ? lv.first_periodic : lv.positions[0];
    std::vector<std::uint64_t> hits;
    for (std::uint64_t i = 0; fan.flip_pos(i) <= v; ++i)
      if (test(i)) hits.push_back(i);
    return IndexSet::finite(std::move(hits));
  }
  if (mask.period_has(MaskLetter::Fixed1)) return IndexSet::none();  // zero tails always violate
  std::uint64_t t0 = 0;  // flip position from which the zero tail clears all Fixed1 letters
  for (std::uint64_t pos = 0; pos < mask.prefix().size(); ++pos)
    if (mask.prefix()[pos] == MaskLetter::Fixed1)
      t0 = std::max<std::uint64_t>(t0, pos > fan.deviation.size() ? pos - fan.deviation.size() : 0);
  std::uint64_t h_min = std::max<std::uint64_t>(mask.prefix().size(), t0);
  std::uint64_t i_star = fan.offset >= h_min ? 0 : (h_min - fan.offset + fan.stride - 1) / fan.stride;
  // Beyond i_star membership depends only on the flip position mod the
  // mask period (the limit is consistent, the deviation word is constant).
  return IndexSet::from_periodic_predicate(i_star, mask.period().size(), test);
}

IndexSet fan_indices_in_fan(const FanBlock& fan, const FanBlock& other) {
  if (fan.limit == other.limit) {
    Bits d1 = fan.deviation, d2 = other.deviation;  // both canonical
    IndexSet hits = IndexSet::none();
    if (d1 == d2) {
      std::uint64_t a1 = fan.stride, b1 = fan.offset, a2 = other.stride, b2 = other.offset;
      std::uint64_t i_min = b1 >= b2 ? 0 : (b2 - b1 + a1 - 1) / a1;
      hits = IndexSet::from_periodic_predicate(i_min, a2, [&](std::uint64_t i) {
        std::uint64_t h = a1 * i + b1;
        return h >= b2 && (h - b2) % a2 == 0;
      });
    }
    return hits;  // the shared limit is never an indexed member
  }
  // A common point deviates from one limit no later than the limits'
  // first difference, so both flip ranges below it cover everything.
  std::uint64_t p0 = *first_difference(fan.limit, other.limit);
  std::vector<std::uint64_t> hits;
  for (std::uint64_t i = 0; fan.flip_pos(i) <= p0; ++i) {
    TheoryPoint t = fan.member_at(i);
    if (other.index_of(t) || (other.include_limit && t == other.limit)) hits.push_back(i);
  }
  for (std::uint64_t j = 0; other.flip_pos(j) <= p0; ++j) {
    if (auto i = fan.index_of(other.member_at(j))) hits.push_back(*i);
  }
  if (other.include_limit) {
    if (auto i = fan.index_of(other.limit)) hits.push_back(*i);
  }
  return IndexSet::finite(std::move(hits));
}

// ------------------------------------------------------------------- DSL

std::string block_dsl(const Block& b) {
  if (auto* fs = std::get_if<FinsetBlock>(&b)) {
    std::string s = "fin{";
    for (std::size_t i = 0; i < fs->points.size(); ++i) {
      if (i) s += ", ";
      s += fs->points[i].str();
    }
    return s + "}";
  }
  if (auto* fan = std::get_if<FanBlock>(&b)) {
    std::string s = "fan(limit=" + fan->limit.str() + ", stride=" + std::to_string(fan->stride) +
                    ", offset=" + std::to_string(fan->offset) + ", dev=" + bits_to_string(fan->deviation);
    if (fan->include_limit) s += ", withlimit";
    return s + ")";
  }
  if (auto* cube = std::get_if<CubeBlock>(&b)) return "cube(mask=" + cube->mask.str() + ")";
  const auto& fa = std::get<FanArrayBlock>(b);
  std::string s = "fanarray(base=cube(mask=" + fa.base.str() + "), c=" + std::to_string(fa.coding);
  if (fa.include_base) s += ", withbase";
  if (!fa.excluded.empty()) {
    s += ", excl={";
    for (std::size_t i = 0; i < fa.excluded.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(fa.excluded[i]);
    }
    s += "}";
  }
  return s + ")";
}

}  // namespace theoria
