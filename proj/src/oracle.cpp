#include "theoria/oracle.hpp"

#include <algorithm>
#include <set>

#include "theoria/common.hpp"

namespace theoria {

namespace {

std::string word_str(const Bits& w) { return bits_to_string(w); }

// All mask-consistent windows of the given length, by DFS over free slots.
void consistent_windows(const CubeMask& mask, std::uint64_t n, std::vector<std::string>& out) {
  std::uint64_t frees = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    if (mask.at(i) == MaskLetter::Free) ++frees;
  if (frees > 20) fail(Errc::CapExceeded, "projection cell count exceeds the sparse guard");
  std::string w(n, '0');
  std::vector<std::uint64_t> free_pos;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (mask.at(i) == MaskLetter::Free)
      free_pos.push_back(i);
    else if (mask.at(i) == MaskLetter::Fixed1)
      w[i] = '1';
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free_pos.size()); ++bits) {
    for (std::size_t k = 0; k < free_pos.size(); ++k)
      w[free_pos[k]] = (bits >> k & 1) ? '1' : '0';
    out.push_back(w);
  }
}

// Fan-array fan points whose violation position is below n, decoded.
std::vector<TheoryPoint> array_points_below(const FanArrayBlock& fa, std::uint64_t n) {
  std::vector<TheoryPoint> out;
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t q = fa.base.fixed_position(k);
    if (q >= n) break;
    if (fa.is_excluded(q)) continue;
    auto [c, z] = cantor_unpair(k);
    if (c != fa.coding) continue;
    auto [j, i] = cantor_unpair(z);
    out.push_back(fa.fan_point(j, i));
  }
  return out;
}

void add_point(std::map<std::string, Trichotomy>& cells, const std::string& w, const TheoryPoint& p) {
  cells[w] = Trichotomy::merge(cells[w], Trichotomy::finite({p}));
}

void mark_infinite(std::map<std::string, Trichotomy>& cells, const std::string& w, std::size_t id) {
  cells[w] = Trichotomy::infinite(id);
}

std::map<std::string, Trichotomy> project_block(const Block& b, std::uint64_t n, std::size_t id) {
  std::map<std::string, Trichotomy> cells;
  if (auto* fs = std::get_if<FinsetBlock>(&b)) {
    for (const auto& p : fs->points) add_point(cells, word_str(window_of(p, n)), p);
    return cells;
  }
  if (auto* fan = std::get_if<FanBlock>(&b)) {
    // Members flipping past the window crowd into the limit's cell.
    for (std::uint64_t i = 0; fan->flip_pos(i) < n; ++i) {
      TheoryPoint t = fan->member_at(i);
      add_point(cells, word_str(window_of(t, n)), t);
    }
    mark_infinite(cells, word_str(window_of(fan->limit, n)), id);
    return cells;
  }
  if (auto* cube = std::get_if<CubeBlock>(&b)) {
    std::vector<std::string> ws;
    consistent_windows(cube->mask, n, ws);
    for (auto& w : ws) mark_infinite(cells, w, id);
    return cells;
  }
  const auto& fa = std::get<FanArrayBlock>(b);
  for (const auto& u : array_points_below(fa, n)) add_point(cells, word_str(window_of(u, n)), u);
  // Every consistent window is shared by infinitely many fan points (and
  // the base when included).
  std::vector<std::string> ws;
  consistent_windows(fa.base, n, ws);
  for (auto& w : ws) mark_infinite(cells, w, id);
  return cells;
}

}  // namespace

Trichotomy DepthProjection::cell(const std::string& word) const {
  auto it = cells.find(word);
  return it == cells.end() ? Trichotomy::empty() : it->second;
}

std::string DepthProjection::dump() const {
  std::string out;
  for (const auto& [w, tri] : cells) {
    out += w;
    out += '\t';
    if (tri.is_empty())
      out += "EMPTY";
    else if (tri.is_finite())
      out += "FINITE:" + std::to_string(tri.points.size());
    else
      out += "INF";
    out += '\n';
  }
  return out;
}

DepthProjection project(const Family& f, std::uint64_t depth, par::Mode mode) {
  if (depth > kMaxOracleDepth) fail(Errc::DepthTooLarge, "projection depth exceeds 24");
  auto per_block = par::map_indexed<std::map<std::string, Trichotomy>>(
      f.blocks().size(), [&](std::size_t id) { return project_block(f.blocks()[id], depth, id); },
      mode);
  DepthProjection out;
  out.depth = depth;
  for (auto& cells : per_block)
    for (auto& [w, tri] : cells) out.cells[w] = Trichotomy::merge(out.cells[w], tri);
  return out;
}

namespace {

// Count of block members whose window equals w, without the full projection.
Trichotomy cell_of_block(const Block& b, const Bits& w, std::size_t id) {
  std::uint64_t n = w.size();
  auto matches = [&](const TheoryPoint& p) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (p.bit_at(i) != w[i]) return false;
    return true;
  };
  if (auto* fs = std::get_if<FinsetBlock>(&b)) {
    std::vector<TheoryPoint> pts;
    for (const auto& p : fs->points)
      if (matches(p)) pts.push_back(p);
    return Trichotomy::finite(std::move(pts));
  }
  if (auto* fan = std::get_if<FanBlock>(&b)) {
    if (matches(fan->limit)) return Trichotomy::infinite(id);
    std::vector<TheoryPoint> pts;
    for (std::uint64_t i = 0; fan->flip_pos(i) < n; ++i) {
      TheoryPoint t = fan->member_at(i);
      if (matches(t)) pts.push_back(t);
    }
    return Trichotomy::finite(std::move(pts));
  }
  auto window_consistent = [&](const CubeMask& mask) {
    for (std::uint64_t i = 0; i < n; ++i) {
      MaskLetter l = mask.at(i);
      if (l == MaskLetter::Fixed0 && w[i]) return false;
      if (l == MaskLetter::Fixed1 && !w[i]) return false;
    }
    return true;
  };
  if (auto* cube = std::get_if<CubeBlock>(&b))
    return window_consistent(cube->mask) ? Trichotomy::infinite(id) : Trichotomy::empty();
  const auto& fa = std::get<FanArrayBlock>(b);
  if (window_consistent(fa.base)) return Trichotomy::infinite(id);
  std::vector<TheoryPoint> pts;
  for (const auto& u : array_points_below(fa, n))
    if (matches(u)) pts.push_back(u);
  return Trichotomy::finite(std::move(pts));
}

Trichotomy cell_of_family(const Family& f, const Bits& w) {
  Trichotomy acc = Trichotomy::empty();
  for (std::size_t id = 0; id < f.blocks().size(); ++id) {
    acc = Trichotomy::merge(std::move(acc), cell_of_block(f.blocks()[id], w, id));
    if (acc.is_infinite()) return acc;
  }
  return acc;
}

}  // namespace

OracleAnswer oracle_in_closure(const TheoryPoint& t, const Family& f, std::uint64_t depth) {
  if (depth > kMaxOracleDepth) fail(Errc::DepthTooLarge, "oracle depth exceeds 24");
  for (std::uint64_t d = 1; d <= depth; ++d) {
    Trichotomy cell = cell_of_family(f, window_of(t, d));
    if (cell.is_empty()) return {OracleVerdict::No, d};
    if (cell.is_infinite()) continue;
    if (cell.contains(t)) return {OracleVerdict::Yes, d};  // exact membership
    return {OracleVerdict::No, d};
  }
  return {OracleVerdict::Inconclusive, depth};
}

std::vector<std::pair<TheoryPoint, std::string>> oracle_isolated(const Family& f, std::uint64_t depth) {
  if (depth > kMaxOracleDepth) fail(Errc::DepthTooLarge, "oracle depth exceeds 24");
  std::vector<std::pair<TheoryPoint, std::string>> out;
  std::set<TheoryPoint> seen;
  for (std::uint64_t d = 1; d <= depth; ++d) {
    DepthProjection pr = project(f, d);
    for (const auto& [w, tri] : pr.cells) {
      if (!tri.is_finite() || tri.points.size() != 1) continue;
      if (seen.insert(tri.points[0]).second) out.emplace_back(tri.points[0], w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace theoria
