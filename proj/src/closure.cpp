#include "theoria/closure.hpp"

#include <algorithm>

#include "theoria/common.hpp"

namespace theoria {

Family acc_points(const Family& f) {
  std::vector<Block> acc;
  for (const auto& b : f.blocks()) {
    auto part = block_acc(b);
    acc.insert(acc.end(), part.begin(), part.end());
  }
  return Family(std::move(acc));
}

Family closure(const Family& f) {
  std::vector<Block> blocks = f.blocks();
  for (auto& b : blocks) {
    if (auto* fan = std::get_if<FanBlock>(&b)) fan->include_limit = true;
    if (auto* fa = std::get_if<FanArrayBlock>(&b)) fa->include_base = true;
  }
  return Family(std::move(blocks));
}

bool is_closed(const Family& f) { return family_eq(closure(f), f); }

namespace {

// Depth from which the prefix neighborhood of p meets f in at most {p}.
std::optional<std::uint64_t> separation_depth(const Family& f, const TheoryPoint& p) {
  std::uint64_t n = 0;
  for (const auto& b : f.blocks()) {
    auto d = block_separation_depth(b, p);
    if (!d) return std::nullopt;
    n = std::max(n, *d);
  }
  return n;
}

// The family without its limit points: finite blocks stay, fans lose the
// limit flag, cubes drop, fan-arrays lose the base flag.
Family discrete_part(const Family& f) {
  std::vector<Block> blocks;
  for (const auto& b : f.blocks()) {
    if (std::holds_alternative<CubeBlock>(b)) continue;
    Block copy = b;
    if (auto* fan = std::get_if<FanBlock>(&copy)) fan->include_limit = false;
    if (auto* fa = std::get_if<FanArrayBlock>(&copy)) fa->include_base = false;
    blocks.push_back(std::move(copy));
  }
  return Family(std::move(blocks));
}

}  // namespace

ClosureCertificate is_in_closure(const TheoryPoint& t, const Family& f) {
  if (member(f, t)) return {true, ClosureCertificate::Kind::Member, std::nullopt};
  if (member(closure(f), t)) return {true, ClosureCertificate::Kind::Accumulation, std::nullopt};
  auto n = separation_depth(f, t);
  if (!n) fail(Errc::Internal, "point outside the closure lacks a separation depth");
  return {false, ClosureCertificate::Kind::Separated, Sentence::prefix_of(t, *n)};
}

Family isolated_points(const Family& f) {
  if (!is_closed(f)) fail(Errc::NotClosed, "isolated_points requires an E-closed family");
  return family_difference(discrete_part(f), acc_points(f));
}

Sentence witness_for(const Family& f, const TheoryPoint& p) {
  auto n = separation_depth(f, p);
  if (!n) fail(Errc::NoLgs, "point is an accumulation point; no isolating sentence exists");
  return Sentence::prefix_of(p, *n);
}

namespace {

std::vector<TheoryPoint> sample_points(const Family& f, std::size_t per_block) {
  std::vector<TheoryPoint> out;
  for (const auto& b : f.blocks()) {
    if (auto* fs = std::get_if<FinsetBlock>(&b)) {
      out.insert(out.end(), fs->points.begin(), fs->points.end());
    } else if (auto* fan = std::get_if<FanBlock>(&b)) {
      for (std::size_t i = 0; i < per_block; ++i) out.push_back(fan->member_at(i));
    } else if (auto* fa = std::get_if<FanArrayBlock>(&b)) {
      std::size_t taken = 0;
      for (std::uint64_t k = 0; taken < per_block && k < 512; ++k) {
        auto [c, z] = cantor_unpair(k);
        if (c != fa->coding) continue;
        std::uint64_t q = fa->base.fixed_position(k);
        if (fa->is_excluded(q)) continue;
        auto [j, i] = cantor_unpair(z);
        out.push_back(fa->fan_point(j, i));
        ++taken;
      }
    }
  }
  return out;
}

}  // namespace

GenSetReport least_generating_set(const Family& f) {
  GenSetReport report;
  report.isolated = isolated_points(f);
  report.has_least = family_eq(closure(report.isolated), f);
  if (report.has_least) report.least_gen_set = report.isolated;
  for (const auto& p : sample_points(report.isolated, 3))
    report.witnesses.emplace_back(p, witness_for(f, p));
  return report;
}

std::vector<Family> puncturings(const Family& g) {
  std::vector<Family> out;

  // Single-point removals, taken out of every block at once so points
  // listed by several blocks really leave the set.
  std::vector<TheoryPoint> candidates = sample_points(g, 2);
  for (const auto& b : g.blocks()) {
    if (auto* fan = std::get_if<FanBlock>(&b))
      if (fan->include_limit) candidates.push_back(fan->limit);
    if (auto* fa = std::get_if<FanArrayBlock>(&b))
      if (fa->include_base) candidates.push_back(fa->base.dense_point(0));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& p : candidates) {
    try {
      out.push_back(family_difference(g, Family::of_points({p})));
    } catch (const Error&) {
      // unrepresentable removal (a point inside a cube block); skip
    }
  }

  // Structural progression drops per block.
  const auto& blocks = g.blocks();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    auto rest_plus = [&](std::vector<Block> repl) {
      std::vector<Block> bs;
      for (std::size_t j = 0; j < blocks.size(); ++j)
        if (j != k) bs.push_back(blocks[j]);
      for (auto& r : repl) bs.push_back(std::move(r));
      return Family(std::move(bs));
    };
    if (auto* fan = std::get_if<FanBlock>(&blocks[k])) {
      FanBlock evens = *fan;
      evens.stride *= 2;
      out.push_back(rest_plus({evens}));
      std::vector<TheoryPoint> head;
      for (std::uint64_t i = 0; i < 3; ++i) head.push_back(fan->member_at(i));
      std::vector<Block> repl{FinsetBlock{std::move(head)}};
      if (fan->include_limit) repl.push_back(FinsetBlock{{fan->limit}});
      out.push_back(rest_plus(std::move(repl)));  // tail dropped
    } else if (auto* fa = std::get_if<FanArrayBlock>(&blocks[k])) {
      if (fa->include_base) {
        FanArrayBlock unflagged = *fa;
        unflagged.include_base = false;
        out.push_back(rest_plus({unflagged}));
      }
    }
  }
  return out;
}

Thm13Flags check_thm13(const Family& f, const Family& g, const std::vector<Family>& candidate_pool) {
  if (!is_closed(f)) fail(Errc::NotClosed, "check_thm13 requires an E-closed family");
  if (!family_subset(g, f) || !family_eq(closure(g), f))
    fail(Errc::NotGenerating, "check_thm13 requires a generating subset");

  Thm13Flags flags;
  Family core = isolated_points(f);

  flags.least = family_eq(g, core);
  if (flags.least) {
    for (const auto& cand : candidate_pool)
      if (family_eq(closure(cand), f) && !family_subset(g, cand)) flags.least = false;
  }

  flags.minimal = true;
  for (const auto& sub : puncturings(g)) {
    if (family_eq(sub, g)) continue;
    if (family_eq(closure(sub), f)) {
      flags.minimal = false;
      break;
    }
  }

  flags.isolated_in_g = intersect(g, acc_points(g)).is_empty();
  flags.isolated_in_f = intersect(g, acc_points(f)).is_empty();
  flags.agree = (flags.least == flags.minimal && flags.minimal == flags.isolated_in_g &&
                 flags.isolated_in_g == flags.isolated_in_f);
  return flags;
}

}  // namespace theoria
