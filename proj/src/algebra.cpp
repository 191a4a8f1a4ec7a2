#include "theoria/algebra.hpp"

#include <algorithm>

#include "theoria/common.hpp"

namespace theoria {

namespace {

std::vector<TheoryPoint> pick_generators(const Family& least, std::size_t n) {
  std::vector<TheoryPoint> out;
  for (const auto& b : least.blocks()) {
    if (auto* fs = std::get_if<FinsetBlock>(&b))
      for (const auto& p : fs->points) {
        if (out.size() == n) return out;
        out.push_back(p);
      }
  }
  for (const auto& b : least.blocks()) {
    if (auto* fan = std::get_if<FanBlock>(&b)) {
      for (std::uint64_t i = 0; out.size() < n; ++i) out.push_back(fan->member_at(i));
      if (out.size() == n) return out;
    } else if (auto* fa = std::get_if<FanArrayBlock>(&b)) {
      for (std::uint64_t k = 0; out.size() < n && k < 4096; ++k) {
        auto [c, z] = cantor_unpair(k);
        if (c != fa->coding) continue;
        std::uint64_t q = fa->base.fixed_position(k);
        if (fa->is_excluded(q)) continue;
        auto [j, i] = cantor_unpair(z);
        out.push_back(fa->fan_point(j, i));
      }
      if (out.size() == n) return out;
    }
  }
  return out;
}

}  // namespace

BooleanAlgebra build_algebra(const Family& f, std::size_t n) {
  GenSetReport lgs = least_generating_set(f);
  if (!lgs.has_least) fail(Errc::NoLgs, "build_algebra requires a least generating set");
  auto gens = pick_generators(*lgs.least_gen_set, n);
  if (gens.size() < n)
    fail(Errc::CapExceeded, "least generating set has fewer points than requested");
  return build_algebra_with(f, std::move(gens));
}

BooleanAlgebra build_algebra_with(const Family& f, std::vector<TheoryPoint> generators) {
  if (generators.size() > kAlgebraGeneratorCap)
    fail(Errc::CapExceeded, "generator truncation exceeds the cap of 16");
  for (const auto& g : generators)
    if (!member(f, g)) fail(Errc::NotGenerating, "designated generator lies outside the family");
  BooleanAlgebra alg;
  alg.generators = std::move(generators);
  std::size_t n = alg.generators.size();
  alg.elements.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<TheoryPoint> pts;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) pts.push_back(alg.generators[k]);
    Family subset = Family::of_points(std::move(pts));
    Family denot = closure(subset);
    alg.elements.push_back({mask, std::move(subset), std::move(denot)});
  }
  return alg;
}

bool iso_check(const BooleanAlgebra& alg, par::Mode mode) {
  std::size_t n = alg.elements.size();
  auto check_pair = [&](std::uint64_t a, std::uint64_t b) {
    const auto& ea = alg.elements[a];
    const auto& eb = alg.elements[b];
    bool sub_masks = (ea.gen_mask & ~eb.gen_mask) == 0;
    if (sub_masks != family_subset(ea.denotation, eb.denotation)) return false;
    // Ops commute with the subset ops on generator sets.
    const auto& meet_el = alg.elements[ea.gen_mask & eb.gen_mask];
    const auto& join_el = alg.elements[ea.gen_mask | eb.gen_mask];
    if (!family_eq(meet_el.denotation, intersect(ea.denotation, eb.denotation))) return false;
    if (!family_eq(join_el.denotation, family_union(ea.denotation, eb.denotation))) return false;
    std::uint64_t compl_mask = alg.top().gen_mask & ~ea.gen_mask;
    const auto& compl_el = alg.elements[compl_mask];
    if (!family_eq(compl_el.denotation, family_difference(alg.top().denotation, ea.denotation)))
      return false;
    return true;
  };
  if (n <= 256) {
    return par::sweep_all(n * n, [&](std::size_t k) { return check_pair(k / n, k % n); }, mode);
  }
  // Sampled pairs above the exhaustive threshold, deterministic stride walk.
  const std::size_t samples = 10000;
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  pairs.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    std::uint64_t a = (state >> 17) % n;
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    std::uint64_t b = (state >> 17) % n;
    pairs.emplace_back(a, b);
  }
  return par::sweep_all(pairs.size(),
                        [&](std::size_t k) { return check_pair(pairs[k].first, pairs[k].second); },
                        mode);
}

CBProfile cb_profile(const Family& f) {
  CBProfile out;
  out.chain.push_back(f);
  for (;;) {
    Family next = acc_points(out.chain.back());
    if (family_eq(next, out.chain.back())) break;
    out.chain.push_back(std::move(next));
  }
  out.rank = out.chain.size() - 1;
  out.kernel_empty = out.chain.back().is_empty();
  return out;
}

}  // namespace theoria
