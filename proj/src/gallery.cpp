#include "theoria/gallery.hpp"

#include <algorithm>
#include <set>

#include "theoria/algebra.hpp"
#include "theoria/closure.hpp"
#include "theoria/common.hpp"
#include "theoria/lattice.hpp"
#include "theoria/oracle.hpp"

namespace theoria {

namespace {

Family closed_fan(Bits dev) {
  return closure(Family({FanBlock{TheoryPoint(), 1, 0, std::move(dev), false}}));
}

CubeMask cube0_mask() { return CubeMask::parse("~F0"); }

}  // namespace

GalleryCase make_fan_pair() {
  GalleryCase c;
  c.name = "remark2.4";
  c.title = "two fans sharing a limit: meet_prime exceeds the generator intersection";
  c.families.emplace_back("T1", closed_fan({}).named("T1"));
  c.families.emplace_back("T2", closed_fan({true}).named("T2"));
  c.expected = {
      {"meet_prime", "fin{~0}"},
      {"lgs_intersection", "fin{}"},
      {"intersection", "fin{~0}"},
      {"has_least_1", "true"},
      {"has_least_2", "true"},
      {"lattice_size", "4"},
  };
  return c;
}

GalleryCase make_intersection_counterexample() {
  GalleryCase c;
  c.name = "remark2.2";
  c.title = "two fan-arrays over one cube: the meet loses the least generating set";
  CubeMask d = cube0_mask();
  Family a = closure(Family({FanArrayBlock{d, 1, false, {}}})).named("A");
  Family b = closure(Family({FanArrayBlock{d, 2, false, {}}})).named("B");
  c.families.emplace_back("A", a);
  c.families.emplace_back("B", b);
  c.families.emplace_back("D", Family({CubeBlock{d}}).named("D"));
  c.expected = {
      {"has_least_a", "true"},
      {"has_least_b", "true"},
      {"meet_is_base", "true"},
      {"meet_has_least", "false"},
      {"oracle_isolated_of_meet", "0"},
  };
  return c;
}

GalleryCase make_singleton_union_case() {
  GalleryCase c;
  c.name = "remark2.3";
  c.title = "singleton joins keep least generating sets; their cube limit does not";
  CubeMask d = cube0_mask();
  for (std::uint64_t j = 0; j < 5; ++j)
    c.families.emplace_back("S" + std::to_string(j),
                            Family::of_points({d.dense_point(j)}, "S" + std::to_string(j)));
  c.families.emplace_back("CUBE0", Family({CubeBlock{d}}).named("CUBE0"));
  c.expected = {
      {"singletons_have_least", "true"},
      {"join5_has_least", "true"},
      {"join5_size", "5"},
      {"cube_has_least", "false"},
  };
  return c;
}

namespace {

GalleryCase make_fan0_case() {
  GalleryCase c;
  c.name = "fan0";
  c.title = "single fan with its limit";
  c.families.emplace_back("FAN0", closed_fan({}).named("FAN0"));
  c.expected = {
      {"has_least", "true"},
      {"cb_rank", "2"},
      {"kernel_empty", "true"},
      {"isolated", "fan(limit=~0, stride=1, offset=0, dev=)"},
  };
  return c;
}

GalleryCase make_cube0_case() {
  GalleryCase c;
  c.name = "cube0";
  c.title = "perfect cube: no isolated points, no least generating set";
  c.families.emplace_back("CUBE0", Family({CubeBlock{cube0_mask()}}).named("CUBE0"));
  c.expected = {
      {"has_least", "false"},
      {"cb_rank", "0"},
      {"kernel_empty", "false"},
      {"isolated", "fin{}"},
  };
  return c;
}

GalleryCase make_prop26_case() {
  GalleryCase c;
  c.name = "prop2.6";
  c.title = "finite generator growth decomposes into an untouched remainder";
  Family a = closed_fan({}).named("A");
  Family b = closure(family_union(a, Family::of_points({TheoryPoint::parse("111~0")}))).named("B");
  c.families.emplace_back("A", a);
  c.families.emplace_back("B", b);
  c.expected = {
      {"part21", "fan(limit=~0, stride=1, offset=0, dev=)"},
      {"part22", "fin{}"},
      {"part23", "fin{111~0}"},
      {"prop26", "true"},
  };
  return c;
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"fan0", "cube0", "remark2.2", "remark2.3", "remark2.4", "prop2.6"};
}

GalleryCase make_gallery_case(const std::string& name) {
  if (name == "fan0") return make_fan0_case();
  if (name == "cube0") return make_cube0_case();
  if (name == "remark2.2") return make_intersection_counterexample();
  if (name == "remark2.3") return make_singleton_union_case();
  if (name == "remark2.4") return make_fan_pair();
  if (name == "prop2.6") return make_prop26_case();
  fail(Errc::UndefinedName, "unknown gallery case: " + name);
}

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

// Live recomputation of every expected verdict.
std::vector<std::pair<std::string, std::string>> evaluate_case(const GalleryCase& c,
                                                               std::uint64_t depth) {
  std::vector<std::pair<std::string, std::string>> got;
  auto fam = [&](const std::string& n) -> const Family& {
    for (const auto& [name, f] : c.families)
      if (name == n) return f;
    fail(Errc::UndefinedName, "gallery family " + n);
  };
  if (c.name == "remark2.4") {
    LatticeElement t1 = LatticeElement::from_closed(fam("T1"));
    LatticeElement t2 = LatticeElement::from_closed(fam("T2"));
    got.emplace_back("meet_prime", family_dsl(meet_prime(t1, t2).family()));
    got.emplace_back("lgs_intersection", family_dsl(intersect(t1.least(), t2.least())));
    got.emplace_back("intersection", family_dsl(intersect(t1.family(), t2.family())));
    got.emplace_back("has_least_1", flag(t1.has_least()));
    got.emplace_back("has_least_2", flag(t2.has_least()));
    auto lat = generate_lattice({t1, t2}, LatticeOps::JoinMeetPrime);
    got.emplace_back("lattice_size", std::to_string(lat.elements.size()));
  } else if (c.name == "remark2.2") {
    LatticeElement a = LatticeElement::from_closed(fam("A"));
    LatticeElement b = LatticeElement::from_closed(fam("B"));
    LatticeElement m = meet(a, b);
    got.emplace_back("has_least_a", flag(a.has_least()));
    got.emplace_back("has_least_b", flag(b.has_least()));
    got.emplace_back("meet_is_base", flag(family_eq(m.family(), fam("D"))));
    got.emplace_back("meet_has_least", flag(m.has_least()));
    got.emplace_back("oracle_isolated_of_meet",
                     std::to_string(oracle_isolated(m.family(), depth).size()));
  } else if (c.name == "remark2.3") {
    bool singles = true;
    Family join5;
    for (std::uint64_t j = 0; j < 5; ++j) {
      const Family& s = fam("S" + std::to_string(j));
      singles = singles && least_generating_set(s).has_least;
      join5 = family_union(join5, s);
    }
    got.emplace_back("singletons_have_least", flag(singles));
    got.emplace_back("join5_has_least", flag(least_generating_set(join5).has_least));
    got.emplace_back("join5_size", std::to_string(join5.finite_points().size()));
    got.emplace_back("cube_has_least", flag(least_generating_set(fam("CUBE0")).has_least));
  } else if (c.name == "fan0" || c.name == "cube0") {
    const Family& f = c.families[0].second;
    GenSetReport r = least_generating_set(f);
    CBProfile cb = cb_profile(f);
    got.emplace_back("has_least", flag(r.has_least));
    got.emplace_back("cb_rank", std::to_string(cb.rank));
    got.emplace_back("kernel_empty", flag(cb.kernel_empty));
    got.emplace_back("isolated", family_dsl(r.isolated));
  } else if (c.name == "prop2.6") {
    LatticeElement a = LatticeElement::from_closed(fam("A"));
    LatticeElement b = LatticeElement::from_closed(fam("B"));
    LeqDecomposition d = decompose(a, b);
    got.emplace_back("part21", family_dsl(d.part21));
    got.emplace_back("part22", family_dsl(d.part22));
    got.emplace_back("part23", family_dsl(d.part23));
    got.emplace_back("prop26", flag(check_prop26(a, b)));
  }
  return got;
}

}  // namespace

std::vector<std::string> gallery_mismatches(const GalleryCase& c, std::uint64_t oracle_depth) {
  std::vector<std::string> out;
  auto got = evaluate_case(c, oracle_depth);
  for (const auto& [key, want] : c.expected) {
    auto it = std::find_if(got.begin(), got.end(), [&](const auto& kv) { return kv.first == key; });
    if (it == got.end()) {
      out.push_back(key + ": not evaluated");
      continue;
    }
    if (it->second != want) out.push_back(key + ": expected " + want + ", got " + it->second);
  }
  return out;
}

// ------------------------------------------------------------ randomness

TheoryPoint make_random_point(std::mt19937_64& rng) {
  auto bits = [&](std::size_t len) {
    Bits b(len);
    for (std::size_t i = 0; i < len; ++i) b[i] = (rng() & 1) != 0;
    return b;
  };
  std::size_t pre = rng() % 4;
  std::size_t per = 1 + rng() % 2;
  return TheoryPoint(bits(pre), bits(per));
}

namespace {

CubeMask make_random_mask(std::mt19937_64& rng) {
  auto letters = [&](std::size_t len) {
    MaskWord w(len);
    for (auto& l : w) {
      switch (rng() % 3) {
        case 0: l = MaskLetter::Free; break;
        case 1: l = MaskLetter::Fixed0; break;
        default: l = MaskLetter::Fixed1; break;
      }
    }
    return w;
  };
  MaskWord pre = letters(rng() % 3);
  MaskWord per = letters(1 + rng() % 3);
  if (std::find(per.begin(), per.end(), MaskLetter::Free) == per.end())
    per[rng() % per.size()] = MaskLetter::Free;
  return CubeMask(std::move(pre), std::move(per));
}

Block make_random_block(std::mt19937_64& rng, bool allow_cube) {
  std::uint64_t kind = rng() % (allow_cube ? 5 : 4);
  if (kind < 2) {
    std::vector<TheoryPoint> pts;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(make_random_point(rng));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return FinsetBlock{std::move(pts)};
  }
  if (kind < 4) {
    Bits dev((rng() % 3));
    for (std::size_t i = 0; i < dev.size(); ++i) dev[i] = (rng() & 1) != 0;
    while (!dev.empty() && !dev.back()) dev.pop_back();
    return FanBlock{make_random_point(rng), 1 + rng() % 3, rng() % 4, std::move(dev),
                    (rng() & 1) != 0};
  }
  return CubeBlock{make_random_mask(rng)};
}

}  // namespace

Family make_random_family(std::uint64_t seed, std::size_t size_budget) {
  std::mt19937_64 rng(seed);
  std::size_t n = 1 + rng() % std::max<std::size_t>(std::size_t{1}, size_budget);
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(make_random_block(rng, true));
  return Family(std::move(blocks));
}

Family make_random_lgs_family(std::uint64_t seed, std::size_t size_budget) {
  std::mt19937_64 rng(seed ^ 0x11f5u);
  std::size_t n = 1 + rng() % std::max<std::size_t>(std::size_t{1}, size_budget);
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(make_random_block(rng, false));
  return closure(Family(std::move(blocks)));
}

std::vector<TheoryPoint> probe_points(std::size_t max_len) {
  std::set<TheoryPoint> seen;
  for (std::size_t pre_len = 0; pre_len < max_len; ++pre_len) {
    for (std::size_t per_len = 1; pre_len + per_len <= max_len; ++per_len) {
      for (std::uint64_t pa = 0; pa < (std::uint64_t{1} << pre_len); ++pa) {
        for (std::uint64_t pb = 0; pb < (std::uint64_t{1} << per_len); ++pb) {
          Bits pre(pre_len), per(per_len);
          for (std::size_t i = 0; i < pre_len; ++i) pre[i] = (pa >> i & 1) != 0;
          for (std::size_t i = 0; i < per_len; ++i) per[i] = (pb >> i & 1) != 0;
          seen.emplace(std::move(pre), std::move(per));
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace theoria
