#include "theoria/verify.hpp"

#include <algorithm>

#include "theoria/algebra.hpp"
#include "theoria/closure.hpp"
#include "theoria/common.hpp"
#include "theoria/gallery.hpp"
#include "theoria/lattice.hpp"
#include "theoria/oracle.hpp"

namespace theoria {

namespace {

// One randomized check swept over seeds; failures carry the seed.
SuiteResult sweep(const std::string& name, const VerifyOptions& opt, std::size_t count,
                  const std::function<bool(std::uint64_t)>& check) {
  SuiteResult r;
  r.suite = name;
  r.checks = count;
  auto failures = par::sweep_failures(
      count, [&](std::size_t i) { return check(opt.base_seed + i); }, opt.mode);
  for (const auto& f : failures) {
    std::string what = name;
    if (!f.message.empty()) what += ": " + f.message;
    r.failures.push_back({what, opt.base_seed + f.index});
  }
  return r;
}

std::vector<Family> gallery_family_pool() {
  std::vector<Family> out;
  for (const auto& name : gallery_names()) {
    GalleryCase c = make_gallery_case(name);
    for (auto& [n, f] : c.families) out.push_back(f);
  }
  return out;
}

// LGS elements drawn per gallery case so every pairwise operation stays
// inside the supported block table.
std::vector<std::vector<LatticeElement>> gallery_element_groups() {
  std::vector<std::vector<LatticeElement>> groups;
  {
    GalleryCase c = make_fan_pair();
    std::vector<LatticeElement> g;
    for (auto& [n, f] : c.families) g.push_back(LatticeElement::from_closed(f));
    g.push_back(LatticeElement::close_of(Family::of_points({TheoryPoint::parse("11~0")})));
    groups.push_back(std::move(g));
  }
  {
    GalleryCase c = make_intersection_counterexample();
    std::vector<LatticeElement> g;
    for (auto& [n, f] : c.families)
      if (n != "D") g.push_back(LatticeElement::from_closed(f));
    groups.push_back(std::move(g));
  }
  {
    GalleryCase c = make_singleton_union_case();
    std::vector<LatticeElement> g;
    for (auto& [n, f] : c.families)
      if (n != "CUBE0") g.push_back(LatticeElement::from_closed(f));
    groups.push_back(std::move(g));
  }
  return groups;
}

LatticeElement random_element(std::uint64_t seed) {
  return LatticeElement::from_closed(make_random_lgs_family(seed, 2));
}

// ------------------------------------------------------------- suites

SuiteResult suite_closure(const VerifyOptions& opt) {
  SuiteResult galleries = sweep("closure additivity (gallery pairs)", opt, 1, [&](std::uint64_t) {
    auto pool = gallery_family_pool();
    for (const auto& a : pool)
      for (const auto& b : pool) {
        if (!family_eq(closure(family_union(a, b)), family_union(closure(a), closure(b))))
          return false;
      }
    return true;
  });
  SuiteResult randoms =
      sweep("closure additivity + laws (random pairs)", opt, opt.seeds, [&](std::uint64_t seed) {
        Family a = make_random_family(seed * 2 + 1, 3);
        Family b = make_random_family(seed * 2 + 2, 3);
        if (!family_eq(closure(family_union(a, b)), family_union(closure(a), closure(b))))
          return false;
        if (!family_subset(a, closure(a))) return false;                      // extensive
        if (!family_eq(closure(closure(a)), closure(a))) return false;        // idempotent
        if (!family_subset(closure(intersect(a, closure(a))), closure(a))) return false;
        Family u = family_union(a, b);
        if (!family_subset(closure(a), closure(u))) return false;             // monotone
        return true;
      });
  SuiteResult empty_case = sweep("closure of the empty family", opt, 1, [&](std::uint64_t) {
    return closure(Family()).is_empty();
  });
  SuiteResult merged;
  merged.suite = "closure";
  merged.checks = galleries.checks + randoms.checks + empty_case.checks;
  for (auto* part : {&galleries, &randoms, &empty_case})
    merged.failures.insert(merged.failures.end(), part->failures.begin(), part->failures.end());
  return merged;
}

SuiteResult suite_oracle(const VerifyOptions& opt) {
  SuiteResult agreement = sweep("oracle agreement (random probes)", opt, opt.seeds, [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Family f = make_random_family(rng(), 3);
    TheoryPoint t = make_random_point(rng);
    bool symbolic = member(closure(f), t);
    auto oracle = oracle_in_closure(t, f, opt.depth);
    if (oracle.verdict == OracleVerdict::No && symbolic) return false;
    if (oracle.verdict == OracleVerdict::Yes && !symbolic) return false;
    return true;
  });
  SuiteResult cells = sweep("projection vs family_count (gallery)", opt, 1, [&](std::uint64_t) {
    std::uint64_t depth = std::min<std::uint64_t>(opt.depth, 10);
    for (const auto& f : gallery_family_pool()) {
      for (std::uint64_t d = 1; d <= depth; ++d) {
        DepthProjection pr = project(f, d, opt.mode);
        for (std::uint64_t cell = 0; cell < (std::uint64_t{1} << d); ++cell) {
          Bits w(d);
          for (std::uint64_t i = 0; i < d; ++i) w[i] = (cell >> i & 1) != 0;
          Trichotomy via_engine = family_count(f, Sentence::prefix_word(w));
          Trichotomy via_oracle = pr.cell(bits_to_string(w));
          if (via_engine.kind != via_oracle.kind) return false;
          if (via_engine.is_finite() && via_engine.points != via_oracle.points) return false;
        }
      }
    }
    return true;
  });
  SuiteResult monotone = sweep("oracle verdict refinement", opt, opt.seeds, [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0xab1e);
    Family f = make_random_family(rng(), 3);
    TheoryPoint t = make_random_point(rng);
    bool saw_no = false;
    for (std::uint64_t d = 1; d <= opt.depth; ++d) {
      auto v = oracle_in_closure(t, f, d);
      if (saw_no && v.verdict != OracleVerdict::No) return false;
      if (v.verdict == OracleVerdict::No) saw_no = true;
    }
    return true;
  });
  SuiteResult merged;
  merged.suite = "oracle";
  merged.checks = agreement.checks + cells.checks + monotone.checks;
  for (auto* part : {&agreement, &cells, &monotone})
    merged.failures.insert(merged.failures.end(), part->failures.begin(), part->failures.end());
  return merged;
}

SuiteResult suite_lgs(const VerifyOptions& opt) {
  SuiteResult gallery_flags = sweep("gallery expected records", opt, 1, [&](std::uint64_t) {
    for (const auto& name : gallery_names())
      if (!gallery_mismatches(make_gallery_case(name), opt.depth).empty()) return false;
    return true;
  });
  SuiteResult equiv = sweep("generating-set condition equivalence", opt, opt.seeds, [&](std::uint64_t seed) {
    Family f = make_random_lgs_family(seed, 2);
    GenSetReport r = least_generating_set(f);
    if (!r.has_least) return false;  // closures of fans and finite sets must have one
    Thm13Flags good = check_thm13(f, *r.least_gen_set, {f});
    if (!good.agree || !good.least) return false;
    // A deliberately non-minimal generating set must fail all four alike.
    Family padded = f;  // the whole closed family generates itself
    if (!family_eq(closure(padded), f)) return false;
    if (!family_eq(padded, *r.least_gen_set)) {
      Thm13Flags bad = check_thm13(f, padded, {});
      if (!bad.agree || bad.least) return false;
    }
    // Witnesses isolate their points exactly.
    for (const auto& [p, phi] : r.witnesses) {
      Trichotomy t = family_count(f, phi);
      if (!(t.is_finite() && t.points.size() == 1 && t.points[0] == p)) return false;
    }
    return true;
  });
  SuiteResult partition = sweep("isolated/accumulation partition", opt, opt.seeds, [&](std::uint64_t seed) {
    Family f = closure(make_random_family(seed ^ 0x9151, 3));
    Family iso = isolated_points(f);
    Family acc = acc_points(f);
    if (!family_eq(family_union(iso, acc), f)) return false;
    if (!intersect(iso, acc).is_empty()) return false;
    return true;
  });
  SuiteResult merged;
  merged.suite = "lgs";
  merged.checks = gallery_flags.checks + equiv.checks + partition.checks;
  for (auto* part : {&gallery_flags, &equiv, &partition})
    merged.failures.insert(merged.failures.end(), part->failures.begin(), part->failures.end());
  return merged;
}

SuiteResult suite_semilattice(const VerifyOptions& opt) {
  SuiteResult joins = sweep("join preserves least generating sets", opt, opt.seeds, [&](std::uint64_t seed) {
    LatticeElement a = random_element(seed * 2 + 1);
    LatticeElement b = random_element(seed * 2 + 2);
    if (!check_prop21(a, b)) return false;
    return join(a, b).has_least();
  });
  SuiteResult counterexample = sweep("meet drops the least generating set", opt, 1, [&](std::uint64_t) {
    return gallery_mismatches(make_intersection_counterexample(), opt.depth).empty();
  });
  SuiteResult singletons = sweep("singleton joins stay generated", opt, 1, [&](std::uint64_t) {
    return gallery_mismatches(make_singleton_union_case(), opt.depth).empty();
  });
  SuiteResult merged;
  merged.suite = "semilattice";
  merged.checks = joins.checks + counterexample.checks + singletons.checks;
  for (auto* part : {&joins, &counterexample, &singletons})
    merged.failures.insert(merged.failures.end(), part->failures.begin(), part->failures.end());
  return merged;
}

bool lattice_laws_hold(const std::vector<LatticeElement>& elems) {
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (!family_eq(join(a, b).family(), join(b, a).family())) return false;
      if (!family_eq(meet_prime(a, b).family(), meet_prime(b, a).family())) return false;
      if (!family_eq(join(a, a).family(), a.family())) return false;
      if (!family_eq(meet_prime(a, a).family(), a.family())) return false;
      if (!family_eq(meet_prime(a, join(a, b)).family(), a.family())) return false;  // absorption
      if (!family_eq(join(a, meet_prime(a, b)).family(), a.family())) return false;  // absorption
      bool le = leq(a, b);
      if (le != family_eq(join(a, b).family(), b.family())) return false;  // order coherence
      if (le && !family_eq(meet_prime(a, b).family(), a.family())) return false;
    }
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) {
        if (!family_eq(join(join(a, b), c).family(), join(a, join(b, c)).family())) return false;
        if (!family_eq(meet_prime(meet_prime(a, b), c).family(),
                       meet_prime(a, meet_prime(b, c)).family()))
          return false;
      }
  return true;
}

SuiteResult suite_lattice(const VerifyOptions& opt) {
  SuiteResult laws = sweep("lattice laws on generated lattices", opt, 1, [&](std::uint64_t) {
    for (const auto& group : gallery_element_groups()) {
      std::vector<LatticeElement> gens(group.begin(),
                                       group.begin() + std::min<std::size_t>(group.size(), 4));
      GeneratedLattice lat = generate_lattice(gens, LatticeOps::JoinMeetPrime, 4096, opt.mode);
      if (lat.cap_exceeded) return false;
      if (!lattice_laws_hold(lat.elements)) return false;
    }
    return true;
  });
  SuiteResult prop26 = sweep("finite generator growth (prop 2.6 shape)", opt,
                             std::max<std::size_t>(opt.seeds, 1), [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x26);
    LatticeElement a = random_element(rng());
    std::vector<TheoryPoint> extra;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) extra.push_back(make_random_point(rng));
    LatticeElement b = LatticeElement::close_of(
        family_union(a.family(), Family::of_points(std::move(extra))));
    if (!leq(a, b)) return false;
    Family diff = family_difference(b.least(), a.least());
    if (!diff.is_finite()) return false;
    LeqDecomposition d = decompose(a, b);
    if (!intersect(d.part21, d.part22).is_empty()) return false;
    if (!intersect(d.part21, d.part23).is_empty()) return false;
    if (!intersect(d.part22, d.part23).is_empty()) return false;
    if (!family_eq(family_union(d.part21, family_union(d.part22, d.part23)), b.least())) return false;
    if (!family_subset(d.part21, a.least())) return false;
    if (!intersect(family_union(d.part22, d.part23), a.least()).is_empty()) return false;
    return check_prop26(a, b);
  });
  SuiteResult remark27 = sweep("part22 neighborhoods stay infinite", opt, 1, [&](std::uint64_t) {
    // Fixture where part22 is nonempty: a fan's limit moved below a fan family.
    LatticeElement a = LatticeElement::close_of(Family::of_points({TheoryPoint()}));
    LatticeElement b = LatticeElement::close_of(
        family_union(Family({FanBlock{TheoryPoint(), 1, 0, {}, false}}),
                     Family::of_points({TheoryPoint::parse("111~0")})));
    LeqDecomposition d = decompose(a, b);
    if (d.part22.is_empty()) return false;
    Family lower_only = family_difference(a.least(), b.least());
    for (const auto& blk : lower_only.blocks()) {
      auto* fs = std::get_if<FinsetBlock>(&blk);
      if (!fs) continue;
      for (const auto& p : fs->points) {
        Sentence phi = witness_for(a.least(), p);
        if (!family_count(d.part22, phi).is_infinite()) return false;
      }
    }
    return true;
  });
  SuiteResult merged;
  merged.suite = "lattice";
  merged.checks = laws.checks + prop26.checks + remark27.checks;
  for (auto* part : {&laws, &prop26, &remark27})
    merged.failures.insert(merged.failures.end(), part->failures.begin(), part->failures.end());
  return merged;
}

SuiteResult suite_distributivity(const VerifyOptions& opt) {
  SuiteResult gallery_triples = sweep("distributivity on gallery triples", opt, 1, [&](std::uint64_t) {
    for (const auto& group : gallery_element_groups())
      for (const auto& a : group)
        for (const auto& b : group)
          for (const auto& c : group)
            if (!check_distributivity(a, b, c).holds()) return false;
    return true;
  });
  SuiteResult randoms = sweep("distributivity on random triples", opt, opt.seeds, [&](std::uint64_t seed) {
    LatticeElement a = random_element(seed * 3 + 1);
    LatticeElement b = random_element(seed * 3 + 2);
    LatticeElement c = random_element(seed * 3 + 3);
    return check_distributivity(a, b, c).holds();
  });
  SuiteResult merged;
  merged.suite = "distributivity";
  merged.checks = gallery_triples.checks + randoms.checks;
  for (auto* part : {&gallery_triples, &randoms})
    merged.failures.insert(merged.failures.end(), part->failures.begin(), part->failures.end());
  return merged;
}

SuiteResult suite_boolean(const VerifyOptions& opt) {
  SuiteResult iso = sweep("subset-algebra isomorphism", opt, 1, [&](std::uint64_t) {
    Family fan0 = make_gallery_case("fan0").families[0].second;
    for (std::size_t n : {0u, 1u, 3u, 8u}) {
      BooleanAlgebra alg = build_algebra(fan0, n);
      if (!iso_check(alg, opt.mode)) return false;
    }
    return true;
  });
  SuiteResult axioms = sweep("boolean axioms and atoms", opt, 1, [&](std::uint64_t) {
    Family fan0 = make_gallery_case("fan0").families[0].second;
    BooleanAlgebra alg = build_algebra(fan0, 3);
    std::uint64_t top = alg.top().gen_mask;
    for (const auto& e : alg.elements) {
      std::uint64_t c = top & ~e.gen_mask;
      if ((e.gen_mask | c) != top || (e.gen_mask & c) != 0) return false;
      bool atom = alg.is_atom(e.gen_mask);
      if (atom != (e.generator_subset.is_finite() && e.generator_subset.finite_points().size() == 1))
        return false;
    }
    return true;
  });
  SuiteResult kernels = sweep("derivative kernels by block kind", opt, opt.seeds, [&](std::uint64_t seed) {
    Family discrete = make_random_lgs_family(seed ^ 0xcb, 2);
    if (!cb_profile(discrete).kernel_empty) return false;
    Family with_cube = family_union(discrete, make_gallery_case("cube0").families[0].second);
    if (cb_profile(with_cube).kernel_empty) return false;
    return true;
  });
  SuiteResult merged;
  merged.suite = "boolean";
  merged.checks = iso.checks + axioms.checks + kernels.checks;
  for (auto* part : {&iso, &axioms, &kernels})
    merged.failures.insert(merged.failures.end(), part->failures.begin(), part->failures.end());
  return merged;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"closure", "lgs", "semilattice", "lattice", "distributivity", "boolean", "oracle", "all"};
}

std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "closure") return {suite_closure(opt)};
  if (name == "lgs") return {suite_lgs(opt)};
  if (name == "semilattice") return {suite_semilattice(opt)};
  if (name == "lattice") return {suite_lattice(opt)};
  if (name == "distributivity") return {suite_distributivity(opt)};
  if (name == "boolean") return {suite_boolean(opt)};
  if (name == "oracle") return {suite_oracle(opt)};
  if (name == "all") {
    std::vector<SuiteResult> out;
    for (const auto& n : {"closure", "lgs", "semilattice", "lattice", "distributivity", "boolean",
                          "oracle"}) {
      auto part = run_suite(n, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  fail(Errc::UnknownSuite, "unknown suite: " + name);
}

}  // namespace theoria
