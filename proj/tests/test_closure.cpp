#include <doctest.h>

#include "theoria/closure.hpp"
#include "theoria/gallery.hpp"
#include "theoria/oracle.hpp"

using namespace theoria;

namespace {

Family fan0_family(bool with_limit = false) {
  return Family({FanBlock{TheoryPoint(), 1, 0, {}, with_limit}});
}

Family cube0_family() { return Family({CubeBlock{CubeMask::parse("~F0")}}); }

}  // namespace

TEST_CASE("acc_points per block kind") {
  CHECK(family_eq(acc_points(fan0_family()), Family::of_points({TheoryPoint()})));
  CHECK(acc_points(Family::of_points({TheoryPoint(), TheoryPoint::parse("1~0")})).is_empty());
  CHECK(family_eq(acc_points(cube0_family()), cube0_family()));
  // The oracle agrees: the fan's limit is never refuted, depth 12.
  CHECK(oracle_in_closure(TheoryPoint(), fan0_family(), 12).verdict != OracleVerdict::No);
}

TEST_CASE("closure adds exactly the limit points") {
  Family closed = closure(fan0_family());
  CHECK(family_eq(closed, fan0_family(true)));
  CHECK(member(closed, TheoryPoint()));
  Family fin = Family::of_points({TheoryPoint::parse("1~0")});
  CHECK(family_eq(closure(fin), fin));
  for (std::uint64_t seed = 1; seed < 30; ++seed) {
    Family f = make_random_family(seed, 3);
    CHECK(family_eq(closure(closure(f)), closure(f)));
  }
  CHECK(closure(Family()).is_empty());
}

TEST_CASE("is_in_closure certificates") {
  auto in = is_in_closure(TheoryPoint(), fan0_family());
  CHECK(in.in);
  CHECK(in.kind == ClosureCertificate::Kind::Accumulation);

  auto out = is_in_closure(TheoryPoint::parse("11~0"), fan0_family());
  CHECK(!out.in);
  REQUIRE(out.separating.has_value());
  CHECK(out.separating->str() == "P0 & P1");  // no fan point starts 11
  Trichotomy slice = family_count(fan0_family(), *out.separating);
  CHECK(slice.is_empty());

  auto mem = is_in_closure(TheoryPoint(), Family::of_points({TheoryPoint()}));
  CHECK(mem.in);
  CHECK(mem.kind == ClosureCertificate::Kind::Member);
}

TEST_CASE("isolated_points punctures limits") {
  Family closed = closure(fan0_family());
  CHECK(family_eq(isolated_points(closed), fan0_family()));
  CHECK(isolated_points(cube0_family()).is_empty());
  Family fin = Family::of_points({TheoryPoint(), TheoryPoint::parse("1~0")});
  CHECK(family_eq(isolated_points(fin), fin));
  CHECK_THROWS_AS(isolated_points(fan0_family()), Error);  // not closed
}

TEST_CASE("least_generating_set verdicts") {
  GenSetReport fan_report = least_generating_set(closure(fan0_family()));
  CHECK(fan_report.has_least);
  CHECK(family_eq(*fan_report.least_gen_set, fan0_family()));

  GenSetReport cube_report = least_generating_set(cube0_family());
  CHECK(!cube_report.has_least);
  CHECK(cube_report.isolated.is_empty());

  Family fin = Family::of_points({TheoryPoint(), TheoryPoint::parse("11~0")});
  GenSetReport fin_report = least_generating_set(fin);
  CHECK(fin_report.has_least);
  CHECK(family_eq(*fin_report.least_gen_set, fin));

  for (const auto& [p, phi] : fan_report.witnesses) {
    Trichotomy t = family_count(closure(fan0_family()), phi);
    REQUIRE(t.is_finite());
    CHECK(t.points == std::vector<TheoryPoint>{p});
  }
}

TEST_CASE("witness_for rejects accumulation points") {
  CHECK_THROWS_AS(witness_for(closure(fan0_family()), TheoryPoint()), Error);
}

TEST_CASE("check_thm13 condition flags") {
  Family f = closure(fan0_family());
  Thm13Flags good = check_thm13(f, fan0_family(), {f});
  CHECK(good.agree);
  CHECK(good.least);
  CHECK(good.minimal);
  CHECK(good.isolated_in_g);
  CHECK(good.isolated_in_f);

  // The fan plus its limit still generates but fails all four conditions.
  Thm13Flags bad = check_thm13(f, f, {});
  CHECK(bad.agree);
  CHECK(!bad.least);
  CHECK(!bad.minimal);
  CHECK(!bad.isolated_in_g);
  CHECK(!bad.isolated_in_f);

  Family single = Family::of_points({TheoryPoint()});
  Thm13Flags s = check_thm13(single, single, {single});
  CHECK(s.agree);
  CHECK(s.least);

  CHECK_THROWS_AS(check_thm13(f, cube0_family(), {}), Error);  // not generating
}

TEST_CASE("isolated and accumulation parts partition closed families") {
  for (std::uint64_t seed = 1; seed < 40; ++seed) {
    Family f = closure(make_random_family(seed, 3));
    Family iso = isolated_points(f);
    Family acc = acc_points(f);
    CHECK(family_eq(family_union(iso, acc), f));
    CHECK(intersect(iso, acc).is_empty());
  }
}

TEST_CASE("closure additivity over unions") {
  for (std::uint64_t seed = 1; seed < 60; ++seed) {
    Family a = make_random_family(seed * 2, 3);
    Family b = make_random_family(seed * 2 + 1, 3);
    CHECK(family_eq(closure(family_union(a, b)), family_union(closure(a), closure(b))));
  }
}
