#include <doctest.h>

#include <sstream>

#include "theoria/closure.hpp"
#include "theoria/dsl.hpp"
#include "theoria/gallery.hpp"

using namespace theoria;

namespace {

int run(const std::string& text, std::string* out_text = nullptr) {
  RunOptions opt;
  opt.depth = 8;
  opt.seeds = 5;
  std::ostringstream out, err;
  int rc;
  try {
    rc = run_script(parse_script(text), opt, out, err);
  } catch (const Error& e) {
    if (out_text) *out_text = e.what();
    return e.code() == Errc::ParseError ? 2 : 1;
  }
  if (out_text) *out_text = out.str();
  return rc;
}

}  // namespace

TEST_CASE("parse_script accepts definitions and commands") {
  SessionScript s = parse_script("let A = fan(limit=~0, stride=1, offset=0, dev=)\nlgs closure(A)\n");
  REQUIRE(s.statements.size() == 2);
  CHECK(s.statements[0].is_let);
  CHECK(s.statements[0].let_name == "A");
  CHECK(s.statements[1].command == "lgs");
}

TEST_CASE("parse errors carry the location") {
  try {
    parse_script("let X = fin{");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("undefined names are usage errors") {
  std::string out;
  CHECK(run("closure B\n", &out) == 2);
}

TEST_CASE("family expressions evaluate") {
  Family f = parse_family("closure(fan(limit=~0, stride=1, offset=0, dev=))");
  CHECK(member(f, TheoryPoint()));
  Family u = parse_family("union(fin{1~0}, fin{01~0})");
  CHECK(u.finite_points().size() == 2);
  Family m = parse_family("intersect(fin{1~0, 01~0}, fin{01~0})");
  CHECK(family_eq(m, Family::of_points({TheoryPoint::parse("01~0")})));
  Family mp = parse_family(
      "meetprime(closure(fan(limit=~0, stride=1, offset=0, dev=)),"
      " closure(fan(limit=~0, stride=1, offset=0, dev=1)))");
  CHECK(family_eq(mp, Family::of_points({TheoryPoint()})));
  Family g = parse_family("gallery(fan0)");
  CHECK(member(g, TheoryPoint()));
}

TEST_CASE("script commands print verdicts") {
  std::string out;
  int rc = run("let A = closure(fan(limit=~0, stride=1, offset=0, dev=))\nlgs A\n", &out);
  CHECK(rc == 0);
  CHECK(out.find("hasLeast: true") != std::string::npos);
  rc = run("let D = cube(mask=~F0)\nlgs D\n", &out);
  CHECK(rc == 0);
  CHECK(out.find("hasLeast: false") != std::string::npos);
}

TEST_CASE("verify command exit codes") {
  std::string out;
  CHECK(run("verify --suite bogus\n", &out) == 2);
  CHECK(run("verify --suite closure --seeds 3\n", &out) == 0);
}

TEST_CASE("exported gallery families re-parse to equal families") {
  for (const auto& name : gallery_names()) {
    GalleryCase c = make_gallery_case(name);
    for (const auto& [fname, fam] : c.families) {
      Family back = parse_family(family_dsl(fam));
      CHECK(family_eq(back, fam));
    }
  }
}

TEST_CASE("random families round-trip through the DSL") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Family f = make_random_family(seed, 3);
    CHECK(family_eq(parse_family(family_dsl(f)), f));
    Family g = closure(make_random_lgs_family(seed, 2));
    CHECK(family_eq(parse_family(family_dsl(g)), g));
  }
}

TEST_CASE("fan-array exclusions survive the DSL round trip") {
  Family f({FanArrayBlock{CubeMask::parse("~F0"), 1, true, {3, 9}}});
  Family back = parse_family(family_dsl(f));
  CHECK(family_eq(back, f));
  CHECK(back == f);
}

TEST_CASE("verify with zero seeds runs the gallery checks only") {
  std::string out;
  CHECK(run("verify --suite all --seeds 0\n", &out) == 0);
}

TEST_CASE("the full command surface runs end to end") {
  std::string out;
  std::string script =
      "let A = closure(fan(limit=~0, stride=1, offset=0, dev=))\n"
      "let B = union(A, fin{111~0})\n"
      "closure B\n"
      "meet A B\n"
      "join A B\n"
      "leq A B\n"
      "decompose A B\n"
      "lattice A B\n"
      "algebra A --generators 3\n"
      "cbrank A\n"
      "oracle-check A --depth 6\n"
      "oracle-check A --point 11~0 --depth 6\n"
      "export B --format dsl\n"
      "export B --format json\n";
  CHECK(run(script, &out) == 0);
  CHECK(out.find("part23: fin{111~0}") != std::string::npos);
  CHECK(out.find("rank: 2") != std::string::npos);
  CHECK(out.find("digraph") != std::string::npos);
  CHECK(out.find("iso_check: pass") != std::string::npos);
}
