#include <doctest.h>

#include <set>

#include "theoria/blocks.hpp"
#include "theoria/oracle.hpp"

using namespace theoria;

namespace {

FanBlock fan0() { return FanBlock{TheoryPoint(), 1, 0, {}, false}; }  // t_i = 0^i 1 0^w

CubeMask cube0() { return CubeMask::parse("~F0"); }  // even Free, odd Fixed0

// Brute-force slice of a fan: all members with flip position below the
// horizon that satisfy phi, checked one by one.
std::vector<TheoryPoint> fan_slice(const FanBlock& f, const Sentence& phi, std::uint64_t horizon) {
  std::vector<TheoryPoint> out;
  for (std::uint64_t i = 0; f.flip_pos(i) < horizon; ++i)
    if (satisfies(f.member_at(i), phi)) out.push_back(f.member_at(i));
  return out;
}

}  // namespace

TEST_CASE("fan members are the expected points") {
  FanBlock f = fan0();
  CHECK(f.member_at(0).str() == "1~0");
  CHECK(f.member_at(2).str() == "001~0");
  CHECK(f.index_of(TheoryPoint::parse("001~0")) == 2);
  CHECK(!f.index_of(TheoryPoint()));       // the limit is not a member
  CHECK(!f.index_of(TheoryPoint::parse("11~0")));
}

TEST_CASE("fan members are pairwise distinct and converge to the limit") {
  FanBlock f{TheoryPoint::parse("01~10"), 2, 1, bits_from_string("11"), false};
  std::set<TheoryPoint> seen;
  for (std::uint64_t i = 0; i < 24; ++i) {
    TheoryPoint t = f.member_at(i);
    CHECK(seen.insert(t).second);
    CHECK(f.index_of(t) == i);
    for (std::uint64_t pos = 0; pos < f.flip_pos(i); ++pos)
      CHECK(t.bit_at(pos) == f.limit.bit_at(pos));
    CHECK(t.bit_at(f.flip_pos(i)) != f.limit.bit_at(f.flip_pos(i)));
  }
}

TEST_CASE("block membership per kind") {
  CHECK(block_member(fan0(), TheoryPoint::parse("001~0")));
  CHECK(!block_member(CubeBlock{cube0()}, TheoryPoint::parse("~01")));  // bit 1 violates Fixed0
  CHECK(block_member(CubeBlock{cube0()}, TheoryPoint()));
  CHECK(block_member(FinsetBlock{{TheoryPoint()}}, TheoryPoint()));
  FanBlock noflag = fan0();
  CHECK(!block_member(noflag, TheoryPoint()));
  noflag.include_limit = true;
  CHECK(block_member(noflag, TheoryPoint()));
}

TEST_CASE("fan-array points decode back to their violation position") {
  FanArrayBlock fa{cube0(), 1, false, {}};
  std::set<TheoryPoint> seen;
  std::set<std::uint64_t> positions;
  for (std::uint64_t j = 0; j < 4; ++j)
    for (std::uint64_t i = 0; i < 4; ++i) {
      std::uint64_t q = fa.violation_pos(j, i);
      CHECK(positions.insert(q).second);  // one fan point per position
      TheoryPoint u = fa.fan_point(j, i);
      CHECK(seen.insert(u).second);
      CHECK(block_member(fa, u));
      CHECK(!cube0().contains(u));
      auto v = cube0().violations(u);
      REQUIRE(v.positions.size() == 1);
      CHECK(!v.periodic);
      CHECK(v.positions[0] == q);
      CHECK(fa.point_at_violation(q) == u);
    }
  // Base points are members only when the base flag is set.
  CHECK(!block_member(fa, TheoryPoint()));
  FanArrayBlock with_base = fa;
  with_base.include_base = true;
  CHECK(block_member(with_base, TheoryPoint()));
  // Arrays with distinct codings have disjoint fan sets.
  FanArrayBlock other{cube0(), 2, false, {}};
  for (const auto& u : seen) CHECK(!block_member(other, u));
}

TEST_CASE("fan-array exclusions remove single points") {
  FanArrayBlock fa{cube0(), 1, false, {}};
  TheoryPoint u = fa.fan_point(0, 0);
  std::uint64_t q = fa.violation_pos(0, 0);
  FanArrayBlock punct = fa;
  punct.excluded = {q};
  CHECK(block_member(fa, u));
  CHECK(!block_member(punct, u));
  CHECK(block_member(punct, fa.fan_point(0, 1)));
}

TEST_CASE("clopen_count on fans matches brute force") {
  FanBlock f = fan0();
  Sentence p0 = Sentence::atom(0);
  Trichotomy t = block_clopen_count(f, p0);
  REQUIRE(t.is_finite());
  CHECK(t.points == std::vector<TheoryPoint>{TheoryPoint::parse("1~0")});
  CHECK(t.points == fan_slice(f, p0, 40));  // brute force agrees

  // The limit satisfies the complement, so cofinitely many members do.
  CHECK(block_clopen_count(f, Sentence::negation(p0)).is_infinite());
  CHECK(fan_slice(f, Sentence::negation(p0), 40).size() >= 30);

  FanBlock with_limit = f;
  with_limit.include_limit = true;
  Sentence none = Sentence::falsity();
  CHECK(block_clopen_count(with_limit, none).is_empty());
}

TEST_CASE("clopen_count on cubes is empty or infinite") {
  CubeBlock c{cube0()};
  CHECK(block_clopen_count(c, Sentence::atom(1)).is_empty());  // Fixed0 coordinate
  CHECK(block_clopen_count(c, Sentence::atom(0)).is_infinite());
  CHECK(block_clopen_count(c, Sentence::truth()).is_infinite());
}

TEST_CASE("clopen_count on fan-arrays") {
  FanArrayBlock fa{cube0(), 1, false, {}};
  // No window satisfies P1 under the mask, so only the finitely many fan
  // points flipping coordinate 1 remain; coding position 1 is unused here.
  Trichotomy t = block_clopen_count(fa, Sentence::atom(1));
  CHECK((t.is_finite() || t.is_empty()));
  for (const auto& u : t.points) CHECK(satisfies(u, Sentence::atom(1)));
  CHECK(block_clopen_count(fa, Sentence::negation(Sentence::atom(1))).is_infinite());
  // Cross-check the finite slice against direct enumeration.
  std::vector<TheoryPoint> expect;
  for (std::uint64_t j = 0; j < 8; ++j)
    for (std::uint64_t i = 0; i < 8; ++i) {
      if (fa.violation_pos(j, i) > 1) continue;
      TheoryPoint u = fa.fan_point(j, i);
      if (satisfies(u, Sentence::atom(1))) expect.push_back(u);
    }
  CHECK(t.points.size() == expect.size());
}

TEST_CASE("separation depth isolates fan members") {
  FanBlock f = fan0();
  auto d = block_separation_depth(f, f.member_at(2));
  REQUIRE(d.has_value());
  CHECK(*d == 3);  // flip position + 1
  CHECK(!block_separation_depth(f, f.limit));  // the limit accumulates
  auto d2 = block_separation_depth(CubeBlock{cube0()}, TheoryPoint::parse("~01"));
  REQUIRE(d2.has_value());
  CHECK(*d2 == 2);  // first mask violation at coordinate 1
  CHECK(!block_separation_depth(CubeBlock{cube0()}, TheoryPoint()));
}

TEST_CASE("fan_indices_in_cube finds the consistent progression") {
  // Flips at even positions stay consistent with the even-Free mask when
  // the deviation is empty; odd flips violate Fixed0.
  FanBlock evens{TheoryPoint(), 2, 0, {}, false};
  IndexSet in = fan_indices_in_cube(evens, cube0());
  for (std::uint64_t i = 0; i < 12; ++i) CHECK(in.contains(i));
  FanBlock odds{TheoryPoint(), 2, 1, {}, false};
  IndexSet none = fan_indices_in_cube(odds, cube0());
  CHECK(none.empty());
  // Brute-force cross-check on a mixed-stride fan.
  FanBlock mixed{TheoryPoint::parse("~0"), 3, 1, bits_from_string("1"), false};
  IndexSet got = fan_indices_in_cube(mixed, cube0());
  for (std::uint64_t i = 0; i < 40; ++i)
    CHECK(got.contains(i) == cube0().contains(mixed.member_at(i)));
}

TEST_CASE("fan_indices_in_fan solves the flip congruence") {
  FanBlock whole = fan0();
  FanBlock evens{TheoryPoint(), 2, 0, {}, false};
  IndexSet hits = fan_indices_in_fan(whole, evens);
  for (std::uint64_t i = 0; i < 30; ++i) CHECK(hits.contains(i) == (i % 2 == 0));
  // Different deviation words share no member.
  FanBlock dev1{TheoryPoint(), 1, 0, bits_from_string("1"), false};
  CHECK(fan_indices_in_fan(whole, dev1).empty());
  // Different limits meet in at most finitely many points.
  FanBlock other{TheoryPoint::parse("~01"), 3, 0, {}, false};
  IndexSet cross = fan_indices_in_fan(whole, other);
  for (std::uint64_t i = 0; i < 30; ++i)
    CHECK(cross.contains(i) == other.index_of(whole.member_at(i)).has_value());
}

TEST_CASE("trichotomy agrees with the projection oracle") {
  // Dual route: classify block slices symbolically, then recount them from
  // the depth projection of the single-block family.
  std::vector<Block> blocks{fan0(),
                            FanBlock{TheoryPoint::parse("~01"), 2, 1, bits_from_string("1"), true},
                            CubeBlock{cube0()},
                            FanArrayBlock{cube0(), 1, false, {}},
                            FinsetBlock{{TheoryPoint(), TheoryPoint::parse("11~0")}}};
  std::vector<Sentence> sentences{
      Sentence::atom(0),
      Sentence::negation(Sentence::atom(1)),
      Sentence::conjunction(Sentence::atom(0), Sentence::negation(Sentence::atom(2))),
      Sentence::disjunction(Sentence::atom(3), Sentence::atom(1)),
      Sentence::conjunction(Sentence::negation(Sentence::atom(0)),
                            Sentence::conjunction(Sentence::negation(Sentence::atom(1)),
                                                  Sentence::negation(Sentence::atom(2)))),
      Sentence::truth(),
      Sentence::falsity()};
  for (const auto& b : blocks) {
    Family single({b});
    for (const auto& phi : sentences) {
      Trichotomy t = block_clopen_count(b, phi);
      std::uint64_t depth = static_cast<std::uint64_t>(phi.max_index() + 1);
      if (depth == 0) depth = 1;
      DepthProjection pr = project(single, depth);
      std::vector<TheoryPoint> finite_members;
      bool has_infinite = false;
      for (const auto& [w, tri] : pr.cells) {
        if (!satisfies(TheoryPoint(bits_from_string(w), Bits{false}), phi)) continue;
        if (tri.is_infinite())
          has_infinite = true;
        else
          finite_members.insert(finite_members.end(), tri.points.begin(), tri.points.end());
      }
      if (t.is_infinite()) {
        CHECK(has_infinite);
      } else {
        CHECK(!has_infinite);
        Trichotomy expect = Trichotomy::finite(std::move(finite_members));
        CHECK(t.points == expect.points);
      }
    }
  }
}
