#include <doctest.h>

#include "theoria/algebra.hpp"
#include "theoria/closure.hpp"
#include "theoria/gallery.hpp"

using namespace theoria;

namespace {

Family closed_fan0() { return closure(Family({FanBlock{TheoryPoint(), 1, 0, {}, false}})); }

}  // namespace

TEST_CASE("build_algebra materializes the subset algebra") {
  BooleanAlgebra alg = build_algebra(closed_fan0(), 3);
  CHECK(alg.elements.size() == 8);
  // Top denotation is the closure of the three generator points, which is
  // the finite set itself.
  const AlgebraElement& top = alg.top();
  CHECK(top.denotation.is_finite());
  CHECK(top.denotation.finite_points().size() == 3);
  BooleanAlgebra two = build_algebra(Family::of_points({TheoryPoint::parse("1~0")}), 1);
  CHECK(two.elements.size() == 2);
  CHECK_THROWS_AS(build_algebra(Family({CubeBlock{CubeMask::parse("~F0")}}), 2), Error);  // no lgs
  CHECK_THROWS_AS(build_algebra(closed_fan0(), 17), Error);  // cap
}

TEST_CASE("ten-generator truncation excludes the limit") {
  BooleanAlgebra alg = build_algebra(closed_fan0(), 10);
  CHECK(alg.elements.size() == 1024);
  CHECK(!member(alg.top().denotation, TheoryPoint()));  // finite subsets are closed
  CHECK(iso_check(alg));
}

TEST_CASE("iso_check validates order isomorphism and op transport") {
  CHECK(iso_check(build_algebra(closed_fan0(), 3)));
  CHECK(iso_check(build_algebra(Family::of_points({TheoryPoint()}), 1)));
  // Duplicated generators would break the isomorphism; the constructor
  // only draws from the least generating set so members stay distinct.
  BooleanAlgebra alg = build_algebra(closed_fan0(), 5);
  for (const auto& e : alg.elements) {
    CHECK(family_eq(e.denotation, closure(e.generator_subset)));
  }
}

TEST_CASE("algebra atoms are the singleton generator subsets") {
  BooleanAlgebra alg = build_algebra(closed_fan0(), 4);
  std::size_t atoms = 0;
  for (const auto& e : alg.elements)
    if (alg.is_atom(e.gen_mask)) {
      ++atoms;
      CHECK(e.generator_subset.finite_points().size() == 1);
    }
  CHECK(atoms == 4);
}

TEST_CASE("cb_profile derivative chains") {
  CBProfile fan = cb_profile(closed_fan0());
  REQUIRE(fan.chain.size() == 3);
  CHECK(family_eq(fan.chain[1], Family::of_points({TheoryPoint()})));
  CHECK(fan.chain[2].is_empty());
  CHECK(fan.rank == 2);
  CHECK(fan.kernel_empty);

  CBProfile cube = cb_profile(Family({CubeBlock{CubeMask::parse("~F0")}}));
  CHECK(cube.rank == 0);
  CHECK(!cube.kernel_empty);

  CBProfile fin = cb_profile(Family::of_points({TheoryPoint(), TheoryPoint::parse("1~0")}));
  CHECK(fin.rank == 1);
  CHECK(fin.kernel_empty);

  // A fan-array keeps its base cube as the perfect kernel.
  CBProfile arr = cb_profile(closure(Family({FanArrayBlock{CubeMask::parse("~F0"), 1, false, {}}})));
  CHECK(!arr.kernel_empty);
  CHECK(arr.rank == 1);
}
