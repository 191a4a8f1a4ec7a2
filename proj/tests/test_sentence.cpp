#include <doctest.h>

#include <random>

#include "theoria/blocks.hpp"
#include "theoria/sentence.hpp"

using namespace theoria;

TEST_CASE("satisfies evaluates boolean combinations of coordinates") {
  TheoryPoint zero;
  CHECK(satisfies(zero, Sentence::negation(Sentence::atom(3))));
  TheoryPoint p = TheoryPoint::parse("101~0");
  CHECK(satisfies(p, Sentence::conjunction(Sentence::atom(0),
                                           Sentence::negation(Sentence::atom(1)))));
  // (01)^w has zeros at the even coordinates.
  TheoryPoint alt = TheoryPoint::parse("~01");
  CHECK(!satisfies(alt, Sentence::disjunction(Sentence::atom(0), Sentence::atom(2))));
}

TEST_CASE("max_index and constants") {
  CHECK(Sentence::truth().max_index() == -1);
  CHECK(Sentence::falsity().max_index() == -1);
  Sentence phi = Sentence::disjunction(Sentence::atom(4), Sentence::negation(Sentence::atom(9)));
  CHECK(phi.max_index() == 9);
  CHECK(satisfies(TheoryPoint(), Sentence::truth()));
  CHECK(!satisfies(TheoryPoint(), Sentence::falsity()));
}

TEST_CASE("prefix sentences pin exactly the leading bits") {
  TheoryPoint p = TheoryPoint::parse("11~0");
  Sentence phi = Sentence::prefix_of(p, 2);
  CHECK(phi.str() == "P0 & P1");
  CHECK(satisfies(p, phi));
  CHECK(!satisfies(TheoryPoint::parse("10~0"), phi));
  CHECK(Sentence::prefix_of(p, 0).str() == "true");
}

TEST_CASE("evaluation only reads coordinates up to max_index") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    // Random small sentence over atoms 0..5.
    std::function<Sentence(int)> gen = [&](int depth) -> Sentence {
      if (depth == 0 || rng() % 3 == 0) return Sentence::atom(rng() % 6);
      switch (rng() % 3) {
        case 0: return Sentence::negation(gen(depth - 1));
        case 1: return Sentence::conjunction(gen(depth - 1), gen(depth - 1));
        default: return Sentence::disjunction(gen(depth - 1), gen(depth - 1));
      }
    };
    Sentence phi = gen(3);
    std::string prefix;
    for (int i = 0; i < 8; ++i) prefix.push_back(rng() & 1 ? '1' : '0');
    TheoryPoint base = normalize_point(prefix, "0");
    std::uint64_t high = phi.max_index() + 1 + rng() % 8;
    TheoryPoint flipped = flip_bit(base, high);
    CHECK(satisfies(base, phi) == satisfies(flipped, phi));
  }
}
