#include <doctest.h>

#include "theoria/gallery.hpp"
#include "theoria/exports.hpp"
#include "theoria/lattice.hpp"

using namespace theoria;

namespace {

LatticeElement closed_fan(Bits dev = {}) {
  return LatticeElement::close_of(Family({FanBlock{TheoryPoint(), 1, 0, std::move(dev), false}}));
}

LatticeElement point_elem(const std::string& p) {
  return LatticeElement::close_of(Family::of_points({TheoryPoint::parse(p)}));
}

LatticeElement empty_elem() { return LatticeElement::from_closed(Family()); }

}  // namespace

TEST_CASE("meet is plain intersection") {
  LatticeElement a = closed_fan();
  CHECK(family_eq(meet(a, a).family(), a.family()));
  CHECK(meet(a, empty_elem()).family().is_empty());
  // The gallery counterexample: both arrays have least generating sets,
  // their meet is the bare cube and has none.
  GalleryCase c = make_intersection_counterexample();
  LatticeElement x = LatticeElement::from_closed(c.families[0].second);
  LatticeElement y = LatticeElement::from_closed(c.families[1].second);
  LatticeElement m = meet(x, y);
  CHECK(x.has_least());
  CHECK(y.has_least());
  CHECK(!m.has_least());
  CHECK(family_eq(m.family(), c.families[2].second));
}

TEST_CASE("join is closed union") {
  LatticeElement a = closed_fan();
  LatticeElement b = closed_fan(bits_from_string("1"));
  LatticeElement j = join(a, b);
  CHECK(j.has_least());
  CHECK(family_eq(j.family(), family_union(a.family(), b.family())));
  CHECK(family_eq(join(a, empty_elem()).family(), a.family()));
  LatticeElement limit = point_elem("~0");
  CHECK(family_eq(join(a, limit).family(), a.family()));  // absorption of a subset
  CHECK(check_prop21(a, b));
  CHECK(check_prop21(point_elem("1~0"), point_elem("11~0")));
}

TEST_CASE("meet_prime recovers isolated points of the meet") {
  LatticeElement a = closed_fan();
  LatticeElement b = closed_fan(bits_from_string("1"));
  LatticeElement mp = meet_prime(a, b);
  CHECK(family_eq(mp.family(), Family::of_points({TheoryPoint()})));
  CHECK(intersect(a.least(), b.least()).is_empty());
  CHECK(family_eq(meet_prime(a, a).family(), a.family()));
  LatticeElement t2 = point_elem("001~0");
  CHECK(family_eq(meet_prime(a, t2).family(), t2.family()));
  GalleryCase c = make_intersection_counterexample();
  LatticeElement no_lgs = LatticeElement::from_closed(c.families[2].second);
  CHECK_THROWS_AS(meet_prime(a, no_lgs), Error);
}

TEST_CASE("leq is family containment") {
  LatticeElement a = closed_fan();
  LatticeElement limit = point_elem("~0");
  CHECK(leq(limit, a));
  CHECK(leq(a, a));
  CHECK(!leq(a, limit));
}

TEST_CASE("decompose splits the upper generators three ways") {
  LatticeElement fan = closed_fan();
  Family upper = family_union(fan.family(), Family::of_points({TheoryPoint::parse("111~0")}));
  LatticeElement b = LatticeElement::close_of(upper);

  LatticeElement a = point_elem("~0");
  LeqDecomposition d = decompose(a, b);
  CHECK(d.part21.is_empty());
  CHECK(family_eq(d.part22, fan.least()));
  CHECK(family_eq(d.part23, Family::of_points({TheoryPoint::parse("111~0")})));

  LeqDecomposition same = decompose(b, b);
  CHECK(family_eq(same.part21, b.least()));
  CHECK(same.part22.is_empty());
  CHECK(same.part23.is_empty());

  LeqDecomposition grow = decompose(fan, b);
  CHECK(family_eq(grow.part21, fan.least()));
  CHECK(grow.part22.is_empty());
  CHECK(family_eq(grow.part23, Family::of_points({TheoryPoint::parse("111~0")})));
  CHECK(check_prop26(fan, b));
  CHECK(check_prop26(b, b));
  CHECK(check_prop26(point_elem("1~0"),
                     LatticeElement::close_of(Family::of_points(
                         {TheoryPoint::parse("1~0"), TheoryPoint::parse("11~0")}))));
}

TEST_CASE("distributivity identities") {
  LatticeElement a = closed_fan();
  LatticeElement b = closed_fan(bits_from_string("1"));
  LatticeElement p = point_elem("11~0");
  CHECK(check_distributivity(a, b, p).holds());
  CHECK(check_distributivity(a, empty_elem(), empty_elem()).holds());
  CHECK(check_distributivity(a, a, a).holds());
}

TEST_CASE("generate_lattice reaches the fixed point") {
  LatticeElement p = point_elem("1~0");
  LatticeElement q = point_elem("01~0");
  GeneratedLattice four = generate_lattice({p, q}, LatticeOps::JoinMeetPrime);
  CHECK(four.elements.size() == 4);  // bottom, both atoms, their join
  GeneratedLattice one = generate_lattice({p}, LatticeOps::JoinOnly);
  CHECK(one.elements.size() == 1);

  GalleryCase c = make_fan_pair();
  LatticeElement t1 = LatticeElement::from_closed(c.families[0].second);
  LatticeElement t2 = LatticeElement::from_closed(c.families[1].second);
  GeneratedLattice lat = generate_lattice({t1, t2}, LatticeOps::JoinMeetPrime);
  CHECK(lat.elements.size() == 4);
  bool has_t0 = false;
  for (const auto& e : lat.elements)
    if (family_eq(e.family(), Family::of_points({TheoryPoint()}))) has_t0 = true;
  CHECK(has_t0);
  // The meet_prime table sends the two fans to the shared limit point.
  std::size_t i1 = 0, i2 = 0, bottom = 0;
  for (std::size_t i = 0; i < lat.elements.size(); ++i) {
    if (family_eq(lat.elements[i].family(), t1.family())) i1 = i;
    if (family_eq(lat.elements[i].family(), t2.family())) i2 = i;
    if (family_eq(lat.elements[i].family(), Family::of_points({TheoryPoint()}))) bottom = i;
  }
  CHECK(lat.meet_prime_table[i1][i2] == bottom);
  CHECK(lat.hasse.size() == 4);  // diamond
}

TEST_CASE("lattice exports") {
  LatticeElement p = point_elem("1~0");
  LatticeElement q = point_elem("01~0");
  GeneratedLattice lat = generate_lattice({p, q}, LatticeOps::JoinMeetPrime);
  std::string dot = lattice_dot(lat);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("element cap yields a partial result") {
  LatticeElement p = point_elem("1~0");
  LatticeElement q = point_elem("01~0");
  LatticeElement r = point_elem("001~0");
  GeneratedLattice lat = generate_lattice({p, q, r}, LatticeOps::JoinMeetPrime, 3);
  CHECK(lat.cap_exceeded);
  CHECK(lat.elements.size() >= 3);
}

TEST_CASE("json export shapes") {
  LatticeElement p = point_elem("1~0");
  LatticeElement q = point_elem("01~0");
  GeneratedLattice lat = generate_lattice({p, q}, LatticeOps::JoinMeetPrime);
  Json h = hasse_json(lat);
  REQUIRE(h.contains("nodes"));
  REQUIRE(h.contains("edges"));
  CHECK(h["nodes"].size() == 4);
  CHECK(h["edges"].size() == 4);
  CHECK(h["nodes"][0].contains("id"));
  CHECK(h["nodes"][0].contains("name"));
  Json tables = op_tables_json(lat);
  CHECK(tables["join"].size() == 4);
  CHECK(tables["meetPrime"].size() == 4);

  GenSetReport r = least_generating_set(p.family());
  Json g = gen_set_report_json(r);
  CHECK(g.contains("isolated"));
  CHECK(g["hasLeast"] == true);
  CHECK(g.contains("leastGenSet"));
  REQUIRE(g["witnesses"].is_array());
  CHECK(g["witnesses"][0].contains("point"));
  CHECK(g["witnesses"][0].contains("sentence"));
}
