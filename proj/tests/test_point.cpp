#include <doctest.h>

#include <numeric>
#include <random>

#include "theoria/point.hpp"

using namespace theoria;

namespace {

// Reference denotation: expand a raw descriptor without canonicalizing.
bool raw_bit(const std::string& prefix, const std::string& period, std::uint64_t i) {
  if (i < prefix.size()) return prefix[i] == '1';
  return period[(i - prefix.size()) % period.size()] == '1';
}

bool same_denotation(const std::string& p1, const std::string& q1, const TheoryPoint& b,
                     std::uint64_t depth = 64) {
  for (std::uint64_t i = 0; i < depth; ++i)
    if (raw_bit(p1, q1, i) != b.bit_at(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("normalize_point canonical forms") {
  CHECK(normalize_point("10", "0") == normalize_point("1", "0"));
  CHECK(normalize_point("10", "0").str() == "1~0");
  CHECK(normalize_point("", "0101").str() == "~01");

  // Brute-force oracle: the canonical form denotes the same sequence and
  // no shorter prefix realizes it. "0101" with period "10" keeps its
  // prefix; the sequence 0101(10)^w really needs all four bits.
  TheoryPoint p = normalize_point("0101", "10");
  CHECK(same_denotation("0101", "10", p));
  CHECK(p.str() == "0101~10");
  TheoryPoint q = normalize_point("0101", "01");
  CHECK(same_denotation("0101", "01", q));
  CHECK(q.str() == "~01");
}

TEST_CASE("normalize_point rejects an empty period") {
  CHECK_THROWS_AS(normalize_point("10", ""), Error);
}

TEST_CASE("bit_at reads prefix then period") {
  TheoryPoint zero;  // 0^w
  CHECK(zero.bit_at(3) == false);
  TheoryPoint alt = TheoryPoint::parse("~01");
  CHECK(alt.bit_at(1001) == true);
  TheoryPoint pre = TheoryPoint::parse("101~0");
  CHECK(pre.bit_at(0) == true);
}

TEST_CASE("point_compare finds the first difference") {
  TheoryPoint zero;
  CHECK(std::holds_alternative<PointsEqual>(point_compare(zero, zero)));
  auto r = point_compare(zero, TheoryPoint::parse("001~0"));
  REQUIRE(std::holds_alternative<FirstDifference>(r));
  CHECK(std::get<FirstDifference>(r).index == 2);
  // (01)^w vs 01(10)^w: expansions 010101... and 011010... differ at 2.
  auto r2 = point_compare(TheoryPoint::parse("~01"), TheoryPoint::parse("01~10"));
  REQUIRE(std::holds_alternative<FirstDifference>(r2));
  CHECK(std::get<FirstDifference>(r2).index == 2);
}

TEST_CASE("canonical form is unique across pumped descriptors") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 500; ++n) {
    std::string prefix, period;
    std::size_t pl = rng() % 4, sl = 1 + rng() % 3;
    for (std::size_t i = 0; i < pl; ++i) prefix.push_back(rng() & 1 ? '1' : '0');
    for (std::size_t i = 0; i < sl; ++i) period.push_back(rng() & 1 ? '1' : '0');
    TheoryPoint canon = normalize_point(prefix, period);
    CHECK(same_denotation(prefix, period, canon));

    // Pump: repeat the period and shift phase into the prefix.
    std::string pumped_period = period + period;
    std::string pumped_prefix = prefix;
    std::size_t shift = rng() % 3;
    for (std::size_t i = 0; i < shift; ++i) {
      pumped_prefix.push_back(pumped_period[0]);
      pumped_period = pumped_period.substr(1) + pumped_period[0];
    }
    CHECK(normalize_point(pumped_prefix, pumped_period) == canon);
  }
}

TEST_CASE("point_compare horizon is decisive") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    std::string p1, q1, p2, q2;
    for (std::size_t i = 0, e = rng() % 4; i < e; ++i) p1.push_back(rng() & 1 ? '1' : '0');
    for (std::size_t i = 0, e = 1 + rng() % 3; i < e; ++i) q1.push_back(rng() & 1 ? '1' : '0');
    for (std::size_t i = 0, e = rng() % 4; i < e; ++i) p2.push_back(rng() & 1 ? '1' : '0');
    for (std::size_t i = 0, e = 1 + rng() % 3; i < e; ++i) q2.push_back(rng() & 1 ? '1' : '0');
    TheoryPoint a = normalize_point(p1, q1), b = normalize_point(p2, q2);
    std::uint64_t horizon = a.prefix().size() + b.prefix().size() +
                            std::lcm(a.period().size(), b.period().size());
    bool agree = true;
    for (std::uint64_t i = 0; i <= horizon; ++i)
      if (a.bit_at(i) != b.bit_at(i)) agree = false;
    CHECK(agree == (a == b));
  }
}
