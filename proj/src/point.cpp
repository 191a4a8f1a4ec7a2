#include "theoria/point.hpp"

#include <algorithm>

namespace theoria {

std::string bits_to_string(const Bits& b) {
  std::string s;
  s.reserve(b.size());
  for (bool v : b) s.push_back(v ? '1' : '0');
  return s;
}

Bits bits_from_string(const std::string& s) {
  Bits b;
  b.reserve(s.size());
  for (char c : s) {
    if (c == '0')
      b.push_back(false);
    else if (c == '1')
      b.push_back(true);
    else
      fail(Errc::MalformedPoint, std::string("bad bit character '") + c + "'");
  }
  return b;
}

namespace {

// Smallest divisor d of |w| such that w is (w[0..d))^{|w|/d}.
std::size_t primitive_root_len(const Bits& w) {
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < w.size() && ok; ++i) ok = (w[i] == w[i % d]);
    if (ok) return d;
  }
  return w.size();
}

}  // namespace

TheoryPoint::TheoryPoint(Bits prefix, Bits period) {
  if (period.empty()) fail(Errc::MalformedPoint, "point period must be nonempty");
  period.resize(primitive_root_len(period));
  // Absorb prefix bits that merely re-phase the period: u.b (w.b)^w = u (b.w)^w.
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  prefix_ = std::move(prefix);
  period_ = std::move(period);
}

TheoryPoint TheoryPoint::parse(const std::string& text) {
  auto tilde = text.find('~');
  if (tilde == std::string::npos) fail(Errc::MalformedPoint, "point literal needs '~': " + text);
  return TheoryPoint(bits_from_string(text.substr(0, tilde)), bits_from_string(text.substr(tilde + 1)));
}

bool TheoryPoint::bit_at(std::uint64_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

std::string TheoryPoint::str() const { return bits_to_string(prefix_) + "~" + bits_to_string(period_); }

TheoryPoint normalize_point(const Bits& prefix, const Bits& period) { return TheoryPoint(prefix, period); }

TheoryPoint normalize_point(const std::string& prefix, const std::string& period) {
  return TheoryPoint(bits_from_string(prefix), bits_from_string(period));
}

CompareResult point_compare(const TheoryPoint& p, const TheoryPoint& q) {
  if (p == q) return PointsEqual{};
  // Distinct canonical forms differ within this horizon.
  std::uint64_t horizon = p.prefix().size() + q.prefix().size() +
                          lcm_guarded(p.period().size(), q.period().size());
  for (std::uint64_t i = 0; i <= horizon; ++i)
    if (p.bit_at(i) != q.bit_at(i)) return FirstDifference{i};
  fail(Errc::Internal, "distinct canonical points agree past the decision horizon");
}

std::optional<std::uint64_t> first_difference(const TheoryPoint& p, const TheoryPoint& q) {
  auto r = point_compare(p, q);
  if (std::holds_alternative<PointsEqual>(r)) return std::nullopt;
  return std::get<FirstDifference>(r).index;
}

}  // namespace theoria
