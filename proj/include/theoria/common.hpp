#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace theoria {

enum class Errc {
  MalformedPoint,
  MalformedMask,
  UnsupportedIntersection,
  UnsupportedComparison,
  NotClosed,
  NoLgs,
  NotGenerating,
  NotComparable,
  CapExceeded,
  DepthTooLarge,
  ParseError,
  UndefinedName,
  UnknownSuite,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline std::uint64_t lcm_guarded(std::uint64_t a, std::uint64_t b, std::uint64_t cap = (1u << 20)) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t l = a / g * b;
  if (l == 0 || l > cap) fail(Errc::CapExceeded, "period lcm exceeds horizon cap");
  return l;
}

// Cantor pairing; bijection N^2 <-> N.
inline std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
  std::uint64_t s = x + y;
  return s * (s + 1) / 2 + y;
}

inline std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  // w = floor((sqrt(8z+1)-1)/2), fixed up to be exact on integers.
  std::uint64_t w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  std::uint64_t t = w * (w + 1) / 2;
  std::uint64_t y = z - t;
  std::uint64_t x = w - y;
  return {x, y};
}

}  // namespace theoria
