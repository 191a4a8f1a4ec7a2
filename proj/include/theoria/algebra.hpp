#pragma once

#include <cstdint>
#include <vector>

#include "theoria/closure.hpp"
#include "theoria/parallel.hpp"

namespace theoria {

/// Finite truncation of the subset algebra over a family's least
/// generating set: 2^n elements for n designated generator points, with
/// meet/join/complement acting on the generator subsets and denotations
/// computed by the closure engine.
struct AlgebraElement {
  std::uint64_t gen_mask = 0;
  Family generator_subset;
  Family denotation;  // closure of the generator subset
};

struct BooleanAlgebra {
  std::vector<TheoryPoint> generators;
  std::vector<AlgebraElement> elements;  // indexed by gen_mask

  const AlgebraElement& top() const { return elements.back(); }
  const AlgebraElement& bottom() const { return elements.front(); }
  bool is_atom(std::uint64_t mask) const { return mask && !(mask & (mask - 1)); }
};

inline constexpr std::size_t kAlgebraGeneratorCap = 16;

/// Picks the first `n` generator points out of the least generating set.
/// NoLgs without one, CapExceeded past the truncation cap.
BooleanAlgebra build_algebra(const Family& f, std::size_t n);
BooleanAlgebra build_algebra_with(const Family& f, std::vector<TheoryPoint> generators);

/// Order isomorphism between generator subsets and denotations, and the
/// algebra ops commuting with the subset ops. Exhaustive over pairs up to
/// 2^8 elements, sampled (10^4 pairs) above.
bool iso_check(const BooleanAlgebra& alg, par::Mode mode = par::default_mode());

/// Derivative chain F, F', F'', ... down to the first self-derived entry.
struct CBProfile {
  std::vector<Family> chain;
  std::size_t rank = 0;       // index of the stable entry
  bool kernel_empty = false;  // stable entry is the empty family
};

CBProfile cb_profile(const Family& f);

}  // namespace theoria
