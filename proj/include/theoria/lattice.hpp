#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "theoria/closure.hpp"
#include "theoria/parallel.hpp"

namespace theoria {

/// An E-closed family together with its least-generating-set analysis.
class LatticeElement {
 public:
  /// Close the family first, then analyze.
  static LatticeElement close_of(const Family& f);
  /// Requires an already closed family (NotClosed otherwise).
  static LatticeElement from_closed(const Family& f);

  const Family& family() const { return family_; }
  const GenSetReport& lgs() const { return lgs_; }
  bool has_least() const { return lgs_.has_least; }
  /// The least generating set; NoLgs when none exists.
  const Family& least() const;

 private:
  LatticeElement(Family f, GenSetReport r) : family_(std::move(f)), lgs_(std::move(r)) {}
  Family family_;
  GenSetReport lgs_;
};

/// Plain intersection; closed inputs give a closed result. The result may
/// lack a least generating set.
LatticeElement meet(const LatticeElement& a, const LatticeElement& b);
/// Closed union; for closed inputs the closure adds nothing, which the
/// engine asserts.
LatticeElement join(const LatticeElement& a, const LatticeElement& b);
/// Closure of the isolated points of the intersection. Requires both
/// inputs to have least generating sets.
LatticeElement meet_prime(const LatticeElement& a, const LatticeElement& b);
bool leq(const LatticeElement& a, const LatticeElement& b);

struct LeqDecomposition {
  Family part21;  // shared generators
  Family part22;  // generators used for the lower element's own generators
  Family part23;  // the untouched remainder
};

LeqDecomposition decompose(const LatticeElement& a, const LatticeElement& b);
bool check_prop26(const LatticeElement& a, const LatticeElement& b);
bool check_prop21(const LatticeElement& a, const LatticeElement& b);

struct DistributivityReport {
  bool identity1 = false;  // a ^' (b v c) = (a ^' b) v (a ^' c)
  bool identity2 = false;  // a v (b ^' c) = (a v b) ^' (a v c)
  Family lhs1, rhs1, lhs2, rhs2;
  bool holds() const { return identity1 && identity2; }
};

DistributivityReport check_distributivity(const LatticeElement& a, const LatticeElement& b,
                                          const LatticeElement& c);

enum class LatticeOps { JoinOnly, JoinMeetPrime };

struct GeneratedLattice {
  std::vector<LatticeElement> elements;  // deduplicated by family_eq
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // cover edges (lo, hi)
  std::vector<std::vector<std::size_t>> join_table;
  std::vector<std::vector<std::size_t>> meet_prime_table;  // empty for JoinOnly
  bool used_meet_prime = false;
  bool cap_exceeded = false;  // partial result when the element cap was hit
};

GeneratedLattice generate_lattice(const std::vector<LatticeElement>& gens, LatticeOps ops,
                                  std::size_t cap = 4096, par::Mode mode = par::default_mode());

std::string lattice_dot(const GeneratedLattice& l);

}  // namespace theoria
