#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "theoria/common.hpp"

namespace theoria {

/// Eventually periodic subset of N: members below the horizon are listed
/// explicitly, members at or above it are exactly the residue classes
/// mod `modulus`. Closed under union/intersection/complement, which is
/// what the fan index calculus needs.
class IndexSet {
 public:
  IndexSet() : horizon_(0), modulus_(1) {}  // empty set

  static IndexSet none() { return IndexSet(); }
  static IndexSet all();
  static IndexSet finite(std::vector<std::uint64_t> members);
  static IndexSet single(std::uint64_t i) { return finite({i}); }
  /// {first + k*step : k >= 0}
  static IndexSet progression(std::uint64_t first, std::uint64_t step);
  /// Members below `horizon` listed, members >= horizon are the residues.
  static IndexSet eventually_periodic(std::uint64_t horizon, std::vector<std::uint64_t> low,
                                      std::uint64_t modulus, std::vector<std::uint64_t> residues);
  /// Builds from a predicate known to be periodic (mod `modulus`) at and
  /// beyond `horizon`; the predicate is sampled exactly once per class.
  static IndexSet from_periodic_predicate(std::uint64_t horizon, std::uint64_t modulus,
                                          const std::function<bool(std::uint64_t)>& pred);

  bool contains(std::uint64_t i) const;
  bool empty() const { return low_.empty() && residues_.empty(); }
  bool finite_only() const { return residues_.empty(); }
  std::vector<std::uint64_t> finite_members() const;  // requires finite_only()
  /// Members below n, in order.
  std::vector<std::uint64_t> members_below(std::uint64_t n) const;

  std::uint64_t horizon() const { return horizon_; }
  std::uint64_t modulus() const { return modulus_; }
  const std::set<std::uint64_t>& low() const { return low_; }
  const std::set<std::uint64_t>& residues() const { return residues_; }

  IndexSet unite(const IndexSet& o) const;
  IndexSet intersect(const IndexSet& o) const;
  IndexSet complement() const;  // within N
  IndexSet minus(const IndexSet& o) const { return intersect(o.complement()); }

  /// The infinite part as plain progressions (first, step), first >= horizon.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> progressions() const;

 private:
  IndexSet(std::uint64_t horizon, std::uint64_t modulus) : horizon_(horizon), modulus_(modulus) {}
  void normalize();

  std::uint64_t horizon_;
  std::uint64_t modulus_;
  std::set<std::uint64_t> low_;       // members < horizon_
  std::set<std::uint64_t> residues_;  // classes mod modulus_ for members >= horizon_
};

}  // namespace theoria
