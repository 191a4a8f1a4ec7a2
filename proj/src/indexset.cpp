#include "theoria/indexset.hpp"

#include <algorithm>

namespace theoria {

namespace {
constexpr std::uint64_t kModCap = 1u << 16;
}

IndexSet IndexSet::all() {
  IndexSet s(0, 1);
  s.residues_.insert(0);
  return s;
}

IndexSet IndexSet::finite(std::vector<std::uint64_t> members) {
  IndexSet s(0, 1);
  for (auto m : members) s.low_.insert(m);
  if (!s.low_.empty()) s.horizon_ = *s.low_.rbegin() + 1;
  return s;
}

IndexSet IndexSet::progression(std::uint64_t first, std::uint64_t step) {
  if (step == 0) fail(Errc::Internal, "progression step must be positive");
  IndexSet s(first, step);
  s.residues_.insert(first % step);
  return s;
}

IndexSet IndexSet::eventually_periodic(std::uint64_t horizon, std::vector<std::uint64_t> low,
                                       std::uint64_t modulus, std::vector<std::uint64_t> residues) {
  if (modulus == 0 || modulus > kModCap) fail(Errc::CapExceeded, "index-set modulus out of range");
  IndexSet s(horizon, modulus);
  for (auto m : low) {
    if (m >= horizon) fail(Errc::Internal, "low member at or above horizon");
    s.low_.insert(m);
  }
  for (auto r : residues) s.residues_.insert(r % modulus);
  s.normalize();
  return s;
}

IndexSet IndexSet::from_periodic_predicate(std::uint64_t horizon, std::uint64_t modulus,
                                           const std::function<bool(std::uint64_t)>& pred) {
  if (modulus == 0 || modulus > kModCap) fail(Errc::CapExceeded, "index-set modulus out of range");
  IndexSet s(horizon, modulus);
  for (std::uint64_t i = 0; i < horizon; ++i)
    if (pred(i)) s.low_.insert(i);
  for (std::uint64_t k = 0; k < modulus; ++k) {
    std::uint64_t probe = horizon + k;
    if (pred(probe)) s.residues_.insert(probe % modulus);
  }
  s.normalize();
  return s;
}

void IndexSet::normalize() {
  if (residues_.empty()) {
    horizon_ = low_.empty() ? 0 : *low_.rbegin() + 1;
    modulus_ = 1;
  }
}

bool IndexSet::contains(std::uint64_t i) const {
  if (i < horizon_) return low_.count(i) > 0;
  return residues_.count(i % modulus_) > 0;
}

std::vector<std::uint64_t> IndexSet::finite_members() const {
  if (!finite_only()) fail(Errc::Internal, "finite_members on an infinite index set");
  return {low_.begin(), low_.end()};
}

std::vector<std::uint64_t> IndexSet::members_below(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < n; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

IndexSet IndexSet::unite(const IndexSet& o) const {
  std::uint64_t h = std::max(horizon_, o.horizon_);
  std::uint64_t m = lcm_guarded(modulus_, o.modulus_, kModCap);
  IndexSet s(h, m);
  for (std::uint64_t i = 0; i < h; ++i)
    if (contains(i) || o.contains(i)) s.low_.insert(i);
  for (std::uint64_t k = 0; k < m; ++k) {
    std::uint64_t probe = h + k;
    if (contains(probe) || o.contains(probe)) s.residues_.insert(probe % m);
  }
  s.normalize();
  return s;
}

IndexSet IndexSet::intersect(const IndexSet& o) const {
  std::uint64_t h = std::max(horizon_, o.horizon_);
  std::uint64_t m = lcm_guarded(modulus_, o.modulus_, kModCap);
  IndexSet s(h, m);
  for (std::uint64_t i = 0; i < h; ++i)
    if (contains(i) && o.contains(i)) s.low_.insert(i);
  for (std::uint64_t k = 0; k < m; ++k) {
    std::uint64_t probe = h + k;
    if (contains(probe) && o.contains(probe)) s.residues_.insert(probe % m);
  }
  s.normalize();
  return s;
}

IndexSet IndexSet::complement() const {
  IndexSet s(horizon_, modulus_);
  for (std::uint64_t i = 0; i < horizon_; ++i)
    if (!low_.count(i)) s.low_.insert(i);
  for (std::uint64_t r = 0; r < modulus_; ++r)
    if (!residues_.count(r)) s.residues_.insert(r);
  s.normalize();
  return s;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> IndexSet::progressions() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (auto r : residues_) {
    std::uint64_t first = horizon_ + (r + modulus_ - horizon_ % modulus_) % modulus_;
    out.emplace_back(first, modulus_);
  }
  return out;
}

}  // namespace theoria
