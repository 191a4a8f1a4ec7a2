#include "theoria/lattice.hpp"

#include <algorithm>

#include "theoria/common.hpp"

namespace theoria {

LatticeElement LatticeElement::close_of(const Family& f) {
  Family c = closure(f);
  return LatticeElement(c, least_generating_set(c));
}

LatticeElement LatticeElement::from_closed(const Family& f) {
  if (!is_closed(f)) fail(Errc::NotClosed, "lattice elements must be E-closed");
  return LatticeElement(f, least_generating_set(f));
}

const Family& LatticeElement::least() const {
  if (!lgs_.has_least) fail(Errc::NoLgs, "element has no least generating set");
  return *lgs_.least_gen_set;
}

LatticeElement meet(const LatticeElement& a, const LatticeElement& b) {
  return LatticeElement::from_closed(intersect(a.family(), b.family()));
}

LatticeElement join(const LatticeElement& a, const LatticeElement& b) {
  Family u = family_union(a.family(), b.family());
  if (!is_closed(u)) fail(Errc::Internal, "union of closed families came out non-closed");
  return LatticeElement::from_closed(u);
}

LatticeElement meet_prime(const LatticeElement& a, const LatticeElement& b) {
  if (!a.has_least() || !b.has_least())
    fail(Errc::NoLgs, "meet_prime requires least generating sets on both sides");
  Family cut = intersect(a.family(), b.family());
  return LatticeElement::from_closed(closure(isolated_points(cut)));
}

bool leq(const LatticeElement& a, const LatticeElement& b) {
  return family_subset(a.family(), b.family());
}

LeqDecomposition decompose(const LatticeElement& a, const LatticeElement& b) {
  if (!a.has_least() || !b.has_least()) fail(Errc::NoLgs, "decompose requires least generating sets");
  if (!leq(a, b)) fail(Errc::NotComparable, "decompose requires a <= b");
  const Family& t1 = a.least();
  const Family& t2 = b.least();
  LeqDecomposition out;
  out.part21 = intersect(t2, t1);
  Family rest = family_difference(t2, t1);
  Family lower_only = family_difference(t1, t2);  // generators of a not generators of b
  std::vector<Block> used;
  for (const auto& blk : t2.blocks()) {
    Family acc_of_block = acc_points(Family({blk}));
    if (intersect(acc_of_block, lower_only).is_empty()) continue;
    auto part = family_difference(Family({blk}), t1);
    used.insert(used.end(), part.blocks().begin(), part.blocks().end());
  }
  out.part22 = Family(std::move(used));
  out.part23 = family_difference(rest, out.part22);
  return out;
}

bool check_prop26(const LatticeElement& a, const LatticeElement& b) {
  LeqDecomposition d = decompose(a, b);
  Family rest = family_difference(b.least(), a.least());
  if (!rest.is_finite()) fail(Errc::NotComparable, "check_prop26 requires a finite generator difference");
  return family_eq(b.family(), family_union(a.family(), d.part23)) &&
         family_eq(b.least(), family_union(a.least(), d.part23));
}

bool check_prop21(const LatticeElement& a, const LatticeElement& b) {
  if (!a.has_least() || !b.has_least()) fail(Errc::NoLgs, "check_prop21 requires least generating sets");
  LatticeElement j = join(a, b);
  if (!j.has_least()) return false;
  Family bound = family_union(closure(a.least()), closure(b.least()));
  return family_subset(j.least(), bound);
}

DistributivityReport check_distributivity(const LatticeElement& a, const LatticeElement& b,
                                          const LatticeElement& c) {
  DistributivityReport r;
  r.lhs1 = meet_prime(a, join(b, c)).family();
  r.rhs1 = join(meet_prime(a, b), meet_prime(a, c)).family();
  r.identity1 = family_eq(r.lhs1, r.rhs1);
  r.lhs2 = join(a, meet_prime(b, c)).family();
  r.rhs2 = meet_prime(join(a, b), join(a, c)).family();
  r.identity2 = family_eq(r.lhs2, r.rhs2);
  return r;
}

GeneratedLattice generate_lattice(const std::vector<LatticeElement>& gens, LatticeOps ops,
                                  std::size_t cap, par::Mode mode) {
  GeneratedLattice out;
  out.used_meet_prime = (ops == LatticeOps::JoinMeetPrime);
  if (out.used_meet_prime)
    for (const auto& g : gens)
      if (!g.has_least()) fail(Errc::NoLgs, "meet_prime generation requires least generating sets");

  std::vector<LatticeElement>& elems = out.elements;
  auto find_elem = [&](const Family& f) -> std::size_t {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (family_eq(elems[i].family(), f)) return i;
    return elems.size();
  };
  for (const auto& g : gens)
    if (find_elem(g.family()) == elems.size()) elems.push_back(g);

  // Frontier iteration: evaluate candidate pairs in parallel, merge under a
  // single writer; confluent since deduplication is by family_eq.
  std::size_t settled = 0;
  while (settled < elems.size()) {
    if (elems.size() > cap) {
      out.cap_exceeded = true;
      break;
    }
    std::size_t n = elems.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = std::max(settled, i); j < n; ++j) pairs.emplace_back(i, j);
    settled = n;
    auto produced = par::map_indexed<std::vector<Family>>(
        pairs.size(),
        [&](std::size_t k) {
          auto [i, j] = pairs[k];
          std::vector<Family> fs;
          fs.push_back(join(elems[i], elems[j]).family());
          if (out.used_meet_prime) fs.push_back(meet_prime(elems[i], elems[j]).family());
          return fs;
        },
        mode);
    for (const auto& fs : produced)
      for (const auto& f : fs)
        if (find_elem(f) == elems.size()) elems.push_back(LatticeElement::from_closed(f));
  }

  std::size_t n = elems.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) below[i][j] = leq(elems[i], elems[j]) ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool covers = true;
      for (std::size_t k = 0; k < n && covers; ++k)
        if (k != i && k != j && below[i][k] && below[k][j]) covers = false;
      if (covers) out.hasse.emplace_back(i, j);
    }

  if (!out.cap_exceeded) {
    out.join_table.assign(n, std::vector<std::size_t>(n, 0));
    if (out.used_meet_prime) out.meet_prime_table.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        out.join_table[i][j] = find_elem(join(elems[i], elems[j]).family());
        if (out.used_meet_prime)
          out.meet_prime_table[i][j] = find_elem(meet_prime(elems[i], elems[j]).family());
      }
  }
  return out;
}

std::string lattice_dot(const GeneratedLattice& l) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.elements.size(); ++i) {
    std::string label = family_label(l.elements[i].family());
    std::string esc;
    for (char c : label) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    out += "  n" + std::to_string(i) + " [label=\"" + esc + "\"];\n";
  }
  for (auto [lo, hi] : l.hasse)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace theoria
