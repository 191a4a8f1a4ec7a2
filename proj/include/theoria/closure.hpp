#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "theoria/family.hpp"

namespace theoria {

/// Exact accumulation set, computed blockwise (closure distributes over
/// finite unions): finite sets contribute nothing, fans their limit,
/// cubes themselves, fan-arrays their base cube.
Family acc_points(const Family& f);

/// f together with its accumulation points; idempotent. Structurally this
/// sets every fan's limit flag and every fan-array's base flag.
Family closure(const Family& f);

bool is_closed(const Family& f);

struct ClosureCertificate {
  bool in = false;
  enum class Kind { Member, Accumulation, Separated } kind = Kind::Separated;
  /// For Separated: a sentence true at the point whose slice of f is
  /// finite and misses the point.
  std::optional<Sentence> separating;
};

ClosureCertificate is_in_closure(const TheoryPoint& t, const Family& f);

/// The members of an E-closed family that are not accumulation points,
/// as punctured blocks. NotClosed when the precondition fails.
Family isolated_points(const Family& f);

/// Isolating sentence for a point: family_count(f, phi) is finite and
/// contains at most {p}. Requires p outside the accumulation set.
Sentence witness_for(const Family& f, const TheoryPoint& p);

struct GenSetReport {
  Family isolated;
  bool has_least = false;
  std::optional<Family> least_gen_set;
  std::vector<std::pair<TheoryPoint, Sentence>> witnesses;  // sampled
};

GenSetReport least_generating_set(const Family& f);

/// The four equivalent conditions for a generating set, evaluated
/// independently; `agree` is their mutual equality.
struct Thm13Flags {
  bool least = false;           // (1) equals the isolated core, contained in pool candidates
  bool minimal = false;         // (2) no punctured sub-family still generates
  bool isolated_in_g = false;   // (3) every member isolated within g
  bool isolated_in_f = false;   // (4) every member isolated within f
  bool agree = false;
};

Thm13Flags check_thm13(const Family& f, const Family& g, const std::vector<Family>& candidate_pool = {});

/// Structured proper sub-families used by the minimality sweep: drop one
/// finite point, drop a fan head, keep only every other fan member, drop
/// a fan tail, exclude one fan-array point.
std::vector<Family> puncturings(const Family& g);

}  // namespace theoria
