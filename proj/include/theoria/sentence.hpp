#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "theoria/point.hpp"

namespace theoria {

/// Boolean combination of basis atoms P_i. Denotes a clopen set of points;
/// the denotation depends only on coordinates <= max_index().
class Sentence {
 public:
  static Sentence truth();
  static Sentence falsity();
  static Sentence atom(std::uint64_t index);
  static Sentence negation(Sentence a);
  static Sentence conjunction(Sentence a, Sentence b);
  static Sentence disjunction(Sentence a, Sentence b);

  /// Conjunction of literals pinning the first n bits of p.
  static Sentence prefix_of(const TheoryPoint& p, std::uint64_t n);
  /// Conjunction of literals pinning the given window at positions 0..|w|-1.
  static Sentence prefix_word(const Bits& w);

  bool evaluate(const TheoryPoint& p) const;
  /// -1 when no atom occurs (constants only).
  std::int64_t max_index() const;
  std::string str() const;

 private:
  enum class Kind { True, False, Atom, Not, And, Or };
  struct Node {
    Kind kind;
    std::uint64_t index = 0;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit Sentence(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  static bool eval(const Node& n, const TheoryPoint& p);
  static std::int64_t max_index(const Node& n);
  static void print(const Node& n, std::string& out);
};

inline bool satisfies(const TheoryPoint& p, const Sentence& phi) { return phi.evaluate(p); }

}  // namespace theoria
