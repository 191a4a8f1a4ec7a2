#include "theoria/sentence.hpp"

#include <algorithm>

namespace theoria {

Sentence Sentence::truth() { return Sentence(std::make_shared<Node>(Node{Kind::True})); }
Sentence Sentence::falsity() { return Sentence(std::make_shared<Node>(Node{Kind::False})); }

Sentence Sentence::atom(std::uint64_t index) {
  return Sentence(std::make_shared<Node>(Node{Kind::Atom, index}));
}

Sentence Sentence::negation(Sentence a) {
  return Sentence(std::make_shared<Node>(Node{Kind::Not, 0, a.node_, nullptr}));
}

Sentence Sentence::conjunction(Sentence a, Sentence b) {
  return Sentence(std::make_shared<Node>(Node{Kind::And, 0, a.node_, b.node_}));
}

Sentence Sentence::disjunction(Sentence a, Sentence b) {
  return Sentence(std::make_shared<Node>(Node{Kind::Or, 0, a.node_, b.node_}));
}

Sentence Sentence::prefix_of(const TheoryPoint& p, std::uint64_t n) {
  Bits w;
  w.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) w.push_back(p.bit_at(i));
  return prefix_word(w);
}

Sentence Sentence::prefix_word(const Bits& w) {
  Sentence acc = truth();
  for (std::size_t i = 0; i < w.size(); ++i) {
    Sentence lit = w[i] ? atom(i) : negation(atom(i));
    acc = (i == 0) ? lit : conjunction(acc, lit);
  }
  return acc;
}

bool Sentence::evaluate(const TheoryPoint& p) const { return eval(*node_, p); }

bool Sentence::eval(const Node& n, const TheoryPoint& p) {
  switch (n.kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return p.bit_at(n.index);
    case Kind::Not: return !eval(*n.lhs, p);
    case Kind::And: return eval(*n.lhs, p) && eval(*n.rhs, p);
    case Kind::Or: return eval(*n.lhs, p) || eval(*n.rhs, p);
  }
  return false;
}

std::int64_t Sentence::max_index() const { return max_index(*node_); }

std::int64_t Sentence::max_index(const Node& n) {
  switch (n.kind) {
    case Kind::True:
    case Kind::False: return -1;
    case Kind::Atom: return static_cast<std::int64_t>(n.index);
    case Kind::Not: return max_index(*n.lhs);
    case Kind::And:
    case Kind::Or: return std::max(max_index(*n.lhs), max_index(*n.rhs));
  }
  return -1;
}

std::string Sentence::str() const {
  std::string out;
  print(*node_, out);
  return out;
}

void Sentence::print(const Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::True: out += "true"; return;
    case Kind::False: out += "false"; return;
    case Kind::Atom: out += "P" + std::to_string(n.index); return;
    case Kind::Not:
      out += "!";
      if (n.lhs->kind == Kind::And || n.lhs->kind == Kind::Or) {
        out += "(";
        print(*n.lhs, out);
        out += ")";
      } else {
        print(*n.lhs, out);
      }
      return;
    case Kind::And: {
      auto wrap = [&](const Node& c) {
        if (c.kind == Kind::Or) {
          out += "(";
          print(c, out);
          out += ")";
        } else {
          print(c, out);
        }
      };
      wrap(*n.lhs);
      out += " & ";
      wrap(*n.rhs);
      return;
    }
    case Kind::Or:
      print(*n.lhs, out);
      out += " | ";
      print(*n.rhs, out);
      return;
  }
}

}  // namespace theoria
