#include "theoria/dsl.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "theoria/algebra.hpp"
#include "theoria/closure.hpp"
#include "theoria/common.hpp"
#include "theoria/exports.hpp"
#include "theoria/gallery.hpp"
#include "theoria/lattice.hpp"
#include "theoria/oracle.hpp"
#include "theoria/verify.hpp"

namespace theoria {

namespace {

struct Token {
  std::string text;  // word or single punctuation char
  std::size_t line;
  std::size_t col;
  bool punct;
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '~' ||
         c == '-' || c == ':';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      out.push_back({"\n", line, col, true});
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (word_char(c)) {
      std::size_t start = i, start_col = col;
      while (i < text.size() && word_char(text[i])) {
        ++i;
        ++col;
      }
      out.push_back({text.substr(start, i - start), line, start_col, false});
      continue;
    }
    out.push_back({std::string(1, c), line, col, true});
    ++i;
    ++col;
  }
  out.push_back({"\n", line, col, true});
  return out;
}

[[noreturn]] void parse_fail(const Token& t, const std::string& what) {
  fail(Errc::ParseError,
       "parse error at line " + std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + what);
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SessionScript parse() {
    SessionScript s;
    while (!at_end()) {
      if (peek().text == "\n") {
        advance();
        continue;
      }
      s.statements.push_back(statement());
    }
    return s;
  }

  std::shared_ptr<FamilyExpr> family_expr_public() { return family_expr(); }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek() const {
    if (pos_ >= toks_.size()) fail(Errc::ParseError, "parse error: unexpected end of input");
    return toks_[pos_];
  }
  Token advance() { return toks_[pos_++]; }
  bool check(const std::string& t) const { return !at_end() && peek().text == t; }
  Token expect(const std::string& t, const std::string& what) {
    if (!check(t)) parse_fail(peek(), "expected '" + t + "' " + what);
    return advance();
  }

  Statement statement() {
    Statement st;
    st.line = peek().line;
    if (check("let")) {
      advance();
      st.is_let = true;
      if (peek().punct) parse_fail(peek(), "expected a name after 'let'");
      st.let_name = advance().text;
      expect("=", "after the definition name");
      st.args.push_back(family_expr());
      end_of_statement();
      return st;
    }
    if (peek().punct) parse_fail(peek(), "expected a command or 'let'");
    st.command = advance().text;
    while (!check("\n")) {
      if (peek().punct && peek().text != "(") parse_fail(peek(), "unexpected punctuation in command");
      if (!peek().punct && peek().text.rfind("--", 0) == 0) {
        std::string key = advance().text.substr(2);
        std::string val;
        if (!check("\n") && !peek().punct && peek().text.rfind("--", 0) != 0) val = advance().text;
        st.options[key] = val;
        continue;
      }
      st.args.push_back(family_expr());
    }
    end_of_statement();
    return st;
  }

  void end_of_statement() {
    if (check("\n"))
      advance();
    else if (!at_end())
      parse_fail(peek(), "expected end of statement");
  }

  std::uint64_t integer(const std::string& what) {
    const Token& t = peek();
    if (t.punct || t.text.empty() ||
        !std::all_of(t.text.begin(), t.text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      parse_fail(t, "expected an integer " + what);
    return std::stoull(advance().text);
  }

  TheoryPoint point_literal() {
    const Token& t = peek();
    if (t.punct || t.text.find('~') == std::string::npos)
      parse_fail(t, "expected a point literal prefix~period");
    std::string text = advance().text;
    return TheoryPoint::parse(text);
  }

  Bits bit_word_or_empty() {
    if (peek().punct) return {};
    return bits_from_string(advance().text);
  }

  std::shared_ptr<FamilyExpr> family_expr() {
    auto node = std::make_shared<FamilyExpr>();
    const Token& head = peek();
    if (head.punct) parse_fail(head, "expected a family expression");

    if (head.text == "fin") {
      advance();
      expect("{", "after fin");
      std::vector<TheoryPoint> pts;
      if (!check("}")) {
        pts.push_back(point_literal());
        while (check(",")) {
          advance();
          pts.push_back(point_literal());
        }
      }
      expect("}", "closing fin");
      node->literal = FinsetBlock{std::move(pts)};
      return node;
    }
    if (head.text == "fan") {
      advance();
      expect("(", "after fan");
      FanBlock fan;
      bool first = true;
      while (!check(")")) {
        if (!first) expect(",", "between fan fields");
        first = false;
        if (check("withlimit")) {
          advance();
          fan.include_limit = true;
          continue;
        }
        std::string key = advance().text;
        expect("=", "after fan field " + key);
        if (key == "limit")
          fan.limit = point_literal();
        else if (key == "stride")
          fan.stride = integer("for stride");
        else if (key == "offset")
          fan.offset = integer("for offset");
        else if (key == "dev")
          fan.deviation = bit_word_or_empty();
        else
          parse_fail(peek(), "unknown fan field '" + key + "'");
      }
      expect(")", "closing fan");
      if (fan.stride == 0) fail(Errc::ParseError, "fan stride must be >= 1");
      while (!fan.deviation.empty() && !fan.deviation.back()) fan.deviation.pop_back();
      node->literal = std::move(fan);
      return node;
    }
    if (head.text == "cube") {
      advance();
      expect("(", "after cube");
      std::string key = advance().text;
      expect("=", "after cube field");
      if (key != "mask") parse_fail(peek(), "cube takes mask=...");
      if (peek().punct) parse_fail(peek(), "expected a mask literal");
      CubeMask mask = CubeMask::parse(advance().text);
      expect(")", "closing cube");
      node->literal = CubeBlock{std::move(mask)};
      return node;
    }
    if (head.text == "fanarray") {
      advance();
      expect("(", "after fanarray");
      std::optional<CubeMask> base;
      FanArrayBlock fa;
      bool first = true;
      while (!check(")")) {
        if (!first) expect(",", "between fanarray fields");
        first = false;
        if (check("withbase")) {
          advance();
          fa.include_base = true;
          continue;
        }
        std::string key = advance().text;
        expect("=", "after fanarray field " + key);
        if (key == "base") {
          if (check("cube")) {
            advance();
            expect("(", "after cube");
            std::string mk = advance().text;
            expect("=", "after cube field");
            if (mk != "mask") fail(Errc::ParseError, "cube takes mask=...");
            base = CubeMask::parse(advance().text);
            expect(")", "closing cube");
          } else if (!peek().punct) {
            base = CubeMask::parse(advance().text);
          } else {
            parse_fail(peek(), "expected a base cube");
          }
        } else if (key == "c") {
          fa.coding = integer("for coding offset");
        } else if (key == "excl") {
          expect("{", "after excl=");
          if (!check("}")) {
            fa.excluded.push_back(integer("in excl"));
            while (check(",")) {
              advance();
              fa.excluded.push_back(integer("in excl"));
            }
          }
          expect("}", "closing excl");
        } else {
          parse_fail(peek(), "unknown fanarray field '" + key + "'");
        }
      }
      expect(")", "closing fanarray");
      if (!base) fail(Errc::ParseError, "fanarray needs base=...");
      if (fa.coding == 0) fail(Errc::ParseError, "fanarray coding offset must be >= 1");
      fa.base = std::move(*base);
      std::sort(fa.excluded.begin(), fa.excluded.end());
      node->literal = std::move(fa);
      return node;
    }

    auto combinator = [&](FamilyExpr::Kind kind, std::size_t arity) {
      advance();
      expect("(", "after combinator");
      node->kind = kind;
      node->args.push_back(family_expr());
      for (std::size_t k = 1; k < arity; ++k) {
        expect(",", "between arguments");
        node->args.push_back(family_expr());
      }
      expect(")", "closing combinator");
      return node;
    };
    if (head.text == "closure") return combinator(FamilyExpr::Kind::Closure, 1);
    if (head.text == "union") return combinator(FamilyExpr::Kind::Union, 2);
    if (head.text == "intersect") return combinator(FamilyExpr::Kind::Intersect, 2);
    if (head.text == "meetprime") return combinator(FamilyExpr::Kind::MeetPrime, 2);
    if (head.text == "gallery") {
      advance();
      expect("(", "after gallery");
      node->kind = FamilyExpr::Kind::Gallery;
      if (peek().punct) parse_fail(peek(), "expected a gallery case name");
      node->name = advance().text;
      expect(")", "closing gallery");
      return node;
    }

    node->kind = FamilyExpr::Kind::Name;
    node->name = advance().text;
    return node;
  }
};

}  // namespace

SessionScript parse_script(const std::string& text) { return Parser(lex(text)).parse(); }

Family parse_family(const std::string& text) {
  Parser p(lex(text));
  auto expr = p.family_expr_public();
  // Evaluate without an environment: literals and combinators only.
  std::function<Family(const FamilyExpr&)> eval = [&](const FamilyExpr& e) -> Family {
    switch (e.kind) {
      case FamilyExpr::Kind::Literal: return Family({*e.literal});
      case FamilyExpr::Kind::Closure: return closure(eval(*e.args[0]));
      case FamilyExpr::Kind::Union: return family_union(eval(*e.args[0]), eval(*e.args[1]));
      case FamilyExpr::Kind::Intersect: return intersect(eval(*e.args[0]), eval(*e.args[1]));
      case FamilyExpr::Kind::MeetPrime: {
        LatticeElement a = LatticeElement::from_closed(eval(*e.args[0]));
        LatticeElement b = LatticeElement::from_closed(eval(*e.args[1]));
        return meet_prime(a, b).family();
      }
      case FamilyExpr::Kind::Gallery: {
        GalleryCase c = make_gallery_case(e.name);
        if (c.families.size() == 1) return c.families[0].second;
        fail(Errc::UndefinedName, "gallery case " + e.name + " has several families; use case:family");
      }
      case FamilyExpr::Kind::Name:
        fail(Errc::UndefinedName, "undefined name '" + e.name + "' outside a script");
    }
    fail(Errc::Internal, "unreachable family expression kind");
  };
  return eval(*expr);
}

// ----------------------------------------------------------------- runner

namespace {

class Runner {
 public:
  Runner(const RunOptions& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  int run(const SessionScript& script) {
    int status = 0;
    for (const auto& st : script.statements) {
      try {
        int s = execute(st);
        status = std::max(status, s);
      } catch (const Error& e) {
        err_ << "line " << st.line << ": " << e.what() << "\n";
        if (e.code() == Errc::ParseError || e.code() == Errc::UndefinedName ||
            e.code() == Errc::UnknownSuite)
          return 2;
        return 1;
      }
    }
    return status;
  }

 private:
  const RunOptions& opt_;
  std::ostream& out_;
  std::ostream& err_;
  std::map<std::string, Family> env_;

  Family eval(const FamilyExpr& e) {
    switch (e.kind) {
      case FamilyExpr::Kind::Literal: return Family({*e.literal});
      case FamilyExpr::Kind::Closure: return closure(eval(*e.args[0]));
      case FamilyExpr::Kind::Union: return family_union(eval(*e.args[0]), eval(*e.args[1]));
      case FamilyExpr::Kind::Intersect: return intersect(eval(*e.args[0]), eval(*e.args[1]));
      case FamilyExpr::Kind::MeetPrime:
        return meet_prime(LatticeElement::from_closed(closure(eval(*e.args[0]))),
                          LatticeElement::from_closed(closure(eval(*e.args[1]))))
            .family();
      case FamilyExpr::Kind::Gallery: {
        auto sep = e.name.find(':');
        GalleryCase c = make_gallery_case(sep == std::string::npos ? e.name : e.name.substr(0, sep));
        if (sep != std::string::npos) {
          std::string fam = e.name.substr(sep + 1);
          for (const auto& [n, f] : c.families)
            if (n == fam) return f;
          fail(Errc::UndefinedName, "no family '" + fam + "' in gallery case " + c.name);
        }
        if (c.families.size() == 1) return c.families[0].second;
        fail(Errc::UndefinedName,
             "gallery case " + e.name + " has several families; use " + c.name + ":<name>");
      }
      case FamilyExpr::Kind::Name: {
        auto it = env_.find(e.name);
        if (it == env_.end()) fail(Errc::UndefinedName, "undefined family name '" + e.name + "'");
        return it->second;
      }
    }
    fail(Errc::Internal, "unreachable family expression kind");
  }

  std::uint64_t opt_int(const Statement& st, const std::string& key, std::uint64_t dflt) const {
    auto it = st.options.find(key);
    if (it == st.options.end()) return dflt;
    return std::stoull(it->second);
  }

  void need_args(const Statement& st, std::size_t n) const {
    if (st.args.size() != n)
      fail(Errc::ParseError, "command '" + st.command + "' takes " + std::to_string(n) +
                                 " family argument(s)");
  }

  void emit(const Json& j, const std::string& text) {
    if (opt_.json)
      out_ << j.dump() << "\n";
    else
      out_ << text << "\n";
  }

  int execute(const Statement& st) {
    if (st.is_let) {
      env_[st.let_name] = eval(*st.args[0]).named(st.let_name);
      return 0;
    }
    const std::string& cmd = st.command;
    if (cmd == "closure") {
      need_args(st, 1);
      Family f = closure(eval(*st.args[0]));
      emit(family_json(f), family_dsl(f));
      return 0;
    }
    if (cmd == "lgs") {
      need_args(st, 1);
      Family f = eval(*st.args[0]);
      if (!is_closed(f)) fail(Errc::NotClosed, "lgs requires an E-closed family (wrap in closure())");
      GenSetReport r = least_generating_set(f);
      std::ostringstream txt;
      txt << "hasLeast: " << (r.has_least ? "true" : "false") << "\n"
          << "isolated: " << family_dsl(r.isolated);
      if (r.least_gen_set) txt << "\nleastGenSet: " << family_dsl(*r.least_gen_set);
      emit(gen_set_report_json(r), txt.str());
      return 0;
    }
    if (cmd == "meet" || cmd == "join" || cmd == "meetprime") {
      need_args(st, 2);
      LatticeElement a = LatticeElement::from_closed(closure(eval(*st.args[0])));
      LatticeElement b = LatticeElement::from_closed(closure(eval(*st.args[1])));
      LatticeElement r = cmd == "meet" ? meet(a, b) : cmd == "join" ? join(a, b) : meet_prime(a, b);
      Json j = family_json(r.family());
      j["hasLeast"] = r.has_least();
      emit(j, family_dsl(r.family()) + (r.has_least() ? "  [hasLeast]" : "  [no least gen set]"));
      return 0;
    }
    if (cmd == "leq") {
      need_args(st, 2);
      bool r = family_subset(closure(eval(*st.args[0])), closure(eval(*st.args[1])));
      emit(Json{{"leq", r}}, r ? "true" : "false");
      return 0;
    }
    if (cmd == "decompose") {
      need_args(st, 2);
      LatticeElement a = LatticeElement::from_closed(closure(eval(*st.args[0])));
      LatticeElement b = LatticeElement::from_closed(closure(eval(*st.args[1])));
      LeqDecomposition d = decompose(a, b);
      std::ostringstream txt;
      txt << "part21: " << family_dsl(d.part21) << "\npart22: " << family_dsl(d.part22)
          << "\npart23: " << family_dsl(d.part23);
      emit(decomposition_json(d), txt.str());
      return 0;
    }
    if (cmd == "lattice") {
      if (st.args.empty()) fail(Errc::ParseError, "lattice needs at least one element");
      std::vector<LatticeElement> gens;
      for (const auto& a : st.args) gens.push_back(LatticeElement::from_closed(closure(eval(*a))));
      auto it = st.options.find("ops");
      LatticeOps ops = (it != st.options.end() && it->second == "join") ? LatticeOps::JoinOnly
                                                                        : LatticeOps::JoinMeetPrime;
      GeneratedLattice lat = generate_lattice(gens, ops, opt_int(st, "cap", 4096), opt_.mode);
      Json j{{"hasse", hasse_json(lat)}, {"tables", op_tables_json(lat)},
             {"capExceeded", lat.cap_exceeded}};
      std::ostringstream txt;
      txt << lat.elements.size() << " element(s)";
      if (lat.cap_exceeded) txt << " (cap exceeded, partial)";
      txt << "\n" << lattice_dot(lat);
      emit(j, txt.str());
      return lat.cap_exceeded ? 1 : 0;
    }
    if (cmd == "algebra") {
      need_args(st, 1);
      Family f = closure(eval(*st.args[0]));
      BooleanAlgebra alg = build_algebra(f, opt_int(st, "generators", 3));
      bool iso = iso_check(alg, opt_.mode);
      Json j = algebra_json(alg);
      j["isoCheck"] = iso;
      std::ostringstream txt;
      txt << alg.elements.size() << " element(s), iso_check: " << (iso ? "pass" : "FAIL");
      emit(j, txt.str());
      return iso ? 0 : 1;
    }
    if (cmd == "cbrank") {
      need_args(st, 1);
      CBProfile p = cb_profile(eval(*st.args[0]));
      std::ostringstream txt;
      txt << "rank: " << p.rank << ", kernelEmpty: " << (p.kernel_empty ? "true" : "false");
      emit(cb_profile_json(p), txt.str());
      return 0;
    }
    if (cmd == "oracle-check") {
      need_args(st, 1);
      Family f = eval(*st.args[0]);
      std::uint64_t depth = opt_int(st, "depth", opt_.depth);
      auto pt = st.options.find("point");
      if (pt != st.options.end()) {
        TheoryPoint t = TheoryPoint::parse(pt->second);
        auto ans = oracle_in_closure(t, f, depth);
        bool symbolic = member(closure(f), t);
        bool consistent = !(ans.verdict == OracleVerdict::No && symbolic) &&
                          !(ans.verdict == OracleVerdict::Yes && !symbolic);
        std::string verdict = ans.verdict == OracleVerdict::Yes
                                  ? "Yes"
                                  : ans.verdict == OracleVerdict::No ? "No" : "Inconclusive";
        emit(Json{{"oracle", verdict}, {"symbolic", symbolic}, {"consistent", consistent}},
             "oracle: " + verdict + ", symbolic: " + (symbolic ? "true" : "false") +
                 (consistent ? "" : "  DISAGREEMENT"));
        return consistent ? 0 : 1;
      }
      DepthProjection pr = project(f, depth, opt_.mode);
      bool consistent = true;
      for (const auto& [w, tri] : pr.cells) {
        Trichotomy engine = family_count(f, Sentence::prefix_word(bits_from_string(w)));
        if (engine.kind != tri.kind || (engine.is_finite() && engine.points != tri.points))
          consistent = false;
      }
      Json j = projection_json(pr);
      j["consistent"] = consistent;
      emit(j, pr.dump() + (consistent ? "consistent" : "DISAGREEMENT"));
      return consistent ? 0 : 1;
    }
    if (cmd == "verify") {
      auto it = st.options.find("suite");
      std::string suite = it == st.options.end() ? "all" : it->second;
      VerifyOptions vopt;
      vopt.seeds = opt_int(st, "seeds", opt_.seeds);
      vopt.base_seed = opt_int(st, "seed", opt_.base_seed);
      vopt.depth = opt_int(st, "depth", opt_.depth);
      vopt.mode = opt_.mode;
      auto results = run_suite(suite, vopt);
      bool ok = true;
      Json arr = Json::array();
      for (const auto& r : results) {
        ok = ok && r.ok();
        Json fr = Json::array();
        for (const auto& f : r.failures) fr.push_back({{"what", f.what}, {"seed", f.seed}});
        arr.push_back({{"suite", r.suite}, {"checks", r.checks}, {"failures", fr}});
        if (!opt_.json) {
          out_ << (r.ok() ? "[PASS] " : "[FAIL] ") << r.suite << " (" << r.checks << " checks)\n";
          for (const auto& f : r.failures) out_ << "       seed " << f.seed << ": " << f.what << "\n";
        }
      }
      if (opt_.json) out_ << arr.dump() << "\n";
      return ok ? 0 : 1;
    }
    if (cmd == "export") {
      need_args(st, 1);
      Family f = eval(*st.args[0]);
      auto it = st.options.find("format");
      std::string format = it == st.options.end() ? "dsl" : it->second;
      if (format == "dsl") {
        out_ << family_dsl(f) << "\n";
      } else if (format == "json") {
        out_ << family_json(f).dump(2) << "\n";
      } else if (format == "dot") {
        GeneratedLattice lat =
            generate_lattice({LatticeElement::from_closed(closure(f))}, LatticeOps::JoinOnly);
        out_ << lattice_dot(lat);
      } else {
        fail(Errc::ParseError, "unknown export format: " + format);
      }
      return 0;
    }
    fail(Errc::ParseError, "unknown command: " + cmd);
  }
};

}  // namespace

int run_script(const SessionScript& script, const RunOptions& opt, std::ostream& out,
               std::ostream& err) {
  return Runner(opt, out, err).run(script);
}

}  // namespace theoria
