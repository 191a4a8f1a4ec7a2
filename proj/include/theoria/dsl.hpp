#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "theoria/family.hpp"
#include "theoria/parallel.hpp"

namespace theoria {

/// Family expression tree of the script language.
struct FamilyExpr {
  enum class Kind { Literal, Closure, Union, Intersect, MeetPrime, Gallery, Name };
  Kind kind = Kind::Literal;
  std::optional<Block> literal;            // Literal
  std::string name;                        // Gallery / Name
  std::vector<std::shared_ptr<FamilyExpr>> args;
};

struct Statement {
  std::size_t line = 0;
  bool is_let = false;
  std::string let_name;                    // is_let
  std::string command;                     // !is_let
  std::vector<std::shared_ptr<FamilyExpr>> args;
  std::map<std::string, std::string> options;  // --key value
};

/// Parsed script: definitions and commands in source order.
struct SessionScript {
  std::vector<Statement> statements;
};

SessionScript parse_script(const std::string& text);  // ParseError carries line:col

/// Single family expression, e.g. "fan(limit=~0, stride=1, offset=0, dev=)".
Family parse_family(const std::string& text);

struct RunOptions {
  bool json = false;
  std::uint64_t depth = 12;       // default oracle depth (THEORIA_DEPTH)
  std::size_t seeds = 100;        // verify default
  std::uint64_t base_seed = 1;
  par::Mode mode = par::default_mode();
};

/// Executes the script; 0 = all checks pass, 1 = property violation or
/// engine error, 2 = usage error inside the script.
int run_script(const SessionScript& script, const RunOptions& opt, std::ostream& out,
               std::ostream& err);

}  // namespace theoria
