#pragma once

#include <stdexcept>
#include <string>

#include "rescheck/clause.hpp"

namespace rescheck {

// Textual input is broken at a known position. line/col are 1-based; col 0
// means the error concerns the whole line.
struct ParseError : std::runtime_error {
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error(col_ > 0 ? "line " + std::to_string(line_) + ", column " +
                                          std::to_string(col_) + ": " + what_
                                    : "line " + std::to_string(line_) + ": " + what_),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

// Structurally broken trace content discovered after tokenization, e.g.
// duplicate row ids or a tautological input row. line is 0 when unknown.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what_, int line_ = 0)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
        line(line_) {}
  int line;
};

// A clause contains some variable with both polarities and therefore has no
// canonical resolvable form.
struct TautologyError : std::runtime_error {
  explicit TautologyError(Var variable_)
      : std::runtime_error("tautological clause: variable " + std::to_string(variable_) +
                           " occurs with both polarities"),
        variable(variable_) {}
  Var variable;
};

// A clause id was referenced but resolves to neither an input clause nor a
// previously computed resolvent.
struct MissingIdError : std::runtime_error {
  explicit MissingIdError(ClauseId id_)
      : std::runtime_error("clause id " + std::to_string(id_) + " is not defined"),
        id(id_) {}
  ClauseId id;
};

// A clause was evaluated under an interpretation that leaves one of its
// variables unset.
struct UnassignedVariable : std::runtime_error {
  explicit UnassignedVariable(Var variable_)
      : std::runtime_error("variable " + std::to_string(variable_) + " is unassigned"),
        variable(variable_) {}
  Var variable;
};

// An exhaustive semantic check was asked to enumerate more variables than
// its configured limit.
struct BoundExceeded : std::runtime_error {
  BoundExceeded(int variables_, int bound_)
      : std::runtime_error("exhaustive check over " + std::to_string(variables_) +
                           " variables exceeds the bound of " + std::to_string(bound_)),
        variables(variables_),
        bound(bound_) {}
  int variables;
  int bound;
};

}  // namespace rescheck
