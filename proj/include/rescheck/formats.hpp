#pragma once

#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include "rescheck/proof_db.hpp"

namespace rescheck {

struct CnfProblem {
  Var num_vars = 0;
  std::vector<Clause> clauses;  // normalized, in file order, 1-based ids elsewhere
};

// A trace row before table population: literals keep their file order so a
// parsed trace serializes back byte-compatibly.
struct TraceInputRow {
  ClauseId id = 0;
  Clause literals;
  int line = 0;
};

struct RawTrace {
  std::vector<TraceInputRow> input_rows;
  std::vector<Chain> chain_rows;
};

// Explicit variable assignments only; unmentioned variables are decided at
// check level, not here.
struct Assignment {
  std::unordered_map<Var, bool> values;
};

struct DimacsOptions {
  bool allow_header_mismatch = false;            // clause-count mismatch warns instead of failing
  std::vector<std::string>* warnings = nullptr;  // collected when non-null
};

// DIMACS CNF. "c" comment lines anywhere, one "p cnf <vars> <clauses>"
// header, whitespace-separated literals with 0 closing each clause (clauses
// may span lines). Clauses come back normalized. Throws ParseError on junk
// tokens, a missing or malformed header, a bare 0 opening a clause, variable
// indexes above the header bound, integer overflow, an unterminated final
// clause, a tautological clause, and (unless relaxed) a clause-count
// mismatch.
CnfProblem parse_dimacs(std::istream& in, const DimacsOptions& options = {});

// Resolution trace, one row per line. Rows start with a positive id.
//   input row:      id lit ... [0]
//   compact chain:  id * ant ant ... [0]
//   extended chain: id lit ... 0 ant ant ... [0]
// Trailing zeros are delimiters and are stripped; a zero anywhere else is
// only legal as the single literal/antecedent separator of an extended row.
// Chains need two or more antecedents. Input rows must precede all chains.
// Throws ParseError.
RawTrace parse_trace(std::istream& in);

// Solver-style value lines: "v" followed by integers, zero ending the line's
// list. Positive k assigns variable k true, negative false. "c" and "s"
// lines are skipped. Conflicting signs and variables above num_vars are
// ParseErrors.
Assignment parse_assignment(std::istream& in, Var num_vars);

std::string serialize_dimacs(const CnfProblem& p);

// Input rows and compact chains as above; chains with a stated resolvent are
// written in extended form.
std::string serialize_trace(const RawTrace& t);

// Populates the clause tables: input rows are normalized (a tautological row
// is a FormatError), ids must be unique across both tables, stated
// resolvents are kept verbatim for the replay comparison.
ProofDb build_proof_db(const RawTrace& t);

}  // namespace rescheck
