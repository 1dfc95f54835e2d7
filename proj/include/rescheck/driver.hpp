#pragma once

#include <iosfwd>
#include <string>

#include "rescheck/proof_db.hpp"
#include "rescheck/semantics.hpp"

namespace rescheck {

struct CheckOptions {
  bool check_origins = false;         // verify trace input rows against the problem
  bool reorder = false;               // realign compact chains before folding
  bool allow_header_mismatch = false; // DIMACS clause-count mismatch warns only
  bool stats = false;                 // print the resolutions/time/rate line
  int oracle_bound = kDefaultOracleBound;  // for embedding test harnesses; no CLI flag
};

// Exit codes are a strict trichotomy: 0 the claim is verified, 1 the claim is
// not verified (the inputs parsed but the certificate does not check out),
// 2 the inputs could not be read or parsed.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitNotVerified = 1;
inline constexpr int kExitFormatError = 2;

struct RunResult {
  int exit_code = kExitFormatError;
  Verdict verdict;  // populated when the check ran far enough to produce one
};

// Replays the trace against the problem. Verdict line goes to out
// ("VERIFIED UNSAT" or "NOT VERIFIED: <reason>"), diagnostics and warnings to
// err. With options.stats, a "resolutions=... time=... inf_per_sec=..." line
// follows the verdict; timing covers the whole run including file IO.
RunResult run_unsat_check(const std::string& cnf_path, const std::string& trace_path,
                          const CheckOptions& options, std::ostream& out, std::ostream& err);

struct SatRunResult {
  int exit_code = kExitFormatError;
  SatCheckResult check;
};

// Substitutes the assignment into the problem. "VERIFIED SAT" requires every
// clause to be satisfied by an explicitly assigned literal; unassigned
// variables are reported to err and default to false.
SatRunResult run_sat_check(const std::string& cnf_path, const std::string& assignment_path,
                           const CheckOptions& options, std::ostream& out, std::ostream& err);

// Rate as reported on the stats line: zero when nothing was resolved or the
// clock read zero, so a degenerate run cannot print a nonsense rate.
double inferences_per_second(std::uint64_t resolutions, double wall_seconds);

// One machine-readable line: resolutions=<n> time=<seconds> inf_per_sec=<rate>.
// The rate is recomputed from the other two fields, never trusted.
void emit_stats(const CheckStats& stats, std::ostream& os);

}  // namespace rescheck
