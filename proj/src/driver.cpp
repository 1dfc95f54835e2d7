#include "rescheck/driver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "rescheck/errors.hpp"
#include "rescheck/formats.hpp"

namespace rescheck {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  return in;
}

void finish_stats(CheckStats& stats, Clock::time_point start) {
  stats.wall_seconds = seconds_since(start);
  stats.inf_per_sec = inferences_per_second(stats.resolutions, stats.wall_seconds);
}

}  // namespace

double inferences_per_second(std::uint64_t resolutions, double wall_seconds) {
  if (resolutions == 0 || wall_seconds <= 0.0) return 0.0;
  return static_cast<double>(resolutions) / wall_seconds;
}

void emit_stats(const CheckStats& stats, std::ostream& os) {
  char time_text[32];
  std::snprintf(time_text, sizeof time_text, "%.3f", stats.wall_seconds);
  os << "resolutions=" << stats.resolutions << " time=" << time_text << " inf_per_sec="
     << std::llround(inferences_per_second(stats.resolutions, stats.wall_seconds)) << '\n';
}

RunResult run_unsat_check(const std::string& cnf_path, const std::string& trace_path,
                          const CheckOptions& options, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  RunResult result;

  CnfProblem cnf;
  try {
    std::ifstream in = open_or_throw(cnf_path);
    DimacsOptions dopt;
    dopt.allow_header_mismatch = options.allow_header_mismatch;
    std::vector<std::string> warnings;
    dopt.warnings = &warnings;
    cnf = parse_dimacs(in, dopt);
    for (const std::string& w : warnings) err << cnf_path << ": " << w << '\n';
  } catch (const std::exception& e) {
    err << cnf_path << ": " << e.what() << '\n';
    return result;
  }

  ProofDb db;
  try {
    std::ifstream in = open_or_throw(trace_path);
    RawTrace trace = parse_trace(in);
    db = build_proof_db(trace);
  } catch (const std::exception& e) {
    err << trace_path << ": " << e.what() << '\n';
    return result;
  }

  if (options.check_origins) {
    OriginCheck oc = db.check_origins(cnf.clauses);
    if (!oc.ok) {
      result.exit_code = kExitNotVerified;
      result.verdict.status = CheckStatus::NotVerified;
      result.verdict.reason = FailReason::OriginMismatch;
      result.verdict.chain_id = oc.id;
      result.verdict.message = oc.message;
      out << "NOT VERIFIED: " << oc.message << '\n';
      return result;
    }
  }

  ResolveOptions ropt;
  ropt.reorder = options.reorder;
  Verdict v = db.find_and_resolve(ropt);
  finish_stats(v.stats, start);
  result.verdict = v;

  switch (v.status) {
    case CheckStatus::VerifiedUnsat:
      result.exit_code = kExitVerified;
      out << "VERIFIED UNSAT\n";
      break;
    case CheckStatus::NotVerified:
      result.exit_code = kExitNotVerified;
      out << "NOT VERIFIED: " << v.message << '\n';
      break;
    case CheckStatus::FormatError:
      result.exit_code = kExitFormatError;
      err << trace_path << ": " << v.message << '\n';
      return result;
  }
  if (options.stats) emit_stats(v.stats, out);
  return result;
}

SatRunResult run_sat_check(const std::string& cnf_path, const std::string& assignment_path,
                           const CheckOptions& options, std::ostream& out, std::ostream& err) {
  SatRunResult result;

  CnfProblem cnf;
  try {
    std::ifstream in = open_or_throw(cnf_path);
    DimacsOptions dopt;
    dopt.allow_header_mismatch = options.allow_header_mismatch;
    std::vector<std::string> warnings;
    dopt.warnings = &warnings;
    cnf = parse_dimacs(in, dopt);
    for (const std::string& w : warnings) err << cnf_path << ": " << w << '\n';
  } catch (const std::exception& e) {
    err << cnf_path << ": " << e.what() << '\n';
    return result;
  }

  Assignment a;
  try {
    std::ifstream in = open_or_throw(assignment_path);
    a = parse_assignment(in, cnf.num_vars);
  } catch (const std::exception& e) {
    err << assignment_path << ": " << e.what() << '\n';
    return result;
  }

  if (a.values.size() < static_cast<std::size_t>(cnf.num_vars)) {
    err << "warning: " << (static_cast<std::size_t>(cnf.num_vars) - a.values.size()) << " of "
        << cnf.num_vars << " variables unassigned; they default to false\n";
  }

  result.check = check_sat_certificate(cnf, a);
  if (result.check.verified) {
    result.exit_code = kExitVerified;
    out << "VERIFIED SAT\n";
  } else {
    result.exit_code = kExitNotVerified;
    out << "NOT VERIFIED: clause " << result.check.failed_clause
        << " is falsified or undetermined\n";
  }
  return result;
}

}  // namespace rescheck
