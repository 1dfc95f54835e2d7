#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rescheck/clause.hpp"

namespace rescheck {

// One derivation row: the clauses named by antecedents are resolved left to
// right. Extended traces additionally state the expected resolvent; compact
// rows leave it empty. line is the source line for diagnostics and does not
// take part in equality.
struct Chain {
  ClauseId id = 0;
  std::vector<ClauseId> antecedents;
  std::optional<Clause> stated_resolvent;
  int line = 0;
};

struct CheckStats {
  std::uint64_t resolutions = 0;  // one per resolve call, i.e. antecedents-1 per chain
  double wall_seconds = 0.0;
  double inf_per_sec = 0.0;
};

enum class CheckStatus { VerifiedUnsat, NotVerified, FormatError };

enum class FailReason {
  None,
  FinalClauseNotEmpty,
  NoChains,            // input clauses present but nothing derived
  EmptyTrace,          // neither input clauses nor chains
  MissingId,
  ResolventMismatch,
  ReorderFailed,
  OriginMismatch,      // set by the driver when the legitimacy check fails
};

struct Verdict {
  CheckStatus status = CheckStatus::NotVerified;
  FailReason reason = FailReason::None;
  ClauseId chain_id = 0;    // chain the failure was detected at, 0 if none
  std::string message;
  Clause final_resolvent;   // last computed resolvent when one exists
  CheckStats stats;
};

struct OriginCheck {
  bool ok = true;
  ClauseId id = 0;  // first offending input row when !ok
  std::string message;
};

struct ResolveOptions {
  bool reorder = false;  // greedily realign each chain before folding
};

// Three tables: input clauses (ctbl), chains in file order (ttbl), computed
// resolvents (rtbl). ctbl and ttbl ids are disjoint; rtbl is filled by
// find_and_resolve, one entry per chain, in file order.
class ProofDb {
 public:
  // Both adders throw FormatError on a duplicate id. Input clauses must
  // already be normalized; chains must have at least two antecedents.
  void add_input_clause(ClauseId id, Clause clause, int line = 0);
  void add_chain(Chain chain);

  const std::vector<std::pair<ClauseId, Clause>>& input_rows() const { return inputs_; }
  const std::vector<Chain>& chains() const { return chains_; }
  const std::unordered_map<ClauseId, Clause>& resolvents() const { return rtbl_; }

  // Resolvent table first, then input table; null when the id is unknown.
  const Clause* lookup(ClauseId id) const;

  // Clauses for the given ids, in order. Throws MissingIdError.
  std::vector<Clause> find_clause(std::span<const ClauseId> ids) const;

  // Replays every chain in file order, populating rtbl as it goes, and
  // reports VerifiedUnsat exactly when the last chain's computed resolvent
  // is the empty clause. Extended rows are checked against their stated
  // resolvent (multiset comparison); a mismatch is NotVerified. An unknown
  // antecedent (including forward references) or an empty database is a
  // FormatError verdict. Deterministic; never throws on trace defects.
  Verdict find_and_resolve(const ResolveOptions& options = {});

  // Trace legitimacy: every input row must match the clause at its 1-based
  // position in the original (normalized) problem.
  OriginCheck check_origins(std::span<const Clause> cnf_clauses) const;

 private:
  std::vector<std::pair<ClauseId, Clause>> inputs_;  // file order
  std::unordered_map<ClauseId, std::size_t> input_index_;
  std::vector<Chain> chains_;                        // file order
  std::unordered_set<ClauseId> chain_ids_;
  std::unordered_map<ClauseId, Clause> rtbl_;
  std::unordered_map<ClauseId, int> lines_;          // row id -> source line
};

}  // namespace rescheck
