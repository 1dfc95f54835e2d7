#include "rescheck/proof_db.hpp"

#include <algorithm>
#include <sstream>

#include "rescheck/errors.hpp"
#include "rescheck/reorder.hpp"
#include "rescheck/resolve.hpp"

namespace rescheck {

namespace {

std::string clause_to_string(const Clause& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ' ';
    os << c[i];
  }
  os << ']';
  return os.str();
}

// Multiset equality under (variable, sign) order. The computed resolvent of
// a clean chain is already canonical, but a tampered stated resolvent can be
// anything, so compare without normalizing.
bool same_multiset(Clause a, Clause b) {
  if (a.size() != b.size()) return false;
  auto by_var = [](Lit x, Lit y) {
    Var vx = var_of(x), vy = var_of(y);
    return vx != vy ? vx < vy : x < y;
  };
  std::sort(a.begin(), a.end(), by_var);
  std::sort(b.begin(), b.end(), by_var);
  return a == b;
}

}  // namespace

void ProofDb::add_input_clause(ClauseId id, Clause clause, int line) {
  if (id == 0) throw FormatError("row id must be positive", line);
  if (input_index_.count(id) || chain_ids_.count(id))
    throw FormatError("duplicate row id " + std::to_string(id), line);
  input_index_.emplace(id, inputs_.size());
  inputs_.emplace_back(id, std::move(clause));
  lines_.emplace(id, line);
}

void ProofDb::add_chain(Chain chain) {
  if (chain.id == 0) throw FormatError("row id must be positive", chain.line);
  if (input_index_.count(chain.id) || chain_ids_.count(chain.id))
    throw FormatError("duplicate row id " + std::to_string(chain.id), chain.line);
  if (chain.antecedents.size() < 2)
    throw FormatError("chain " + std::to_string(chain.id) + " needs at least two antecedents",
                      chain.line);
  chain_ids_.insert(chain.id);
  lines_.emplace(chain.id, chain.line);
  chains_.push_back(std::move(chain));
}

const Clause* ProofDb::lookup(ClauseId id) const {
  if (auto it = rtbl_.find(id); it != rtbl_.end()) return &it->second;
  if (auto it = input_index_.find(id); it != input_index_.end())
    return &inputs_[it->second].second;
  return nullptr;
}

std::vector<Clause> ProofDb::find_clause(std::span<const ClauseId> ids) const {
  std::vector<Clause> out;
  out.reserve(ids.size());
  for (ClauseId id : ids) {
    const Clause* c = lookup(id);
    if (!c) throw MissingIdError(id);
    out.push_back(*c);
  }
  return out;
}

Verdict ProofDb::find_and_resolve(const ResolveOptions& options) {
  rtbl_.clear();
  Verdict v;
  if (inputs_.empty() && chains_.empty()) {
    v.status = CheckStatus::FormatError;
    v.reason = FailReason::EmptyTrace;
    v.message = "trace has no input clauses and no chains";
    return v;
  }
  if (chains_.empty()) {
    v.status = CheckStatus::NotVerified;
    v.reason = FailReason::NoChains;
    v.message = "trace derives nothing: no chains present";
    return v;
  }
  rtbl_.reserve(chains_.size());

  std::vector<const Clause*> refs;
  Clause running, buf;
  for (const Chain& chain : chains_) {
    refs.clear();
    refs.reserve(chain.antecedents.size());
    for (ClauseId id : chain.antecedents) {
      const Clause* c = lookup(id);
      if (!c) {
        v.status = CheckStatus::FormatError;
        v.reason = FailReason::MissingId;
        v.chain_id = chain.id;
        v.message = "chain " + std::to_string(chain.id) + " references undefined clause id " +
                    std::to_string(id);
        return v;
      }
      refs.push_back(c);
    }

    if (options.reorder) {
      std::vector<Clause> ants;
      ants.reserve(refs.size());
      for (const Clause* c : refs) ants.push_back(*c);
      ReorderResult rr = reorder_chain(ants);
      if (!rr.ok) {
        v.status = CheckStatus::NotVerified;
        v.reason = FailReason::ReorderFailed;
        v.chain_id = chain.id;
        v.message = "chain " + std::to_string(chain.id) +
                    " cannot be aligned: no antecedent shares exactly one complementary pair "
                    "with the running resolvent after " +
                    std::to_string(rr.consumed) + " of " + std::to_string(ants.size()) +
                    " clauses";
        return v;
      }
      running = chain_resolution(rr.clauses);
      v.stats.resolutions += chain.antecedents.size() - 1;
    } else {
      running = *refs[0];
      for (std::size_t k = 1; k < refs.size(); ++k) {
        resolve_into(buf, running, *refs[k]);
        std::swap(running, buf);
        ++v.stats.resolutions;
      }
    }

    rtbl_.emplace(chain.id, running);
    if (chain.stated_resolvent && !same_multiset(running, *chain.stated_resolvent)) {
      v.status = CheckStatus::NotVerified;
      v.reason = FailReason::ResolventMismatch;
      v.chain_id = chain.id;
      v.final_resolvent = running;
      v.message = "chain " + std::to_string(chain.id) + ": computed resolvent " +
                  clause_to_string(running) + " does not match stated resolvent " +
                  clause_to_string(*chain.stated_resolvent);
      return v;
    }
  }

  const Clause& last = rtbl_.at(chains_.back().id);
  v.final_resolvent = last;
  v.chain_id = chains_.back().id;
  if (last.empty()) {
    v.status = CheckStatus::VerifiedUnsat;
    v.reason = FailReason::None;
  } else {
    v.status = CheckStatus::NotVerified;
    v.reason = FailReason::FinalClauseNotEmpty;
    v.message = "final clause not empty: chain " + std::to_string(chains_.back().id) +
                " resolves to " + clause_to_string(last);
  }
  return v;
}

OriginCheck ProofDb::check_origins(std::span<const Clause> cnf_clauses) const {
  for (const auto& [id, clause] : inputs_) {
    OriginCheck fail;
    fail.ok = false;
    fail.id = id;
    if (id > cnf_clauses.size()) {
      fail.message = "input row " + std::to_string(id) + " is outside the original problem (" +
                     std::to_string(cnf_clauses.size()) + " clauses)";
      return fail;
    }
    if (cnf_clauses[id - 1] != clause) {
      fail.message = "input row " + std::to_string(id) + " " + clause_to_string(clause) +
                     " differs from original clause " + clause_to_string(cnf_clauses[id - 1]);
      return fail;
    }
  }
  return {};
}

}  // namespace rescheck
