#include "rescheck/semantics.hpp"

#include <algorithm>
#include <set>

#include "rescheck/errors.hpp"

namespace rescheck {

void Interpretation::assign(Var v, bool value) {
  if (static_cast<std::size_t>(v) >= state_.size())
    state_.resize(static_cast<std::size_t>(v) + 1, kUnset);
  state_[static_cast<std::size_t>(v)] = value ? 1 : 0;
}

bool Interpretation::is_assigned(Var v) const {
  return static_cast<std::size_t>(v) < state_.size() &&
         state_[static_cast<std::size_t>(v)] != kUnset;
}

bool Interpretation::literal_value(Lit l) const {
  Var v = var_of(l);
  if (!is_assigned(v)) throw UnassignedVariable(v);
  bool value = state_[static_cast<std::size_t>(v)] == 1;
  return l > 0 ? value : !value;
}

bool eval_clause(const Clause& c, const Interpretation& i) {
  for (Lit l : c)
    if (i.literal_value(l)) return true;
  return false;
}

bool and_clauses(std::span<const Clause> cs, const Interpretation& i) {
  for (const Clause& c : cs)
    if (!eval_clause(c, i)) return false;
  return true;
}

bool entails(std::span<const Clause> premises, const Clause& conclusion, int bound) {
  bound = std::min(bound, 62);  // keep the 1<<n in range whatever the caller asks
  std::set<Var> var_set;
  for (const Clause& c : premises)
    for (Lit l : c) var_set.insert(var_of(l));
  for (Lit l : conclusion) var_set.insert(var_of(l));
  std::vector<Var> vars(var_set.begin(), var_set.end());

  if (static_cast<int>(vars.size()) > bound)
    throw BoundExceeded(static_cast<int>(vars.size()), bound);

  Interpretation i(vars.empty() ? 0 : vars.back());
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t b = 0; b < vars.size(); ++b) i.assign(vars[b], (mask >> b) & 1);
    if (and_clauses(premises, i) && !eval_clause(conclusion, i)) return false;
  }
  return true;
}

std::optional<Assignment> brute_force_sat(const CnfProblem& p, int bound) {
  bound = std::min(bound, 62);
  if (p.num_vars > bound) throw BoundExceeded(p.num_vars, bound);
  Interpretation i(p.num_vars);
  const std::uint64_t total = std::uint64_t{1} << p.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (Var v = 1; v <= p.num_vars; ++v) i.assign(v, (mask >> (v - 1)) & 1);
    if (and_clauses(p.clauses, i)) {
      Assignment a;
      for (Var v = 1; v <= p.num_vars; ++v) a.values[v] = (mask >> (v - 1)) & 1;
      return a;
    }
  }
  return std::nullopt;
}

SatCheckResult check_sat_certificate(const CnfProblem& p, const Assignment& a) {
  for (std::size_t k = 0; k < p.clauses.size(); ++k) {
    bool satisfied = false;
    for (Lit l : p.clauses[k]) {
      auto it = a.values.find(var_of(l));
      if (it != a.values.end() && it->second == (l > 0)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return {false, k + 1};
  }
  return {true, 0};
}

}  // namespace rescheck
