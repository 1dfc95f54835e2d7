#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rescheck/formats.hpp"

namespace rescheck {

// 2^20 assignments: the largest exhaustive search the oracles run by default.
inline constexpr int kDefaultOracleBound = 20;

// Partial truth assignment, dense over variable indexes. A literal's value
// is derived from its variable's: negation flips it, so l and -l can never
// agree. Reading an unassigned variable throws UnassignedVariable.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(Var num_vars)
      : state_(static_cast<std::size_t>(num_vars) + 1, kUnset) {}

  void assign(Var v, bool value);
  bool is_assigned(Var v) const;
  bool literal_value(Lit l) const;

 private:
  static constexpr std::int8_t kUnset = -1;
  std::vector<std::int8_t> state_;
};

// Disjunction over the clause; the empty clause is false. Requires every
// variable of c to be assigned.
bool eval_clause(const Clause& c, const Interpretation& i);

// Conjunction over the clauses; the empty list is true.
bool and_clauses(std::span<const Clause> cs, const Interpretation& i);

// Exhaustive entailment over the variables occurring in premises and
// conclusion. Throws BoundExceeded when that set is larger than bound.
bool entails(std::span<const Clause> premises, const Clause& conclusion,
             int bound = kDefaultOracleBound);

// Exhaustive satisfiability over all num_vars variables, enumerating
// all-false upward; returns the first model or nullopt for unsatisfiable.
// Throws BoundExceeded when num_vars > bound.
std::optional<Assignment> brute_force_sat(const CnfProblem& p,
                                          int bound = kDefaultOracleBound);

// A satisfiability certificate is accepted only when every clause contains a
// literal made true by an explicitly assigned variable, so the verdict holds
// no matter how absent variables are defaulted. failed_clause is the 1-based
// index of the first clause that is falsified or undetermined.
struct SatCheckResult {
  bool verified = false;
  std::size_t failed_clause = 0;
};
SatCheckResult check_sat_certificate(const CnfProblem& p, const Assignment& a);

}  // namespace rescheck
