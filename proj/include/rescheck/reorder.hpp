#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rescheck/clause.hpp"

namespace rescheck {

struct ReorderResult {
  bool ok = false;
  std::vector<Clause> clauses;  // the aligned permutation when ok
  std::size_t consumed = 0;     // clauses placed in the best failed attempt
};

// Greedy alignment of a compact chain whose antecedents arrive in an order
// the fold cannot consume. Each seed clause is tried in input order; from a
// seed, the remaining antecedent that shares exactly one complementary pair
// with the running resolvent is appended (ties broken by input position)
// until all are consumed. The first seed that completes wins, so a chain
// that already folds one-pair-per-step is returned unchanged. Greedy search
// is deliberately not exhaustive: chains whose steps have ambiguous pivots
// can defeat it, and callers must treat failure as "not verified", never as
// "unsatisfiable". Every returned order deletes exactly one pair per step.
ReorderResult reorder_chain(std::span<const Clause> antecedents);

}  // namespace rescheck
