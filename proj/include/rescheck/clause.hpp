#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rescheck {

// A literal is a non-zero signed integer: the absolute value is the variable
// index, the sign is the polarity. Zero is reserved as a delimiter in the
// file formats and never appears inside a clause. Parsers reject magnitudes
// above INT32_MAX, so negating a literal cannot overflow.
using Lit = std::int32_t;
using Var = std::int32_t;

// Clauses are plain literal sequences. Most operations expect the canonical
// form produced by normalize_clause (strictly increasing variable index, no
// duplicate, no complementary pair), but the predicates below are total.
using Clause = std::vector<Lit>;

// Row identifier in a proof trace. Positive; input rows reuse the clause's
// 1-based position in the original problem.
using ClauseId = std::uint64_t;

inline Var var_of(Lit l) { return l < 0 ? -l : l; }

// Complement test via a widened sum: safe for any pair of 32-bit literals.
inline bool complementary(Lit a, Lit b) {
  return static_cast<std::int64_t>(a) + static_cast<std::int64_t>(b) == 0;
}

// Well-formedness is three independent flags so callers can report which
// one failed; wf() is their conjunction.
struct WfReport {
  bool no_dup = false;        // no literal occurs twice
  bool no_comp_pair = false;  // no variable occurs with both polarities
  bool sorted = false;        // non-decreasing variable index
  bool wf() const { return no_dup && no_comp_pair && sorted; }
};

WfReport is_wf(const Clause& c);

// Sorts by (variable, sign), drops duplicate literals, throws TautologyError
// if some variable occurs with both polarities. Idempotent; the result is wf.
Clause normalize_clause(const Clause& raw);

// Number of occurrences of l in c. Total; at most 1 on wf clauses.
std::size_t count_lit(Lit l, const Clause& c);

// Number of ordered pairs (x, y) with x in c1, y in c2, x + y == 0,
// counting multiplicity on both sides.
std::size_t comp_pair_count(const Clause& c1, const Clause& c2);

// True when exactly one complementary pair exists across c1 x c2; this is
// the precondition under which resolution deletes that pair and nothing else.
bool unique_comp_pair(const Clause& c1, const Clause& c2);

// True when c contains no complement of l.
bool no_comp_lit(Lit l, const Clause& c);

}  // namespace rescheck
