#pragma once

#include <span>
#include <vector>

#include "rescheck/clause.hpp"

namespace rescheck {

// Resolution is a single merge of two variable-sorted clauses. merge_resolve
// walks both inputs, deletes the first complementary pair it meets, and hands
// the tails to merge_keep, which copies any further complementary pair into
// the output (producing a tautological clause instead of resolving twice).
// Equal literals are emitted once. On canonical (wf) inputs the result is
// sorted by variable index; any equal-variable neighbours in the output are
// exactly the copied complementary pairs.
//
// acc holds already-emitted literals in reverse order (most recent first);
// both functions start by reversing it, mirroring the accumulator discipline
// of the underlying recursion. Passing {} gives the plain merge.
Clause merge_resolve(std::span<const Lit> c1, std::span<const Lit> c2,
                     std::vector<Lit> acc = {});
Clause merge_keep(std::span<const Lit> c1, std::span<const Lit> c2,
                  std::vector<Lit> acc = {});

// resolve(c1, c2) == merge_resolve(c1, c2, {}).
Clause resolve(std::span<const Lit> c1, std::span<const Lit> c2);

// Same merge written into a caller-owned buffer (cleared first) so a replay
// loop can ping-pong two vectors instead of allocating per step. out must
// not alias c1 or c2.
void resolve_into(Clause& out, std::span<const Lit> c1, std::span<const Lit> c2);

// resolve plus instrumentation: pair_deleted reports whether a complementary
// pair was deleted, pair_kept whether a second pair was copied through.
// A trivial resolution step is pair_deleted && !pair_kept.
struct ResolveStep {
  Clause resolvent;
  bool pair_deleted = false;
  bool pair_kept = false;
};
ResolveStep resolve_step(std::span<const Lit> c1, std::span<const Lit> c2);

// Left fold of resolve over the sequence; empty input yields the empty
// clause, a singleton is returned unchanged.
Clause chain_resolution(std::span<const Clause> clauses);

}  // namespace rescheck
