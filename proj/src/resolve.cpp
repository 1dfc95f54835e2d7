#include "rescheck/resolve.hpp"

#include <algorithm>

namespace rescheck {

namespace {

// Appends the pair-keeping merge of c1[i..] and c2[j..] to out. A
// complementary pair at the heads is copied with c2's literal first: the
// recursion pushes x on top of y onto a reversed accumulator, so y surfaces
// first after reversal.
void keep_append(std::span<const Lit> c1, std::size_t i, std::span<const Lit> c2,
                 std::size_t j, Clause& out, bool* kept) {
  while (i < c1.size() && j < c2.size()) {
    Lit x = c1[i], y = c2[j];
    Var vx = var_of(x), vy = var_of(y);
    if (vx < vy) {
      out.push_back(x);
      ++i;
    } else if (vy < vx) {
      out.push_back(y);
      ++j;
    } else if (x == y) {
      out.push_back(x);
      ++i;
      ++j;
    } else {
      out.push_back(y);
      out.push_back(x);
      if (kept) *kept = true;
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), c1.begin() + static_cast<std::ptrdiff_t>(i), c1.end());
  out.insert(out.end(), c2.begin() + static_cast<std::ptrdiff_t>(j), c2.end());
}

// Appends the resolving merge: identical walk, but the first complementary
// pair is dropped and the tails switch to keep_append.
void resolve_append(std::span<const Lit> c1, std::span<const Lit> c2, Clause& out,
                    bool* deleted, bool* kept) {
  std::size_t i = 0, j = 0;
  while (i < c1.size() && j < c2.size()) {
    Lit x = c1[i], y = c2[j];
    if (complementary(x, y)) {
      if (deleted) *deleted = true;
      keep_append(c1, i + 1, c2, j + 1, out, kept);
      return;
    }
    Var vx = var_of(x), vy = var_of(y);
    if (vx < vy) {
      out.push_back(x);
      ++i;
    } else if (vy < vx) {
      out.push_back(y);
      ++j;
    } else {  // same variable, same sign: x == y
      out.push_back(x);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), c1.begin() + static_cast<std::ptrdiff_t>(i), c1.end());
  out.insert(out.end(), c2.begin() + static_cast<std::ptrdiff_t>(j), c2.end());
}

Clause seed_from_acc(std::vector<Lit> acc) {
  std::reverse(acc.begin(), acc.end());
  return acc;
}

}  // namespace

Clause merge_resolve(std::span<const Lit> c1, std::span<const Lit> c2,
                     std::vector<Lit> acc) {
  Clause out = seed_from_acc(std::move(acc));
  out.reserve(out.size() + c1.size() + c2.size());
  resolve_append(c1, c2, out, nullptr, nullptr);
  return out;
}

Clause merge_keep(std::span<const Lit> c1, std::span<const Lit> c2,
                  std::vector<Lit> acc) {
  Clause out = seed_from_acc(std::move(acc));
  out.reserve(out.size() + c1.size() + c2.size());
  keep_append(c1, 0, c2, 0, out, nullptr);
  return out;
}

Clause resolve(std::span<const Lit> c1, std::span<const Lit> c2) {
  Clause out;
  out.reserve(c1.size() + c2.size());
  resolve_append(c1, c2, out, nullptr, nullptr);
  return out;
}

void resolve_into(Clause& out, std::span<const Lit> c1, std::span<const Lit> c2) {
  out.clear();
  out.reserve(c1.size() + c2.size());
  resolve_append(c1, c2, out, nullptr, nullptr);
}

ResolveStep resolve_step(std::span<const Lit> c1, std::span<const Lit> c2) {
  ResolveStep step;
  step.resolvent.reserve(c1.size() + c2.size());
  resolve_append(c1, c2, step.resolvent, &step.pair_deleted, &step.pair_kept);
  return step;
}

Clause chain_resolution(std::span<const Clause> clauses) {
  if (clauses.empty()) return {};
  Clause r = clauses[0];
  Clause buf;
  for (std::size_t k = 1; k < clauses.size(); ++k) {
    buf.clear();
    buf.reserve(r.size() + clauses[k].size());
    resolve_append(r, clauses[k], buf, nullptr, nullptr);
    std::swap(r, buf);
  }
  return r;
}

}  // namespace rescheck
