#include "rescheck/clause.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "rescheck/errors.hpp"

namespace rescheck {

WfReport is_wf(const Clause& c) {
  WfReport r;
  r.no_dup = true;
  r.no_comp_pair = true;
  r.sorted = true;
  std::unordered_set<Lit> seen;
  seen.reserve(c.size() * 2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Lit l = c[i];
    if (seen.count(l)) r.no_dup = false;
    if (l != std::numeric_limits<Lit>::min() && seen.count(-l)) r.no_comp_pair = false;
    seen.insert(l);
    if (i > 0 && var_of(c[i - 1]) > var_of(l)) r.sorted = false;
  }
  return r;
}

Clause normalize_clause(const Clause& raw) {
  Clause c = raw;
  // (variable, sign) order: -v sorts directly before v, so duplicates and
  // complementary pairs both end up adjacent.
  std::sort(c.begin(), c.end(), [](Lit a, Lit b) {
    Var va = var_of(a), vb = var_of(b);
    return va != vb ? va < vb : a < b;
  });
  Clause out;
  out.reserve(c.size());
  for (Lit l : c) {
    if (!out.empty()) {
      if (out.back() == l) continue;
      if (var_of(out.back()) == var_of(l)) throw TautologyError(var_of(l));
    }
    out.push_back(l);
  }
  return out;
}

std::size_t count_lit(Lit l, const Clause& c) {
  return static_cast<std::size_t>(std::count(c.begin(), c.end(), l));
}

std::size_t comp_pair_count(const Clause& c1, const Clause& c2) {
  std::unordered_map<Lit, std::size_t> occ;
  occ.reserve(c1.size() * 2);
  for (Lit l : c1) ++occ[l];
  std::size_t pairs = 0;
  for (Lit y : c2) {
    if (y == std::numeric_limits<Lit>::min()) continue;  // -y not representable
    auto it = occ.find(-y);
    if (it != occ.end()) pairs += it->second;
  }
  return pairs;
}

bool unique_comp_pair(const Clause& c1, const Clause& c2) {
  return comp_pair_count(c1, c2) == 1;
}

bool no_comp_lit(Lit l, const Clause& c) {
  for (Lit m : c)
    if (complementary(l, m)) return false;
  return true;
}

}  // namespace rescheck
