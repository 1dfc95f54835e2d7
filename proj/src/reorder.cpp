#include "rescheck/reorder.hpp"

#include <algorithm>

#include "rescheck/resolve.hpp"

namespace rescheck {

ReorderResult reorder_chain(std::span<const Clause> antecedents) {
  const std::size_t n = antecedents.size();
  ReorderResult best;
  if (n < 2) {
    best.ok = true;
    best.clauses.assign(antecedents.begin(), antecedents.end());
    best.consumed = n;
    return best;
  }

  std::vector<bool> used(n);
  for (std::size_t seed = 0; seed < n; ++seed) {
    std::fill(used.begin(), used.end(), false);
    used[seed] = true;
    std::vector<Clause> order;
    order.reserve(n);
    order.push_back(antecedents[seed]);
    Clause running = antecedents[seed];

    bool stuck = false;
    while (order.size() < n && !stuck) {
      stuck = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        if (comp_pair_count(running, antecedents[i]) == 1) {
          running = resolve(running, antecedents[i]);
          order.push_back(antecedents[i]);
          used[i] = true;
          stuck = false;
          break;
        }
      }
    }

    if (order.size() == n) {
      best.ok = true;
      best.clauses = std::move(order);
      best.consumed = n;
      return best;
    }
    if (order.size() > best.consumed) best.consumed = order.size();
  }
  return best;
}

}  // namespace rescheck
