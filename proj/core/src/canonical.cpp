#include "hstar/canonical.hpp"

#include "hstar/error.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace hstar {
namespace {

struct Placement {
  std::vector<std::size_t> order;   // columns placed so far
  std::vector<bool> used;
  std::vector<std::int64_t> rank;   // per element: rank of its prefix among distinct prefixes
};

}  // namespace

SimplexGroup permute_coordinates(const SimplexGroup& g, const std::vector<std::size_t>& permutation) {
  const std::size_t n = g.ambient_len();
  if (permutation.size() != n) throw Error(ErrorCode::DimensionMismatch, "permutation length mismatch");
  std::vector<std::vector<std::int64_t>> rows(g.order(), std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto r = g.row(i);
    for (std::size_t k = 0; k < n; ++k) rows[i][k] = r[permutation[k]];
  }
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& src : g.generators()) {
    std::vector<std::int64_t> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = src[permutation[k]];
    gens.push_back(std::move(p));
  }
  // Generators carry over unchanged, so regenerate rather than re-derive.
  return SimplexGroup::generated(n, g.denominator(), gens, g.order());
}

CanonicalLabeling canonical_labeling(const SimplexGroup& g, std::size_t node_budget) {
  const std::size_t n = g.ambient_len();
  const std::size_t m = g.order();
  const std::int64_t q = g.denominator();

  std::vector<Placement> level{Placement{{}, std::vector<bool>(n, false), std::vector<std::int64_t>(m, 0)}};
  std::size_t nodes = 0;
  std::vector<std::int64_t> key(m);

  for (std::size_t pos = 0; pos < n; ++pos) {
    std::vector<std::int64_t> best;
    std::vector<std::pair<std::size_t, std::size_t>> winners;  // (placement index, column)
    for (std::size_t s = 0; s < level.size(); ++s) {
      const Placement& pl = level[s];
      for (std::size_t c = 0; c < n; ++c) {
        if (pl.used[c]) continue;
        if (++nodes > node_budget)
          throw Error(ErrorCode::CanonicalizationBudget,
                      "canonical search exceeded " + std::to_string(node_budget) + " nodes");
        // Comparing (rank, value) pairs compares extended prefixes, because
        // every surviving placement shares the same sorted prefix list.
        for (std::size_t e = 0; e < m; ++e) key[e] = pl.rank[e] * q + g.row(e)[c];
        std::sort(key.begin(), key.end());
        if (winners.empty() || key < best) {
          best = key;
          winners.assign(1, {s, c});
        } else if (key == best) {
          winners.emplace_back(s, c);
        }
      }
    }

    // Placements with the same column set and the same element partition
    // have identical futures; keep one of each.
    std::set<std::pair<std::vector<bool>, std::vector<std::int64_t>>> seen;
    std::vector<Placement> next;
    std::vector<std::int64_t> distinct = best;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& [s, c] : winners) {
      const Placement& pl = level[s];
      Placement child{pl.order, pl.used, std::vector<std::int64_t>(m)};
      child.order.push_back(c);
      child.used[c] = true;
      for (std::size_t e = 0; e < m; ++e) {
        const std::int64_t v = pl.rank[e] * q + g.row(e)[c];
        child.rank[e] = std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin();
      }
      if (seen.emplace(child.used, child.rank).second) next.push_back(std::move(child));
    }
    level = std::move(next);
  }

  const std::vector<std::size_t> perm = level.empty() ? std::vector<std::size_t>{} : level.front().order;
  std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < m; ++i) {
    auto r = g.row(i);
    for (std::size_t k = 0; k < n; ++k) rows[i][k] = r[perm[k]];
  }
  return {SimplexGroup::from_elements(n, q, std::move(rows)), perm};
}

}  // namespace hstar
