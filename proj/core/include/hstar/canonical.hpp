#pragma once

#include "hstar/group.hpp"

#include <cstddef>
#include <vector>

namespace hstar {

/// Representative of a group's orbit under permutation of coordinates.
///
/// Columns are placed one position at a time. After k placements every
/// element has a k-prefix, and the sorted list of those prefixes is the
/// level-k key; the search keeps exactly the partial placements whose keys
/// are minimal at every level. The first level therefore sorts columns by
/// their value multiset and later levels break ties among equal columns.
/// The final key is the sorted element list of the returned group, and it
/// is the same for every coordinate permutation of the input.
struct CanonicalLabeling {
  SimplexGroup group;
  /// permutation[k] = input coordinate placed at position k.
  std::vector<std::size_t> permutation;
};

inline constexpr std::size_t kDefaultCanonicalBudget = 100'000;

/// Raises CanonicalizationBudget once more than `node_budget` candidate
/// placements have been examined.
CanonicalLabeling canonical_labeling(const SimplexGroup& g, std::size_t node_budget = kDefaultCanonicalBudget);

inline SimplexGroup canonical_form(const SimplexGroup& g, std::size_t node_budget = kDefaultCanonicalBudget) {
  return canonical_labeling(g, node_budget).group;
}

/// Applies a coordinate permutation: output coordinate k is input coordinate
/// permutation[k].
SimplexGroup permute_coordinates(const SimplexGroup& g, const std::vector<std::size_t>& permutation);

}  // namespace hstar
