#pragma once

#include "hstar/group.hpp"
#include "hstar/simplex.hpp"

#include <cstddef>
#include <vector>

namespace hstar {

/// The group of fractional coefficient vectors x in [0,1)^{d+1} with
/// sum_i x_i (v_i, 1) integral, computed from the Smith form of the
/// transposed homogeneous vertex matrix. Its order is the normalized volume.
SimplexGroup group_of_simplex(const LatticeSimplex& s, std::size_t cap = SimplexGroup::kDefaultCap);

/// A simplex whose group is exactly `g`, coordinate order included. The
/// result is one fixed representative (vertex 0 at the origin, edge matrix
/// in upper-triangular Hermite form); only the round trip is guaranteed.
/// Raises NonIntegerHeight if some element has a fractional coordinate sum.
LatticeSimplex simplex_of_group(const SimplexGroup& g);

/// h*_i = number of elements of height i.
HStarPolynomial hstar_from_group(const SimplexGroup& g);

/// Coordinates on which every element vanishes. Nonempty exactly when a
/// realizing simplex is a lattice pyramid.
std::vector<std::size_t> pyramid_indices(const SimplexGroup& g);
inline bool is_lattice_pyramid(const SimplexGroup& g) { return !pyramid_indices(g).empty(); }

}  // namespace hstar
