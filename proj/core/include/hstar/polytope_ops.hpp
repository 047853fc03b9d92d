#pragma once

#include "hstar/simplex.hpp"

#include <vector>

namespace hstar {

/// conv(S x {0}, e_{d+1}): one dimension up, same h*.
LatticeSimplex lattice_pyramid(const LatticeSimplex& s);

/// A lattice polytope given only by a list of lattice points (its vertices,
/// in a fixed order); no convex-hull work is done on it.
struct PointConfiguration {
  std::size_t ambient_dim = 0;
  std::vector<Point> points;
};

/// conv(e_1 x P_1, ..., e_n x P_n) in R^n x R^t, listed block by block in
/// input order. Raises DimensionMismatch if the inputs live in different R^t.
PointConfiguration cayley(const std::vector<PointConfiguration>& polytopes);

/// The Cayley polytope as a full-dimensional simplex. It lies in the
/// hyperplane where the first n coordinates sum to 1; dropping the first
/// coordinate is a lattice isomorphism onto Z^{n-1+t}. Raises Degenerate if
/// the points are not the vertices of a simplex.
LatticeSimplex cayley_simplex(const std::vector<PointConfiguration>& polytopes);

}  // namespace hstar
