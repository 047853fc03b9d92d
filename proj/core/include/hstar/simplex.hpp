#pragma once

#include "hstar/int_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hstar {

using Point = std::vector<std::int64_t>;

/// A full-dimensional lattice simplex given by d+1 vertices in Z^d. Vertex
/// order is kept exactly as supplied; the subgroup attached to a simplex
/// depends on it.
class LatticeSimplex {
 public:
  /// Raises DimensionMismatch if some vertex does not have vertices.size()-1
  /// coordinates, Degenerate if the vertices are affinely dependent.
  explicit LatticeSimplex(std::vector<Point> vertices);

  std::size_t dim() const noexcept { return vertices_.size() - 1; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_.at(i); }

  /// Rows v_i - v_0, i = 1..d.
  IntMatrix edge_matrix() const;
  /// Rows (v_i, 1), i = 0..d.
  IntMatrix homogeneous_matrix() const;

  bool operator==(const LatticeSimplex&) const = default;

 private:
  std::vector<Point> vertices_;
};

/// h*_0 + h*_1 t + ... + h*_s t^s with trailing zeros trimmed; the degree of
/// the constant polynomial [1] is 0.
class HStarPolynomial {
 public:
  HStarPolynomial() : coeffs_{1} {}
  explicit HStarPolynomial(std::vector<std::uint64_t> coeffs);

  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  /// Zero-padded access.
  std::uint64_t operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  /// Sum of coefficients, i.e. the normalized volume.
  std::uint64_t volume() const noexcept;

  /// "1 + 7t + t^2" style.
  std::string to_string() const;

  bool operator==(const HStarPolynomial&) const = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

/// |det(v_1 - v_0, ..., v_d - v_0)|.
BigInt normalized_volume(const LatticeSimplex& s);

/// Number of lattice points in the t-th dilate. Membership is decided with
/// exact barycentric coordinates after a unimodular change of basis that
/// makes the edge matrix triangular, so only feasible coordinate ranges are
/// scanned.
std::uint64_t count_lattice_points(const LatticeSimplex& s, std::uint64_t t);

/// Lattice points in the relative interior of the t-th dilate.
std::uint64_t count_interior_points(const LatticeSimplex& s, std::uint64_t t);

/// h* from the counts at t = 0..d through
/// h*_i = sum_{j<=i} (-1)^{i-j} C(d+1, i-j) #(jS ∩ Z^d).
/// Raises NegativeCoefficient if a coefficient comes out negative, which can
/// only mean a counting bug.
HStarPolynomial hstar_by_counting(const LatticeSimplex& s);

/// Inverts the Ehrhart binomial relation for a list of counts #(jS ∩ Z^d),
/// j = 0..d. Exposed for tests that supply counts from elsewhere.
HStarPolynomial hstar_from_counts(const std::vector<std::uint64_t>& counts);

}  // namespace hstar
