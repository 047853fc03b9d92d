#include "hstar/polytope_ops.hpp"

#include "hstar/error.hpp"

namespace hstar {

LatticeSimplex lattice_pyramid(const LatticeSimplex& s) {
  std::vector<Point> vertices;
  vertices.reserve(s.vertices().size() + 1);
  for (const auto& v : s.vertices()) {
    Point w = v;
    w.push_back(0);
    vertices.push_back(std::move(w));
  }
  Point apex(s.dim() + 1, 0);
  apex.back() = 1;
  vertices.push_back(std::move(apex));
  return LatticeSimplex(std::move(vertices));
}

PointConfiguration cayley(const std::vector<PointConfiguration>& polytopes) {
  if (polytopes.empty()) throw Error(ErrorCode::DimensionMismatch, "Cayley polytope of an empty list");
  const std::size_t n = polytopes.size();
  const std::size_t t = polytopes.front().ambient_dim;
  PointConfiguration out{n + t, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (polytopes[i].ambient_dim != t)
      throw Error(ErrorCode::DimensionMismatch, "Cayley factors must share one ambient space");
    for (const auto& v : polytopes[i].points) {
      if (v.size() != t) throw Error(ErrorCode::DimensionMismatch, "point outside the declared ambient space");
      Point w(n, 0);
      w[i] = 1;
      w.insert(w.end(), v.begin(), v.end());
      out.points.push_back(std::move(w));
    }
  }
  return out;
}

LatticeSimplex cayley_simplex(const std::vector<PointConfiguration>& polytopes) {
  PointConfiguration joined = cayley(polytopes);
  std::vector<Point> vertices;
  vertices.reserve(joined.points.size());
  for (auto& p : joined.points) vertices.emplace_back(p.begin() + 1, p.end());
  if (vertices.empty() || vertices.size() != joined.ambient_dim)
    throw Error(ErrorCode::Degenerate, "Cayley polytope has " + std::to_string(vertices.size()) +
                                           " points in dimension " + std::to_string(joined.ambient_dim - 1) +
                                           "; not a simplex");
  return LatticeSimplex(std::move(vertices));
}

}  // namespace hstar
