#include "hstar/random.hpp"

#include "hstar/error.hpp"

namespace hstar {

LatticeSimplex random_simplex(std::mt19937_64& rng, std::size_t dim, std::int64_t lo, std::int64_t hi,
                              std::uint64_t max_volume) {
  if (dim < 1 || lo > hi) throw Error(ErrorCode::RangeViolated, "need dim >= 1 and lo <= hi");
  std::uniform_int_distribution<std::int64_t> coord(lo, hi);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Point> vs(dim + 1, Point(dim));
    for (auto& v : vs)
      for (auto& x : v) x = coord(rng);
    IntMatrix edges(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) edges(i, j) = vs[i + 1][j] - vs[0][j];
    const BigInt det = abs(determinant(edges));
    if (det == 0 || det > max_volume) continue;
    return LatticeSimplex(std::move(vs));
  }
  throw Error(ErrorCode::Degenerate, "no full-dimensional simplex found in the coordinate box");
}

}  // namespace hstar
