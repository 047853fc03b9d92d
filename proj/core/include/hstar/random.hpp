#pragma once

#include "hstar/simplex.hpp"

#include <cstdint>
#include <random>

namespace hstar {

/// Uniform vertex coordinates in [lo, hi], resampled until the simplex is
/// full-dimensional and its normalized volume is at most max_volume.
LatticeSimplex random_simplex(std::mt19937_64& rng, std::size_t dim, std::int64_t lo, std::int64_t hi,
                              std::uint64_t max_volume = 1'000'000);

}  // namespace hstar
