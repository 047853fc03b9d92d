#pragma once

#include "hstar/simplex.hpp"

#include <cstdint>
#include <string>

namespace hstar {

/// Outcome of a realizability predicate together with the clause that decided it.
struct Verdict {
  bool feasible = false;
  std::string rule;
};

bool is_palindromic(const HStarPolynomial& h);

/// 1 + a t + b t^2 as the h* of a lattice polygon.
Verdict scott_check(std::int64_t a, std::int64_t b);
inline bool scott_feasible(std::int64_t a, std::int64_t b) { return scott_check(a, b).feasible; }

/// 1 + a t + b t^2 as the h* of a lattice polytope of any dimension.
Verdict degree2_check(std::int64_t a, std::int64_t b);
inline bool degree2_feasible(std::int64_t a, std::int64_t b) { return degree2_check(a, b).feasible; }

/// 1 + a t^k (k >= 2) as the h* of a d-dimensional lattice polytope that is
/// not a lattice pyramid.
Verdict binomial_check(std::int64_t k, std::int64_t d, std::int64_t a);
inline bool binomial_feasible(std::int64_t k, std::int64_t d, std::int64_t a) {
  return binomial_check(k, d, a).feasible;
}

/// 1 + (m-2) t + t^2 for a d-dimensional non-pyramid.
Verdict gorenstein_deg2_check(std::int64_t m, std::int64_t d);
inline bool gorenstein_deg2_feasible(std::int64_t m, std::int64_t d) { return gorenstein_deg2_check(m, d).feasible; }

struct TrinomialVerdict : Verdict {
  /// What the five-condition list gives when read literally. It disagrees
  /// with the family classification for m = 9 and k >= 2, where the
  /// classification admits l = 2 in the m = 3^l case.
  bool literal_reading = false;
  bool differs() const noexcept { return feasible != literal_reading; }
};

/// 1 + (m-2) t^k + t^{2k} as the h* of some d-dimensional lattice polytope.
/// The family classification is normative.
TrinomialVerdict trinomial_check(std::int64_t k, std::int64_t m, std::int64_t d);
inline bool trinomial_palindromic_feasible(std::int64_t k, std::int64_t m, std::int64_t d) {
  return trinomial_check(k, m, d).feasible;
}

}  // namespace hstar
