#pragma once

#include "hstar/fp_matrix.hpp"
#include "hstar/group.hpp"
#include "hstar/simplex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hstar {

/// Generator rows over a common denominator, in a fixed column order.
struct GeneratorMatrix {
  std::size_t len = 0;
  std::int64_t den = 1;
  std::vector<std::vector<std::int64_t>> rows;

  SimplexGroup group(std::size_t cap = SimplexGroup::kDefaultCap) const {
    return SimplexGroup::generated(len, den, rows, cap);
  }
};

// ---------------------------------------------------------------------------
// Binomial families: h* = 1 + (m-1) t^k.

/// Cyclic group on 2k coordinates generated by
/// (a_1/m, (m-a_1)/m, ..., a_k/m, (m-a_k)/m). Each a_i is first replaced by
/// m - a_i if it exceeds m/2. Raises RangeViolated for a_i = 0 mod m or a
/// wrong count, NotCoprime if gcd(a_i, m) > 1.
GeneratorMatrix white_cayley_generator(std::int64_t k, std::int64_t m, std::vector<std::int64_t> a);
SimplexGroup white_cayley_group(std::int64_t k, std::int64_t m, const std::vector<std::int64_t>& a);

/// The same group realized geometrically: the Cayley polytope of k empty
/// segments [0, u_i] in R^k, vertices ordered 0_1, u_1, 0_2, u_2, ...
LatticeSimplex white_cayley_simplex(std::int64_t k, std::int64_t m, const std::vector<std::int64_t>& a);

/// d solving (p^r - p^{r-1})(d+1) = 2k(p^r - 1), if an integer solution exists.
std::optional<std::int64_t> binomial_family_dimension(std::int64_t p, std::int64_t r, std::int64_t k);

/// Rows of (A, ..., A) for p = 2 or (A, -A, ..., A, -A) for odd p, divided by
/// p, where A generates the r-dimensional simplex code over F_p. Raises
/// NotPrime, RangeViolated (k < 2 or r < 1), NumericalConditionViolated if
/// the dimension relation fails, DivisibilityViolated if the repetition
/// count is not an integer.
GeneratorMatrix binomial_generator(std::int64_t p, std::int64_t r, std::int64_t k, std::int64_t d);
SimplexGroup binomial_family(std::int64_t p, std::int64_t r, std::int64_t k, std::int64_t d);

// ---------------------------------------------------------------------------
// Trinomial families: h* = 1 + (m-2) t^k + t^{2k}, never lattice pyramids.

enum class FamilyCase { A3, A4_3k, A4_4k, A6, A8, B, C };

std::string_view to_string(FamilyCase c);

struct FamilySpec {
  FamilyCase kind = FamilyCase::A3;
  std::int64_t k = 2;
  std::int64_t a = 0;    // cases B and C only
  std::int64_t ell = 0;  // cases B and C only

  static FamilySpec case_b(std::int64_t a, std::int64_t ell);
  static FamilySpec case_c(std::int64_t a, std::int64_t ell);

  /// "case:k" or, for B and C, "case:k:a:ell", e.g. "a6:2", "b:2:2:3".
  /// Case tags: a3, a4-3k, a4-4k, a6, a8, b, c. Raises InvalidSpec.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  /// Group order.
  std::int64_t m() const;
  /// Dimension of the realizing simplex; the group lives on d+1 coordinates.
  std::int64_t d() const;

  /// Raises InvalidSpec naming the violated constraint.
  void validate() const;

  bool operator==(const FamilySpec&) const = default;
};

/// Generator rows in the column order the classification prints them, so
/// the worked examples compare entry for entry. For B and C the simplex code
/// block uses binary/ternary counting order (row 0 least significant).
GeneratorMatrix trinomial_generator(const FamilySpec& spec);
SimplexGroup trinomial_family(const FamilySpec& spec);

/// Every valid spec with the given (k, m, d).
std::vector<FamilySpec> trinomial_specs_for(std::int64_t k, std::int64_t m, std::int64_t d);
/// Every valid spec with the given (k, d).
std::vector<FamilySpec> trinomial_specs_for(std::int64_t k, std::int64_t d);

}  // namespace hstar
