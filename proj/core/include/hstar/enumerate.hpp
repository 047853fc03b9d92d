#pragma once

#include "hstar/group.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hstar {

/// Search space for enumerate_groups. Only groups all of whose elements have
/// integer height are produced, since only those come from lattice simplices.
struct EnumerationBounds {
  /// Number of coordinates (simplex dimension + 1).
  std::size_t n = 1;
  /// Orders a nontrivial element may have; empty means any.
  std::vector<std::int64_t> allowed_orders;
  std::int64_t max_order = 1;
  std::size_t max_rank = 1;
  /// When set, only elementary abelian p-groups are enumerated, as row
  /// echelon generator matrices over F_p.
  std::optional<std::int64_t> elementary_prime;
  /// Skip groups with an identically zero coordinate.
  bool exclude_pyramids = false;
  /// Candidate generator matrices examined before BudgetExceeded.
  std::uint64_t budget = 100'000'000;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  /// Raises RangeViolated or NotPrime.
  void validate() const;
  std::string to_string() const;
};

struct EnumerationStats {
  std::uint64_t candidates_examined = 0;
  std::uint64_t groups_found = 0;
};

/// Optional test applied before canonicalization; rejected groups are dropped.
using GroupFilter = std::function<bool(const SimplexGroup&)>;

/// Every subgroup of (Q/Z)^n within the bounds, once per orbit under
/// coordinate permutation, each in canonical form. Output is sorted by order
/// and then by element list, so it does not depend on the thread count.
///
/// A group with invariant factors o_1 | ... | o_r is given by n characters
/// of Z/o_1 x ... x Z/o_r (one per coordinate), so it is enough to walk
/// multisets of such characters. Raises BudgetExceededError.
std::vector<SimplexGroup> enumerate_groups(const EnumerationBounds& bounds, const GroupFilter& keep = {},
                                           EnumerationStats* stats = nullptr);

/// Invariant factor sequences o_1 | o_2 | ... | o_r (o_1 >= 2) allowed by the
/// bounds, the empty sequence included.
std::vector<std::vector<std::int64_t>> invariant_factor_sequences(const EnumerationBounds& bounds);

}  // namespace hstar
