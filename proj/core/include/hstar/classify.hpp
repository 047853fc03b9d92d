#pragma once

#include "hstar/enumerate.hpp"
#include "hstar/families.hpp"
#include "hstar/group.hpp"
#include "hstar/simplex.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hstar {

/// (k, m) when h = 1 + (m-2) t^k + t^{2k} with k >= 1 and m >= 3.
struct TrinomialShape {
  std::int64_t k;
  std::int64_t m;
};
std::optional<TrinomialShape> palindromic_trinomial_shape(const HStarPolynomial& h);

/// The family case a non-pyramid group with palindromic trinomial h* (k >= 2)
/// belongs to, found by comparing canonical forms; nullopt otherwise.
std::optional<FamilySpec> classify_trinomial_group(const SimplexGroup& g);

struct ClassificationEntry {
  SimplexGroup group;
  HStarPolynomial hstar;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t d = 0;
  bool pyramid = false;
  std::optional<FamilySpec> match;  // empty means UNEXPECTED

  /// One JSON object on a single line.
  std::string to_json() const;
};

struct ClassificationReport {
  std::int64_t k = 0;
  std::int64_t d = 0;
  EnumerationBounds bounds;
  EnumerationStats stats;
  std::vector<ClassificationEntry> entries;
  /// Family members whose group lies inside the bounds but was not found.
  std::vector<FamilySpec> missing;

  std::set<std::int64_t> m_set() const;
  std::size_t unexpected_count() const;
  /// Every found m occurs once.
  bool unique_per_m() const;
  /// Nothing unexpected, nothing missing, nothing repeated.
  bool clean() const { return unexpected_count() == 0 && missing.empty() && unique_per_m(); }

  std::string json_lines() const;
  std::string summary() const;
};

/// Enumerates non-pyramid groups on d+1 coordinates (bounds.n is overridden)
/// and matches every one whose h* is 1 + (m-2) t^k + t^{2k}. Findings never
/// abort the run. Propagates BudgetExceededError.
ClassificationReport verify_classification(std::int64_t k, std::int64_t d, EnumerationBounds bounds);

struct ConjectureHit {
  SimplexGroup group;
  HStarPolynomial hstar;
  std::int64_t k, a, b;
};

struct ConjectureScanResult {
  /// First group (in enumeration order) with b >= 2 and a + b + 1 > (4b+4) k.
  std::optional<ConjectureHit> counterexample;
  /// Groups with h* = 1 + a t^k + b t^{2k} and vol = 9k (any b >= 1).
  std::vector<ConjectureHit> nine_halves_equality;
  std::uint64_t groups_scanned = 0;
  std::uint64_t trinomials_checked = 0;  // b >= 2
  std::uint64_t candidates_examined = 0;
};

/// All non-pyramid groups with n <= max_n coordinates and order <= max_order
/// (pyramids repeat smaller n), checked against a + b + 1 <= (4b+4) k.
ConjectureScanResult conjecture_scan(std::size_t max_n, std::int64_t max_order,
                                     std::uint64_t budget = 100'000'000, std::size_t threads = 0);

}  // namespace hstar
