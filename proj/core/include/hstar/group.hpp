#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hstar {

/// A point of (Q/Z)^n stored as integers over one common denominator. The
/// representation is always reduced: 0 <= num[i] < den and
/// gcd(den, num...) == 1, so den is exactly the order of the element.
class GroupElement {
 public:
  GroupElement() = default;
  /// Reduces coordinates mod den and normalizes the denominator.
  GroupElement(std::vector<std::int64_t> num, std::int64_t den);
  /// Builds from per-coordinate fractions num_i / den_i.
  static GroupElement from_fractions(const std::vector<std::pair<std::int64_t, std::int64_t>>& fractions);
  static GroupElement zero(std::size_t n) { return GroupElement(std::vector<std::int64_t>(n, 0), 1); }

  std::size_t size() const noexcept { return num_.size(); }
  const std::vector<std::int64_t>& numerators() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return den_ == 1; }

  /// "(1/2,0,1/2)"
  std::string to_string() const;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;

 private:
  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
};

/// Least common denominator of the coordinates.
std::int64_t element_order(const GroupElement& x);
/// Indices with nonzero coordinate.
std::vector<std::size_t> support(const GroupElement& x);
/// Coordinate sum; raises NonIntegerHeight if it is not an integer.
std::int64_t height(const GroupElement& x);
/// x + ... + x (j times), coordinates taken mod 1. Negative j is allowed.
GroupElement multiple(std::int64_t j, const GroupElement& x);
GroupElement negate(const GroupElement& x);
GroupElement add(const GroupElement& x, const GroupElement& y);

/// A finite subgroup of (Q/Z)^n with every element materialized. Elements are
/// kept as rows of integers over the group exponent, sorted
/// lexicographically; generators are kept over the same denominator.
class SimplexGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  /// Subgroup generated by the given rows, each read as row / den. Raises
  /// GroupTooLarge once the order would pass `cap`.
  static SimplexGroup generated(std::size_t n, std::int64_t den, const std::vector<std::vector<std::int64_t>>& gens,
                                std::size_t cap = kDefaultCap);
  static SimplexGroup generated(std::size_t n, const std::vector<GroupElement>& gens, std::size_t cap = kDefaultCap);
  static SimplexGroup trivial(std::size_t n);

  /// Rebuild from a complete element list (rows over `den`). The generator
  /// list is chosen greedily: walk the sorted elements and keep each one not
  /// yet generated. Raises InvalidSpec if the rows are not a subgroup.
  static SimplexGroup from_elements(std::size_t n, std::int64_t den, std::vector<std::vector<std::int64_t>> rows);

  std::size_t ambient_len() const noexcept { return n_; }
  /// Group exponent; every row is scaled by it.
  std::int64_t denominator() const noexcept { return den_; }
  std::size_t order() const noexcept { return n_ == 0 ? 1 : data_.size() / n_; }

  std::span<const std::int64_t> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  GroupElement element(std::size_t i) const;
  std::vector<GroupElement> elements() const;

  /// Rows over denominator().
  const std::vector<std::vector<std::int64_t>>& generators() const noexcept { return gens_; }
  std::vector<GroupElement> generator_elements() const;

  bool contains(std::span<const std::int64_t> scaled_row) const;
  bool contains(const GroupElement& x) const;

  /// Element sets are compared; generator lists are not.
  bool operator==(const SimplexGroup& o) const noexcept { return n_ == o.n_ && den_ == o.den_ && data_ == o.data_; }
  bool operator<(const SimplexGroup& o) const noexcept;
  std::size_t hash() const noexcept;

 private:
  SimplexGroup(std::size_t n, std::int64_t den, std::vector<std::vector<std::int64_t>> rows,
               std::vector<std::vector<std::int64_t>> gens);

  std::size_t n_ = 0;
  std::int64_t den_ = 1;
  std::vector<std::int64_t> data_;
  std::vector<std::vector<std::int64_t>> gens_;
};

struct SimplexGroupHash {
  std::size_t operator()(const SimplexGroup& g) const noexcept { return g.hash(); }
};

}  // namespace hstar
