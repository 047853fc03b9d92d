#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hstar {

bool is_prime(std::int64_t p);

/// Matrix over the prime field F_p, entries kept in [0, p).
class FpMatrix {
 public:
  /// Raises NotPrime unless p is prime.
  FpMatrix(std::int64_t p, std::size_t rows, std::size_t cols);

  std::int64_t prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores v mod p.
  void set(std::size_t r, std::size_t c, std::int64_t v);

  std::vector<std::int64_t> column(std::size_t c) const;
  /// Entrywise additive inverse (p - x, with 0 fixed).
  FpMatrix negated() const;
  /// Reverses the order of the rows.
  FpMatrix rows_reversed() const;
  /// Every vector of the row span, including zero (p^rows of them with repetition
  /// if the rows are dependent).
  std::vector<std::vector<std::int64_t>> row_span() const;

  std::string to_string() const;
  bool operator==(const FpMatrix&) const = default;

 private:
  std::int64_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Generator matrix of the r-dimensional simplex code over F_p: one column
/// per line of F_p^r, represented by the vector whose first nonzero entry is
/// 1, columns sorted lexicographically (row 0 most significant).
FpMatrix simplex_code_generator(std::int64_t p, std::size_t r);

}  // namespace hstar
