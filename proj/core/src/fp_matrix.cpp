#include "hstar/fp_matrix.hpp"

#include "hstar/error.hpp"

#include <algorithm>
#include <sstream>

namespace hstar {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FpMatrix::FpMatrix(std::int64_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  v %= p_;
  if (v < 0) v += p_;
  data_[r * cols_ + c] = v;
}

std::vector<std::int64_t> FpMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

FpMatrix FpMatrix::negated() const {
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, -(*this)(r, c));
  return out;
}

FpMatrix FpMatrix::rows_reversed() const {
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(rows_ - 1 - r, c, (*this)(r, c));
  return out;
}

std::vector<std::vector<std::int64_t>> FpMatrix::row_span() const {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> coeff(rows_, 0);
  while (true) {
    std::vector<std::int64_t> v(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) v[c] = (v[c] + coeff[r] * (*this)(r, c)) % p_;
    out.push_back(std::move(v));
    std::size_t i = 0;
    while (i < rows_ && ++coeff[i] == p_) coeff[i++] = 0;
    if (i == rows_) break;
  }
  return out;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << '\n';
  }
  return os.str();
}

FpMatrix simplex_code_generator(std::int64_t p, std::size_t r) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (r == 0) throw Error(ErrorCode::RangeViolated, "simplex code dimension must be positive");
  std::vector<std::vector<std::int64_t>> columns;
  std::vector<std::int64_t> v(r, 0);
  // Odometer over F_p^r, row r-1 fastest, so the output is already in
  // lexicographic order.
  while (true) {
    std::size_t i = r;
    while (i > 0 && ++v[i - 1] == p) v[--i] = 0;
    if (i == 0) break;
    auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (*lead == 1) columns.push_back(v);
  }
  FpMatrix a(p, r, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t row = 0; row < r; ++row) a.set(row, c, columns[c][row]);
  return a;
}

}  // namespace hstar
