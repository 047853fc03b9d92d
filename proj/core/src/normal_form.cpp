#include "hstar/normal_form.hpp"

#include "hstar/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>

namespace hstar {
namespace {

using boost::multiprecision::abs;

// Floor division, so remainders land in [0, |b|) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_entry(const IntMatrix& a, std::size_t from) {
  std::optional<Pivot> best;
  BigInt best_abs;
  for (std::size_t i = from; i < a.rows(); ++i)
    for (std::size_t j = from; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      BigInt v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Pivot{i, j};
        best_abs = std::move(v);
      }
    }
  return best;
}

// Row-echelon reduction from the right. Returns the number of leading rows
// that ended up zero (nonzero only for rank-deficient input).
std::size_t hermite_in_place(IntMatrix& h, IntMatrix& u) {
  std::size_t active = h.rows();
  for (std::size_t jj = h.cols(); jj-- > 0 && active > 0;) {
    const std::size_t pivot_row = active - 1;
    // Fold every active row into the pivot row with 2x2 extended-gcd steps.
    for (std::size_t i = 0; i < pivot_row; ++i) {
      if (h(i, jj) == 0) continue;
      if (h(pivot_row, jj) == 0) {
        h.swap_rows(i, pivot_row);
        u.swap_rows(i, pivot_row);
        continue;
      }
      while (h(i, jj) != 0) {
        BigInt q = floor_div(h(pivot_row, jj), h(i, jj));
        h.add_row_multiple(pivot_row, i, -q);
        u.add_row_multiple(pivot_row, i, -q);
        h.swap_rows(i, pivot_row);
        u.swap_rows(i, pivot_row);
      }
    }
    if (h(pivot_row, jj) == 0) continue;
    if (h(pivot_row, jj) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
      BigInt q = floor_div(h(i, jj), h(pivot_row, jj));
      h.add_row_multiple(i, pivot_row, -q);
      u.add_row_multiple(i, pivot_row, -q);
    }
    --active;
  }
  return active;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    bool done = false;
    while (true) {
      auto pivot = smallest_entry(a, t);
      if (!pivot) {
        done = true;
        break;
      }
      a.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisor chain: pull in any row whose entries the pivot does not divide.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < a.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      a.add_row_multiple(t, *offender, 1);
      u.add_row_multiple(t, *offender, 1);
    }
    if (done) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

HermiteNormalForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  if (hermite_in_place(h, u) != 0)
    throw Error(ErrorCode::RankDeficient, "rows of " + m.to_string() + " are linearly dependent");
  return {std::move(h), std::move(u)};
}

IntMatrix row_lattice_basis(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t zero_rows = hermite_in_place(h, u);
  IntMatrix basis(m.rows() - zero_rows, m.cols());
  for (std::size_t r = zero_rows; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) basis(r - zero_rows, c) = h(r, c);
  return basis;
}

IntMatrix scaled_inverse(const IntMatrix& m, BigInt& det) {
  using boost::multiprecision::cpp_rational;
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  det = determinant(m);
  if (det == 0) throw Error(ErrorCode::Degenerate, "singular matrix " + m.to_string());
  const std::size_t n = m.rows();
  std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cpp_rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const cpp_rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const cpp_rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cpp_rational v = a[i][n + j] * cpp_rational(det);
      out(i, j) = boost::multiprecision::numerator(v);
    }
  return out;
}

}  // namespace hstar
