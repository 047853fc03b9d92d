#pragma once

// Slow, independent reference computations. None of these call the library
// routines they are used to check.

#include "hstar/group.hpp"
#include "hstar/simplex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using hstar::Point;

// Solves A x = b over Q by Gaussian elimination; nullopt if singular.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Barycentric coordinates of p with respect to t * vertices (sum = t).
inline std::vector<Rational> barycentric(const std::vector<Point>& vs, const std::vector<std::int64_t>& p, std::int64_t t) {
  const std::size_t d = vs.size() - 1;
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(d + 1));
  std::vector<Rational> b(d + 1);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i <= d; ++i) a[r][i] = vs[i][r];
    b[r] = p[r];
  }
  for (std::size_t i = 0; i <= d; ++i) a[d][i] = 1;
  b[d] = t;
  return *solve(a, b);
}

// Lattice points of the t-th dilate by scanning its bounding box.
inline std::uint64_t box_count(const std::vector<Point>& vs, std::int64_t t, bool interior = false) {
  const std::size_t d = vs.size() - 1;
  if (t == 0) return interior ? (d == 0 ? 1 : 0) : 1;
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = hi[j] = vs[0][j] * t;
    for (const auto& v : vs) {
      lo[j] = std::min(lo[j], v[j] * t);
      hi[j] = std::max(hi[j], v[j] * t);
    }
  }
  std::uint64_t count = 0;
  std::vector<std::int64_t> p = lo;
  while (true) {
    const auto lam = barycentric(vs, p, t);
    const bool inside = std::all_of(lam.begin(), lam.end(), [&](const Rational& x) { return interior ? x > 0 : x >= 0; });
    count += inside ? 1 : 0;
    std::size_t j = 0;
    while (j < d && ++p[j] > hi[j]) p[j] = lo[j], ++j;
    if (j == d) break;
  }
  return count;
}

// h* straight from the Ehrhart series: multiply sum_t L(t) x^t by (1-x)^{d+1}.
inline std::vector<std::int64_t> hstar_from_box_counts(const std::vector<Point>& vs) {
  const std::size_t d = vs.size() - 1;
  std::vector<std::int64_t> counts(d + 1);
  for (std::size_t t = 0; t <= d; ++t) counts[t] = static_cast<std::int64_t>(box_count(vs, static_cast<std::int64_t>(t)));
  std::vector<std::int64_t> poly(counts);
  for (std::size_t rep = 0; rep <= d; ++rep)
    for (std::size_t i = poly.size(); i-- > 1;) poly[i] -= poly[i - 1];
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

// All x in ((1/q)Z / Z)^{d+1} with sum x_i (v_i, 1) integral, q = volume.
// Rows are scaled by q and sorted.
inline std::vector<std::vector<std::int64_t>> brute_force_group(const std::vector<Point>& vs, std::int64_t q) {
  const std::size_t n = vs.size();
  const std::size_t d = n - 1;
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t c = 0; c <= d && ok; ++c) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s += x[i] * (c < d ? vs[i][c] : 1);
      ok = s % q == 0;
    }
    if (ok) out.push_back(x);
    std::size_t i = 0;
    while (i < n && ++x[i] == q) x[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Element rows of g rescaled to denominator q (q must be a multiple of the exponent).
inline std::vector<std::vector<std::int64_t>> rows_over(const hstar::SimplexGroup& g, std::int64_t q) {
  std::vector<std::vector<std::int64_t>> out;
  const std::int64_t f = q / g.denominator();
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto r = g.row(i);
    std::vector<std::int64_t> v(r.begin(), r.end());
    for (auto& e : v) e *= f;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
