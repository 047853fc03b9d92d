#include "hstar/feasibility.hpp"

#include "hstar/fp_matrix.hpp"

#include <optional>

namespace hstar {
namespace {

// e >= 1 with value == base^e.
std::optional<std::int64_t> positive_power_of(std::int64_t value, std::int64_t base) {
  if (value < base) return std::nullopt;
  std::int64_t e = 0;
  while (value % base == 0) {
    value /= base;
    ++e;
  }
  if (value != 1) return std::nullopt;
  return e;
}

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

bool is_palindromic(const HStarPolynomial& h) {
  const auto& c = h.coeffs();
  for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j)
    if (c[i] != c[j]) return false;
  return true;
}

Verdict scott_check(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) return {false, "coefficients must be nonnegative"};
  if (b == 0) return {true, "b=0"};
  if (b == 1 && a == 7) return {true, "b=1 and a=7"};
  if (b <= a && a <= 3 * b + 3) return {true, "b >= 1 and b <= a <= 3b+3"};
  return {false, "b >= 1 requires b <= a <= 3b+3 unless (a,b) = (7,1)"};
}

Verdict degree2_check(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) return {false, "coefficients must be nonnegative"};
  if (b == 0) return {true, "b=0"};
  if (b == 1 && a == 7) return {true, "b=1 and a=7"};
  if (a <= 3 * b + 3) return {true, "b >= 1 and a <= 3b+3"};
  return {false, "b >= 1 requires a <= 3b+3 unless (a,b) = (7,1)"};
}

Verdict binomial_check(std::int64_t k, std::int64_t d, std::int64_t a) {
  if (k < 2) return {false, "requires k >= 2"};
  if (a < 1) return {false, "requires a >= 1"};
  if (d < 2 * k - 1) return {false, "d >= 2k-1 fails"};
  if (d == 2 * k - 1) return {true, "d = 2k-1: Cayley polytope of k empty segments, any a"};
  if (d > 4 * k - 2) return {false, "a simplex that is not a pyramid has d <= 4k-2"};
  for (std::int64_t p = 2; p <= d + 1; ++p) {
    if (!is_prime(p)) continue;
    const std::int64_t denom = d + 1 - p * (d + 1 - 2 * k);
    if (denom <= 0 || (2 * k) % denom != 0) continue;
    const auto r = positive_power_of(2 * k / denom, p);
    if (!r) continue;
    if (a == 2 * k * p / denom - 1)
      return {true, "p=" + str(p) + ": 2k/(d+1-p(d+1-2k)) = " + str(p) + "^" + str(*r) +
                        " and a = 2kp/(d+1-p(d+1-2k)) - 1"};
  }
  return {false, "no prime p with 2k/(d+1-p(d+1-2k)) a power of p and a = 2kp/(d+1-p(d+1-2k)) - 1"};
}

Verdict gorenstein_deg2_check(std::int64_t m, std::int64_t d) {
  struct Row {
    std::int64_t d, lo, hi;
    const char* rule;
  };
  static constexpr Row table[] = {
      {2, 3, 9, "d=2 and 3 <= m <= 9"},
      {3, 2, 8, "d=3 and 2 <= m <= 8"},
      {4, 3, 6, "d=4 and 3 <= m <= 6"},
      {5, 4, 4, "d=5 and m=4"},
  };
  for (const auto& row : table)
    if (row.d == d) {
      if (row.lo <= m && m <= row.hi) return {true, row.rule};
      return {false, std::string("outside ") + row.rule};
    }
  return {false, "no non-pyramid of degree two in dimension " + str(d)};
}

TrinomialVerdict trinomial_check(std::int64_t k, std::int64_t m, std::int64_t d) {
  TrinomialVerdict v;
  if (k < 1 || m < 2 || d < 2) {
    v.rule = "requires k >= 1, m >= 2, d >= 2";
    return v;
  }
  auto accept = [&](std::string rule, bool printed) {
    v.feasible = true;
    v.rule = std::move(rule);
    v.literal_reading = printed;
    return v;
  };
  if (k == 1) {
    if (d == 2 && 3 <= m && m <= 9) return accept("k=1, 3 <= m <= 9 and d = 2", true);
    if (d >= 3 && m <= 9) return accept("k=1, 2 <= m <= 9 and d >= 3", true);
    v.rule = "k=1 requires m <= 9 (and m >= 3 when d = 2)";
    return v;
  }
  if ((m == 3 || m == 4 || m == 6 || m == 8) && d >= 3 * k - 1)
    return accept("k >= 2, m in {3,4,6,8} and d >= 3k-1", true);
  if (const auto ell = positive_power_of(m, 2); ell && *ell >= 4) {
    const std::int64_t unit = std::int64_t{1} << (*ell - 3);
    if (k % unit == 0 && d >= 4 * k - 1)
      return accept("k = 2^(l-3) a, m = 2^l, d >= 4k-1, l = " + str(*ell), true);
  }
  if (const auto ell = positive_power_of(m, 3); ell && *ell >= 2) {
    std::int64_t unit = 1;
    for (std::int64_t i = 2; i < *ell; ++i) unit *= 3;
    if (k % unit == 0 && d >= 3 * k - 1)
      return accept("k = 3^(l-2) a, m = 3^l, d >= 3k-1, l = " + str(*ell), *ell >= 3);
  }
  v.rule = "no family with this (k, m) reaches dimension " + str(d);
  return v;
}

}  // namespace hstar
