#include "hstar/correspondence.hpp"

#include "hstar/error.hpp"
#include "hstar/normal_form.hpp"

#include <numeric>

namespace hstar {
namespace {

std::int64_t mod_big(const BigInt& a, std::int64_t m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

}  // namespace

SimplexGroup group_of_simplex(const LatticeSimplex& s, std::size_t cap) {
  const IntMatrix m = s.homogeneous_matrix();
  const std::size_t n = m.rows();
  // U * M^T * V = D, and M^T x in Z^n  <=>  x = V y with D y in Z^n.
  const SmithNormalForm snf = smith_normal_form(m.transpose());

  BigInt order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= snf.D(i, i);
  if (order == 0) throw Error(ErrorCode::Degenerate, "homogeneous vertex matrix is singular");
  if (order > cap) throw Error(ErrorCode::GroupTooLarge, "group order " + order.str() + " exceeds cap");

  const std::int64_t exponent = to_int64(snf.D(n - 1, n - 1));
  std::vector<std::vector<std::int64_t>> gens;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t di = to_int64(snf.D(i, i));
    if (di == 1) continue;
    std::vector<std::int64_t> g(n);
    for (std::size_t r = 0; r < n; ++r) g[r] = mod_big(snf.V(r, i) * (exponent / di), exponent);
    gens.push_back(std::move(g));
    orders.push_back(di);
  }
  // The generators are independent with the given orders, so the group is
  // their direct product; closure would rediscover the same set.
  return SimplexGroup::generated(n, exponent, gens, cap);
}

LatticeSimplex simplex_of_group(const SimplexGroup& g) {
  const std::size_t n = g.ambient_len();
  const std::int64_t q = g.denominator();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "group on zero coordinates");
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto r = g.row(i);
    if (std::accumulate(r.begin(), r.end(), std::int64_t{0}) % q != 0)
      throw Error(ErrorCode::NonIntegerHeight, g.element(i).to_string() + " has non-integral height");
  }

  // q * L is spanned by q * e_i and the scaled generators.
  IntMatrix stacked(n + g.generators().size(), n);
  for (std::size_t i = 0; i < n; ++i) stacked(i, i) = q;
  for (std::size_t k = 0; k < g.generators().size(); ++k)
    for (std::size_t j = 0; j < n; ++j) stacked(n + k, j) = g.generators()[k][j];
  const IntMatrix basis = row_lattice_basis(stacked);  // n x n, rows b_i with L = (1/q) span(b_i)

  // Coordinates of e_0..e_{n-1} in the basis b_i / q: W = q * B^{-1}.
  BigInt det;
  IntMatrix w = scaled_inverse(basis, det);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt v = w(i, j) * q;
      if (v % det != 0) throw Error(ErrorCode::InvalidSpec, "lattice does not contain Z^n");
      w(i, j) = v / det;
    }

  // Heights of the basis vectors: u = W^{-1} * 1 = B * 1 / q. A unimodular P
  // with P u = e_{n-1} moves the height functional to the last coordinate.
  IntMatrix u(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < n; ++j) sum += basis(i, j);
    u(i, 0) = sum / q;
  }
  const SmithNormalForm unit = smith_normal_form(u);
  if (unit.D(0, 0) != 1) throw Error(ErrorCode::InvalidSpec, "height functional is not primitive");
  IntMatrix p = unit.U;
  if (unit.V(0, 0) < 0) p.negate_row(0);
  p.swap_rows(0, n - 1);
  BigInt pdet;
  IntMatrix t = scaled_inverse(p, pdet);  // pdet is +-1
  if (pdet < 0)
    for (std::size_t r = 0; r < n; ++r) t.negate_row(r);

  const IntMatrix homog = w * t;
  for (std::size_t i = 0; i < n; ++i)
    if (homog(i, n - 1) != 1) throw Error(ErrorCode::InvalidSpec, "failed to normalize the height functional");

  // Translate vertex 0 to the origin and put the edges in triangular form.
  const std::size_t d = n - 1;
  IntMatrix edges(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) edges(i, j) = homog(i + 1, j) - homog(0, j);
  std::vector<Point> vertices(n, Point(d, 0));
  if (d > 0) {
    const HermiteNormalForm hnf = hermite_normal_form(edges.transpose());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) vertices[i + 1][j] = to_int64(hnf.H(j, i));
  }
  return LatticeSimplex(std::move(vertices));
}

HStarPolynomial hstar_from_group(const SimplexGroup& g) {
  std::vector<std::uint64_t> hist(g.ambient_len() + 1, 0);
  const std::int64_t q = g.denominator();
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto r = g.row(i);
    const std::int64_t sum = std::accumulate(r.begin(), r.end(), std::int64_t{0});
    if (sum % q != 0) throw Error(ErrorCode::NonIntegerHeight, g.element(i).to_string() + " has non-integral height");
    ++hist[static_cast<std::size_t>(sum / q)];
  }
  return HStarPolynomial(std::move(hist));
}

std::vector<std::size_t> pyramid_indices(const SimplexGroup& g) {
  std::vector<bool> zero(g.ambient_len(), true);
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto r = g.row(i);
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) zero[j] = false;
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < zero.size(); ++j)
    if (zero[j]) out.push_back(j);
  return out;
}

}  // namespace hstar
