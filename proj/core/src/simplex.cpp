#include "hstar/simplex.hpp"

#include "hstar/error.hpp"
#include "hstar/normal_form.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <sstream>
#include <utility>

namespace hstar {

LatticeSimplex::LatticeSimplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::DimensionMismatch, "a simplex needs at least one vertex");
  const std::size_t d = vertices_.size() - 1;
  for (const auto& v : vertices_)
    if (v.size() != d)
      throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(d + 1) + " vertices in Z^" +
                                                    std::to_string(d) + ", got a vertex with " +
                                                    std::to_string(v.size()) + " coordinates");
  if (determinant(edge_matrix()) == 0) throw Error(ErrorCode::Degenerate, "vertices are affinely dependent");
}

IntMatrix LatticeSimplex::edge_matrix() const {
  const std::size_t d = dim();
  IntMatrix e(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) e(i, j) = BigInt(vertices_[i + 1][j]) - vertices_[0][j];
  return e;
}

IntMatrix LatticeSimplex::homogeneous_matrix() const {
  const std::size_t n = vertices_.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) m(i, j) = vertices_[i][j];
    m(i, n - 1) = 1;
  }
  return m;
}

HStarPolynomial::HStarPolynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

std::uint64_t HStarPolynomial::volume() const noexcept {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::uint64_t{0});
}

std::string HStarPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (c == 0 && !(i == 0 && coeffs_.size() == 1)) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

BigInt normalized_volume(const LatticeSimplex& s) {
  BigInt det = determinant(s.edge_matrix());
  if (det == 0) throw Error(ErrorCode::Degenerate, "zero volume");
  return boost::multiprecision::abs(det);
}

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

// Lattice points p = sum_i lambda_i * T_i (T upper triangular, positive
// diagonal) with lambda >= 0 and sum lambda <= t. Barycentric coordinates are
// carried scaled by D = det T, where they are integral.
class TriangularScan {
 public:
  TriangularScan(const LatticeSimplex& s, std::uint64_t t, bool strict) : d_(s.dim()), strict_(strict) {
    // U * E^T = H lower triangular  =>  E * U^T = H^T upper triangular, and
    // U^T is a lattice automorphism, so counts are unchanged.
    const HermiteNormalForm hnf = hermite_normal_form(s.edge_matrix().transpose());
    tri_.assign(d_ * d_, 0);
    BigInt det = 1;
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t j = 0; j < d_; ++j) tri_[i * d_ + j] = to_int64(hnf.H(j, i));
      det *= hnf.H(i, i);
    }
    // Keep D * t * max|T| comfortably inside 128 bits.
    if (det > BigInt(1) << 40 || t > (std::uint64_t{1} << 20))
      throw Error(ErrorCode::Overflow, "simplex too large for exact point counting");
    det_ = static_cast<i128>(to_int64(det));
    budget_ = static_cast<i128>(t) * det_;
    mu_.assign(d_, 0);
  }

  std::uint64_t run() {
    if (d_ == 0) return (strict_ && budget_ == 0) ? 0 : 1;
    count_ = 0;
    descend(0, budget_);
    return count_;
  }

 private:
  void descend(std::size_t j, i128 slack) {
    const i128 pivot = tri_[j * d_ + j];
    i128 offset = 0;
    for (std::size_t i = 0; i < j; ++i) offset += mu_[i] * tri_[i * d_ + j];
    i128 lo, hi;
    if (strict_) {
      lo = floor_div(offset, det_) + 1;
      hi = ceil_div(offset + pivot * slack, det_) - 1;
    } else {
      lo = ceil_div(offset, det_);
      hi = floor_div(offset + pivot * slack, det_);
    }
    for (i128 p = lo; p <= hi; ++p) {
      const i128 scaled = p * det_ - offset;
      // mu_j = scaled / pivot is integral for every lattice point; a nonzero
      // remainder means p is not of the form sum lambda_i T_i.
      if (scaled % pivot != 0) continue;
      const i128 mu = scaled / pivot;
      mu_[j] = mu;
      const i128 rest = slack - mu;
      if (j + 1 == d_) {
        if (!strict_ || rest > 0) ++count_;
      } else {
        descend(j + 1, rest);
      }
    }
  }

  std::size_t d_;
  bool strict_;
  std::vector<i128> tri_;
  std::vector<i128> mu_;
  i128 det_ = 1;
  i128 budget_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t count_lattice_points(const LatticeSimplex& s, std::uint64_t t) {
  if (t == 0) return 1;
  return TriangularScan(s, t, false).run();
}

std::uint64_t count_interior_points(const LatticeSimplex& s, std::uint64_t t) {
  if (t == 0) return s.dim() == 0 ? 1 : 0;
  return TriangularScan(s, t, true).run();
}

HStarPolynomial hstar_from_counts(const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) throw Error(ErrorCode::DimensionMismatch, "need at least the t = 0 count");
  const std::size_t n = counts.size();  // d + 1
  std::vector<BigInt> binom(n + 1);
  binom[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) binom[k] = binom[k - 1] * (n - k + 1) / k;

  std::vector<std::uint64_t> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      BigInt term = binom[i - j] * counts[j];
      if ((i - j) % 2) acc -= term;
      else acc += term;
    }
    if (acc < 0)
      throw Error(ErrorCode::NegativeCoefficient, "h*_" + std::to_string(i) + " = " + acc.str());
    h[i] = acc.convert_to<std::uint64_t>();
  }
  return HStarPolynomial(std::move(h));
}

HStarPolynomial hstar_by_counting(const LatticeSimplex& s) {
  std::vector<std::uint64_t> counts(s.dim() + 1);
  for (std::size_t t = 0; t <= s.dim(); ++t) counts[t] = count_lattice_points(s, t);
  return hstar_from_counts(counts);
}

}  // namespace hstar
