#include "hstar/group.hpp"

#include "hstar/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace hstar {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

struct RowHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

using RowSet = std::unordered_set<std::vector<std::int64_t>, RowHash>;

std::vector<std::int64_t> add_rows(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                   std::int64_t den) {
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
    if (out[i] >= den) out[i] -= den;
  }
  return out;
}

// Extends the subgroup `elems` (mirrored in `index`) by g. Returns false if g
// was already inside.
bool extend(std::vector<std::vector<std::int64_t>>& elems, RowSet& index, const std::vector<std::int64_t>& g,
            std::int64_t den, std::size_t cap) {
  if (index.contains(g)) return false;
  // Smallest j >= 1 with j*g in the current subgroup.
  std::size_t coset_count = 1;
  std::vector<std::int64_t> step = g;
  while (!index.contains(step)) {
    ++coset_count;
    step = add_rows(step, g, den);
  }
  if (elems.size() * coset_count > cap)
    throw Error(ErrorCode::GroupTooLarge,
                "group order exceeds cap " + std::to_string(cap));
  const std::size_t base = elems.size();
  elems.reserve(base * coset_count);
  std::vector<std::int64_t> shift = g;
  for (std::size_t j = 1; j < coset_count; ++j) {
    for (std::size_t i = 0; i < base; ++i) {
      auto e = add_rows(elems[i], shift, den);
      index.insert(e);
      elems.push_back(std::move(e));
    }
    shift = add_rows(shift, g, den);
  }
  return true;
}

}  // namespace

GroupElement::GroupElement(std::vector<std::int64_t> num, std::int64_t den) : num_(std::move(num)), den_(den) {
  if (den_ <= 0) throw Error(ErrorCode::RangeViolated, "denominator must be positive");
  std::int64_t g = den_;
  for (auto& x : num_) {
    x = mod(x, den_);
    g = std::gcd(g, x);
  }
  if (g > 1) {
    for (auto& x : num_) x /= g;
    den_ /= g;
  }
}

GroupElement GroupElement::from_fractions(const std::vector<std::pair<std::int64_t, std::int64_t>>& fractions) {
  std::int64_t den = 1;
  for (const auto& [p, q] : fractions) {
    if (q <= 0) throw Error(ErrorCode::RangeViolated, "denominator must be positive");
    den = std::lcm(den, q);
  }
  std::vector<std::int64_t> num;
  num.reserve(fractions.size());
  for (const auto& [p, q] : fractions) num.push_back(mod(p, q) * (den / q));
  return GroupElement(std::move(num), den);
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) os << ',';
    const std::int64_t g = std::gcd(num_[i], den_);
    if (num_[i] == 0) os << '0';
    else os << num_[i] / g << '/' << den_ / g;
  }
  os << ')';
  return os.str();
}

std::int64_t element_order(const GroupElement& x) { return x.denominator(); }

std::vector<std::size_t> support(const GroupElement& x) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.numerators()[i] != 0) s.push_back(i);
  return s;
}

std::int64_t height(const GroupElement& x) {
  const std::int64_t sum = std::accumulate(x.numerators().begin(), x.numerators().end(), std::int64_t{0});
  if (sum % x.denominator() != 0)
    throw Error(ErrorCode::NonIntegerHeight, x.to_string() + " has non-integral coordinate sum");
  return sum / x.denominator();
}

GroupElement multiple(std::int64_t j, const GroupElement& x) {
  const std::int64_t den = x.denominator();
  const std::int64_t jj = mod(j, den);
  std::vector<std::int64_t> num(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) num[i] = static_cast<std::int64_t>((static_cast<__int128>(jj) * x.numerators()[i]) % den);
  return GroupElement(std::move(num), den);
}

GroupElement negate(const GroupElement& x) { return multiple(-1, x); }

GroupElement add(const GroupElement& x, const GroupElement& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "adding elements of different length");
  const std::int64_t den = std::lcm(x.denominator(), y.denominator());
  std::vector<std::int64_t> num(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    num[i] = x.numerators()[i] * (den / x.denominator()) + y.numerators()[i] * (den / y.denominator());
  return GroupElement(std::move(num), den);
}

SimplexGroup::SimplexGroup(std::size_t n, std::int64_t den, std::vector<std::vector<std::int64_t>> rows,
                           std::vector<std::vector<std::int64_t>> gens)
    : n_(n), den_(den), gens_(std::move(gens)) {
  // Reduce to the exponent so equal groups have equal representations.
  std::int64_t g = den_;
  for (const auto& r : rows)
    for (auto x : r) g = std::gcd(g, x);
  if (g > 1) {
    den_ /= g;
    for (auto& r : rows)
      for (auto& x : r) x /= g;
    for (auto& r : gens_)
      for (auto& x : r) x /= g;
  }
  std::sort(rows.begin(), rows.end());
  data_.reserve(rows.size() * n_);
  for (const auto& r : rows) data_.insert(data_.end(), r.begin(), r.end());
}

SimplexGroup SimplexGroup::generated(std::size_t n, std::int64_t den,
                                     const std::vector<std::vector<std::int64_t>>& gens, std::size_t cap) {
  if (den <= 0) throw Error(ErrorCode::RangeViolated, "denominator must be positive");
  std::vector<std::vector<std::int64_t>> elems{std::vector<std::int64_t>(n, 0)};
  RowSet index{elems.front()};
  std::vector<std::vector<std::int64_t>> kept;
  for (const auto& raw : gens) {
    if (raw.size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "generator has " + std::to_string(raw.size()) + " coordinates, expected " + std::to_string(n));
    std::vector<std::int64_t> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = mod(raw[i], den);
    if (extend(elems, index, g, den, cap)) kept.push_back(std::move(g));
  }
  return SimplexGroup(n, den, std::move(elems), std::move(kept));
}

SimplexGroup SimplexGroup::generated(std::size_t n, const std::vector<GroupElement>& gens, std::size_t cap) {
  std::int64_t den = 1;
  for (const auto& g : gens) den = std::lcm(den, g.denominator());
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : gens) {
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "generator length mismatch");
    std::vector<std::int64_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = g.numerators()[i] * (den / g.denominator());
    rows.push_back(std::move(r));
  }
  return generated(n, den, rows, cap);
}

SimplexGroup SimplexGroup::trivial(std::size_t n) { return generated(n, 1, {}); }

SimplexGroup SimplexGroup::from_elements(std::size_t n, std::int64_t den,
                                         std::vector<std::vector<std::int64_t>> rows) {
  std::sort(rows.begin(), rows.end());
  std::vector<std::vector<std::int64_t>> elems{std::vector<std::int64_t>(n, 0)};
  RowSet index{elems.front()};
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& r : rows) {
    if (elems.size() >= rows.size()) break;
    if (extend(elems, index, r, den, rows.size())) gens.push_back(r);
  }
  std::sort(elems.begin(), elems.end());
  if (elems != rows) throw Error(ErrorCode::InvalidSpec, "element list is not a subgroup");
  return SimplexGroup(n, den, std::move(rows), std::move(gens));
}

GroupElement SimplexGroup::element(std::size_t i) const {
  auto r = row(i);
  return GroupElement(std::vector<std::int64_t>(r.begin(), r.end()), den_);
}

std::vector<GroupElement> SimplexGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

std::vector<GroupElement> SimplexGroup::generator_elements() const {
  std::vector<GroupElement> out;
  for (const auto& g : gens_) out.emplace_back(g, den_);
  return out;
}

bool SimplexGroup::contains(std::span<const std::int64_t> scaled_row) const {
  if (scaled_row.size() != n_) return false;
  std::size_t lo = 0, hi = order();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto r = row(mid);
    if (std::lexicographical_compare(r.begin(), r.end(), scaled_row.begin(), scaled_row.end())) lo = mid + 1;
    else hi = mid;
  }
  return lo < order() && std::equal(scaled_row.begin(), scaled_row.end(), row(lo).begin());
}

bool SimplexGroup::contains(const GroupElement& x) const {
  if (x.size() != n_ || den_ % x.denominator() != 0) return false;
  std::vector<std::int64_t> scaled(n_);
  for (std::size_t i = 0; i < n_; ++i) scaled[i] = x.numerators()[i] * (den_ / x.denominator());
  return contains(std::span<const std::int64_t>(scaled));
}

bool SimplexGroup::operator<(const SimplexGroup& o) const noexcept {
  if (n_ != o.n_) return n_ < o.n_;
  if (order() != o.order()) return order() < o.order();
  if (den_ != o.den_) return den_ < o.den_;
  return data_ < o.data_;
}

std::size_t SimplexGroup::hash() const noexcept {
  std::size_t h = RowHash{}(data_);
  h ^= (static_cast<std::size_t>(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  h ^= (n_ + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  return h;
}

}  // namespace hstar
