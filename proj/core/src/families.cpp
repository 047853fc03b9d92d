#include "hstar/families.hpp"

#include "hstar/error.hpp"
#include "hstar/normal_form.hpp"
#include "hstar/polytope_ops.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace hstar {
namespace {

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void append(std::vector<std::int64_t>& row, std::int64_t value, std::int64_t count) {
  row.insert(row.end(), static_cast<std::size_t>(count), value);
}

// Exponent e with value == base^e, or nullopt.
std::optional<std::int64_t> exact_log(std::int64_t value, std::int64_t base) {
  if (value < 1) return std::nullopt;
  std::int64_t e = 0;
  while (value % base == 0) {
    value /= base;
    ++e;
  }
  if (value != 1) return std::nullopt;
  return e;
}

}  // namespace

GeneratorMatrix white_cayley_generator(std::int64_t k, std::int64_t m, std::vector<std::int64_t> a) {
  if (k < 1 || m < 2) throw Error(ErrorCode::RangeViolated, "need k >= 1 and m >= 2");
  if (static_cast<std::int64_t>(a.size()) != k)
    throw Error(ErrorCode::RangeViolated, "expected " + std::to_string(k) + " values a_i, got " + std::to_string(a.size()));
  GeneratorMatrix g{static_cast<std::size_t>(2 * k), m, {{}}};
  for (auto& ai : a) {
    ai %= m;
    if (ai < 0) ai += m;
    if (ai == 0) throw Error(ErrorCode::RangeViolated, "a_i must be nonzero mod m");
    if (2 * ai > m) ai = m - ai;
    if (std::gcd(ai, m) != 1)
      throw Error(ErrorCode::NotCoprime, std::to_string(ai) + " is not coprime to " + std::to_string(m));
    g.rows[0].push_back(ai);
    g.rows[0].push_back(m - ai);
  }
  return g;
}

SimplexGroup white_cayley_group(std::int64_t k, std::int64_t m, const std::vector<std::int64_t>& a) {
  return white_cayley_generator(k, m, a).group();
}

LatticeSimplex white_cayley_simplex(std::int64_t k, std::int64_t m, const std::vector<std::int64_t>& a) {
  const GeneratorMatrix gen = white_cayley_generator(k, m, a);
  const auto n = static_cast<std::size_t>(k);
  // Segment directions u_i need {lambda : sum lambda_i u_i in Z^k} to be
  // generated by (m - a_i)/m, i.e. Z^k U^{-1} = Z^k + Z a/m. Take a basis B
  // of m Z^k + Z a and set U = m B^{-1}.
  IntMatrix stacked(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    stacked(i, i) = m;
    stacked(n, i) = gen.rows[0][2 * i];
  }
  const IntMatrix basis = row_lattice_basis(stacked);
  BigInt det;
  const IntMatrix adj = scaled_inverse(basis, det);
  std::vector<PointConfiguration> segments;
  for (std::size_t i = 0; i < n; ++i) {
    Point u(n);
    BigInt g = 0;
    for (std::size_t j = 0; j < n; ++j) {
      BigInt v = adj(i, j) * m;
      if (v % det != 0) throw Error(ErrorCode::InvalidSpec, "segment lattice is not integral");
      u[j] = to_int64(v / det);
      g = gcd(g, BigInt(u[j]));
    }
    if (g != 1) throw Error(ErrorCode::InvalidSpec, "segment direction is not primitive");
    segments.push_back(PointConfiguration{n, {Point(n, 0), std::move(u)}});
  }
  return cayley_simplex(segments);
}

std::optional<std::int64_t> binomial_family_dimension(std::int64_t p, std::int64_t r, std::int64_t k) {
  if (r < 1 || k < 1) return std::nullopt;
  const std::int64_t pr = ipow(p, r);
  const std::int64_t lhs = pr - pr / p;
  const std::int64_t rhs = 2 * k * (pr - 1);
  if (rhs % lhs != 0) return std::nullopt;
  return rhs / lhs - 1;
}

GeneratorMatrix binomial_generator(std::int64_t p, std::int64_t r, std::int64_t k, std::int64_t d) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (r < 1) throw Error(ErrorCode::RangeViolated, "code dimension r must be at least 1");
  if (k < 2) throw Error(ErrorCode::RangeViolated, "k must be at least 2");
  const std::int64_t pr = ipow(p, r);
  if ((pr - pr / p) * (d + 1) != 2 * k * (pr - 1))
    throw Error(ErrorCode::NumericalConditionViolated,
                "(p^r - p^(r-1))(d+1) != 2k(p^r - 1) for p=" + std::to_string(p) + " r=" + std::to_string(r) +
                    " k=" + std::to_string(k) + " d=" + std::to_string(d));

  const FpMatrix code = simplex_code_generator(p, static_cast<std::size_t>(r));
  const FpMatrix neg = code.negated();
  std::int64_t reps = 0;
  if (p == 2) {
    const std::int64_t unit = pr / 2;  // 2^{r-1}, so 2k / unit = k / 2^{r-2}
    if ((2 * k) % unit != 0)
      throw Error(ErrorCode::DivisibilityViolated, "2^(r-2) does not divide k");
    reps = 2 * k / unit;
  } else {
    const std::int64_t unit = pr / p;
    if (k % unit != 0) throw Error(ErrorCode::DivisibilityViolated, "p^(r-1) does not divide k");
    reps = k / unit;
  }

  GeneratorMatrix g{static_cast<std::size_t>(d + 1), p, std::vector<std::vector<std::int64_t>>(r)};
  for (std::int64_t rep = 0; rep < reps; ++rep)
    for (std::size_t row = 0; row < static_cast<std::size_t>(r); ++row) {
      for (std::size_t c = 0; c < code.cols(); ++c) g.rows[row].push_back(code(row, c));
      if (p != 2)
        for (std::size_t c = 0; c < neg.cols(); ++c) g.rows[row].push_back(neg(row, c));
    }
  if (g.rows[0].size() != g.len)
    throw Error(ErrorCode::NumericalConditionViolated, "block count does not match d + 1");
  return g;
}

SimplexGroup binomial_family(std::int64_t p, std::int64_t r, std::int64_t k, std::int64_t d) {
  return binomial_generator(p, r, k, d).group();
}

std::string_view to_string(FamilyCase c) {
  switch (c) {
    case FamilyCase::A3: return "a3";
    case FamilyCase::A4_3k: return "a4-3k";
    case FamilyCase::A4_4k: return "a4-4k";
    case FamilyCase::A6: return "a6";
    case FamilyCase::A8: return "a8";
    case FamilyCase::B: return "b";
    case FamilyCase::C: return "c";
  }
  return "?";
}

FamilySpec FamilySpec::case_b(std::int64_t a, std::int64_t ell) {
  if (a < 1 || ell < 3) throw Error(ErrorCode::InvalidSpec, "case b needs a >= 1 and l >= 3");
  return FamilySpec{FamilyCase::B, ipow(2, ell - 3) * a, a, ell};
}

FamilySpec FamilySpec::case_c(std::int64_t a, std::int64_t ell) {
  if (a < 1 || ell < 2) throw Error(ErrorCode::InvalidSpec, "case c needs a >= 1 and l >= 2");
  return FamilySpec{FamilyCase::C, ipow(3, ell - 2) * a, a, ell};
}

FamilySpec FamilySpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw Error(ErrorCode::InvalidSpec, "'" + std::string(s) + "' is not an integer in '" + std::string(text) + "'");
    return v;
  };

  FamilySpec spec;
  const std::string_view tag = parts.front();
  if (tag == "a3") spec.kind = FamilyCase::A3;
  else if (tag == "a4-3k") spec.kind = FamilyCase::A4_3k;
  else if (tag == "a4-4k") spec.kind = FamilyCase::A4_4k;
  else if (tag == "a6") spec.kind = FamilyCase::A6;
  else if (tag == "a8") spec.kind = FamilyCase::A8;
  else if (tag == "b") spec.kind = FamilyCase::B;
  else if (tag == "c") spec.kind = FamilyCase::C;
  else throw Error(ErrorCode::InvalidSpec, "unknown family case '" + std::string(tag) + "'");

  const bool coded = spec.kind == FamilyCase::B || spec.kind == FamilyCase::C;
  const std::size_t expected = coded ? 4 : 2;
  if (parts.size() != expected)
    throw Error(ErrorCode::InvalidSpec, "'" + std::string(text) + "': expected " +
                                            std::string(coded ? "case:k:a:l" : "case:k"));
  spec.k = number(parts[1]);
  if (coded) {
    spec.a = number(parts[2]);
    spec.ell = number(parts[3]);
  }
  spec.validate();
  return spec;
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  os << hstar::to_string(kind) << ':' << k;
  if (kind == FamilyCase::B || kind == FamilyCase::C) os << ':' << a << ':' << ell;
  return os.str();
}

std::int64_t FamilySpec::m() const {
  switch (kind) {
    case FamilyCase::A3: return 3;
    case FamilyCase::A4_3k:
    case FamilyCase::A4_4k: return 4;
    case FamilyCase::A6: return 6;
    case FamilyCase::A8: return 8;
    case FamilyCase::B: return ipow(2, ell);
    case FamilyCase::C: return ipow(3, ell);
  }
  return 0;
}

std::int64_t FamilySpec::d() const {
  switch (kind) {
    case FamilyCase::A4_4k: return 4 * k - 1;
    case FamilyCase::B: return ipow(2, ell - 1) * a - 1;
    case FamilyCase::C: return ipow(3, ell - 1) * a - 1;
    default: return 3 * k - 1;
  }
}

void FamilySpec::validate() const {
  auto fail = [&](const std::string& why) { throw Error(ErrorCode::InvalidSpec, to_string() + ": " + why); };
  if (k < 2) fail("k must be at least 2");
  if (kind == FamilyCase::B) {
    if (a < 1) fail("a must be at least 1");
    if (ell < 3) fail("l must be at least 3");
    if (a == 1 && ell == 3) fail("(a, l) = (1, 3) is excluded");
    if (k != ipow(2, ell - 3) * a) fail("k must equal 2^(l-3) a");
  } else if (kind == FamilyCase::C) {
    if (a < 1) fail("a must be at least 1");
    if (ell < 2) fail("l must be at least 2");
    if (a == 1 && ell == 2) fail("(a, l) = (1, 2) is excluded");
    if (k != ipow(3, ell - 2) * a) fail("k must equal 3^(l-2) a");
  } else if (a != 0 || ell != 0) {
    fail("parameters a and l only apply to cases b and c");
  }
}

GeneratorMatrix trinomial_generator(const FamilySpec& spec) {
  spec.validate();
  const std::int64_t k = spec.k;
  GeneratorMatrix g;
  g.len = static_cast<std::size_t>(spec.d() + 1);
  switch (spec.kind) {
    case FamilyCase::A3:
      g.den = 3;
      g.rows.assign(1, {});
      append(g.rows[0], 1, 3 * k);
      break;
    case FamilyCase::A4_3k:
      g.den = 4;
      g.rows.assign(1, {});
      append(g.rows[0], 1, 2 * k);
      append(g.rows[0], 2, k);
      break;
    case FamilyCase::A4_4k:
      g.den = 2;
      g.rows.assign(2, {});
      append(g.rows[0], 1, 2 * k);
      append(g.rows[0], 0, 2 * k);
      append(g.rows[1], 1, 4 * k);
      break;
    case FamilyCase::A6:
      g.den = 6;
      g.rows.assign(1, {});
      append(g.rows[0], 1, k);
      append(g.rows[0], 2, k);
      append(g.rows[0], 3, k);
      break;
    case FamilyCase::A8:
      g.den = 4;
      g.rows.assign(2, {});
      append(g.rows[0], 2, k);
      append(g.rows[0], 0, k);
      append(g.rows[0], 2, k);
      append(g.rows[1], 1, k);
      append(g.rows[1], 1, k);
      append(g.rows[1], 2, k);
      break;
    case FamilyCase::B:
    case FamilyCase::C: {
      const std::int64_t p = spec.kind == FamilyCase::B ? 2 : 3;
      const auto r = static_cast<std::size_t>(spec.ell - 1);
      const FpMatrix code = simplex_code_generator(p, r).rows_reversed();
      const FpMatrix neg = code.negated();
      g.den = p;
      g.rows.assign(r + 1, {});
      for (std::int64_t rep = 0; rep < spec.a; ++rep)
        for (std::size_t row = 0; row < r; ++row) {
          for (std::size_t c = 0; c < code.cols(); ++c) g.rows[row].push_back(code(row, c));
          if (p == 3)
            for (std::size_t c = 0; c < neg.cols(); ++c) g.rows[row].push_back(neg(row, c));
          g.rows[row].push_back(0);
        }
      append(g.rows[r], 1, static_cast<std::int64_t>(g.len));
      break;
    }
  }
  return g;
}

SimplexGroup trinomial_family(const FamilySpec& spec) { return trinomial_generator(spec).group(); }

std::vector<FamilySpec> trinomial_specs_for(std::int64_t k, std::int64_t d) {
  std::vector<FamilySpec> out;
  if (k < 2) return out;
  for (FamilyCase c : {FamilyCase::A3, FamilyCase::A4_3k, FamilyCase::A4_4k, FamilyCase::A6, FamilyCase::A8}) {
    FamilySpec s{c, k, 0, 0};
    if (s.d() == d) out.push_back(s);
  }
  // B: k = 2^{l-3} a, d = 4k - 1. C: k = 3^{l-2} a, d = 3k - 1.
  if (d == 4 * k - 1)
    for (std::int64_t ell = 3; ipow(2, ell - 3) <= k; ++ell)
      if (k % ipow(2, ell - 3) == 0 && !(k / ipow(2, ell - 3) == 1 && ell == 3))
        out.push_back(FamilySpec::case_b(k / ipow(2, ell - 3), ell));
  if (d == 3 * k - 1)
    for (std::int64_t ell = 2; ipow(3, ell - 2) <= k; ++ell)
      if (k % ipow(3, ell - 2) == 0 && !(k / ipow(3, ell - 2) == 1 && ell == 2))
        out.push_back(FamilySpec::case_c(k / ipow(3, ell - 2), ell));
  return out;
}

std::vector<FamilySpec> trinomial_specs_for(std::int64_t k, std::int64_t m, std::int64_t d) {
  std::vector<FamilySpec> out;
  for (const auto& s : trinomial_specs_for(k, d))
    if (s.m() == m) out.push_back(s);
  return out;
}

}  // namespace hstar
