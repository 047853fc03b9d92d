#include "hstar/canonical.hpp"
#include "hstar/correspondence.hpp"
#include "hstar/error.hpp"
#include "hstar/families.hpp"
#include "hstar/fp_matrix.hpp"
#include "hstar/polytope_ops.hpp"
#include "hstar/random.hpp"

#include <doctest.h>

#include <random>

using namespace hstar;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Overflow;
}

HStarPolynomial binomial(std::uint64_t a, std::size_t k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  c[0] = 1;
  c[k] = a;
  return HStarPolynomial(c);
}

HStarPolynomial trinomial(std::uint64_t m, std::size_t k) {
  std::vector<std::uint64_t> c(2 * k + 1, 0);
  c[0] = 1;
  c[k] = m - 2;
  c[2 * k] = 1;
  return HStarPolynomial(c);
}

std::vector<FamilySpec> all_small_specs() {
  std::vector<FamilySpec> out;
  for (std::int64_t k : {2, 3})
    for (const char* tag : {"a3", "a4-3k", "a4-4k", "a6", "a8"})
      out.push_back(FamilySpec::parse(std::string(tag) + ":" + std::to_string(k)));
  for (auto [a, l] : {std::pair{2, 3}, {1, 4}, {4, 3}}) out.push_back(FamilySpec::case_b(a, l));
  for (auto [a, l] : {std::pair{2, 2}, {1, 3}, {3, 2}}) out.push_back(FamilySpec::case_c(a, l));
  return out;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("simplex code generator") {
    const FpMatrix a = simplex_code_generator(2, 2);
    REQUIRE(a.cols() == 3);
    CHECK(a.column(0) == std::vector<std::int64_t>{0, 1});
    CHECK(a.column(1) == std::vector<std::int64_t>{1, 0});
    CHECK(a.column(2) == std::vector<std::int64_t>{1, 1});

    const FpMatrix b = simplex_code_generator(3, 1);
    CHECK(b.rows() == 1);
    CHECK(b.cols() == 1);
    CHECK(b(0, 0) == 1);

    const FpMatrix c = simplex_code_generator(2, 3);
    CHECK(c.cols() == 7);
    std::set<std::vector<std::int64_t>> cols;
    for (std::size_t j = 0; j < 7; ++j) cols.insert(c.column(j));
    CHECK(cols.size() == 7);
    CHECK(!cols.contains({0, 0, 0}));

    CHECK(code_of([] { simplex_code_generator(4, 2); }) == ErrorCode::NotPrime);
  }

  TEST_CASE("simplex codes have constant weight") {
    for (auto [p, r] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 2}}) {
      const FpMatrix a = simplex_code_generator(p, static_cast<std::size_t>(r));
      std::int64_t pr = 1;
      for (int i = 0; i < r; ++i) pr *= p;
      CHECK(static_cast<std::int64_t>(a.cols()) == (pr - 1) / (p - 1));
      for (const auto& v : a.row_span()) {
        const auto w = std::count_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
        if (w != 0) CHECK(w == pr / p);
      }
    }
  }

  TEST_CASE("fp matrix helpers") {
    const FpMatrix a = simplex_code_generator(3, 2);
    const FpMatrix n = a.negated();
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) CHECK((a(i, j) + n(i, j)) % 3 == 0);
    const FpMatrix r = a.rows_reversed();
    CHECK(r.column(0) == std::vector<std::int64_t>{a(1, 0), a(0, 0)});
  }

  TEST_CASE("lattice pyramid") {
    const LatticeSimplex point({Point{}});
    const LatticeSimplex seg = lattice_pyramid(point);
    CHECK(seg.dim() == 1);
    CHECK(normalized_volume(seg) == 1);

    const LatticeSimplex tri({{0, 0}, {3, 0}, {0, 3}});
    const LatticeSimplex pyr = lattice_pyramid(tri);
    CHECK(pyr.dim() == 3);
    CHECK(hstar_by_counting(pyr) == HStarPolynomial({1, 7, 1}));
    CHECK(is_lattice_pyramid(group_of_simplex(pyr)));
    CHECK(!is_lattice_pyramid(group_of_simplex(tri)));
  }

  TEST_CASE("pyramids keep h*") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
      const LatticeSimplex s = random_simplex(rng, 1 + i % 4, -4, 4, 200);
      const LatticeSimplex p = lattice_pyramid(s);
      CHECK(hstar_by_counting(p) == hstar_by_counting(s));
      CHECK(hstar_from_group(group_of_simplex(p)) == hstar_from_group(group_of_simplex(s)));
    }
  }

  TEST_CASE("cayley polytopes") {
    // Two empty segments in R^2 whose Cayley polytope has group <(1/2,1/2,1/2,1/2)>.
    const PointConfiguration s1{2, {{0, 0}, {1, 0}}};
    const PointConfiguration s2{2, {{0, 0}, {1, 2}}};
    const LatticeSimplex c = cayley_simplex({s1, s2});
    CHECK(c.dim() == 3);
    CHECK(hstar_by_counting(c) == HStarPolynomial({1, 0, 1}));

    const PointConfiguration tri{2, {{0, 0}, {3, 0}, {0, 3}}};
    const PointConfiguration one = cayley({tri});
    CHECK(one.ambient_dim == 3);
    CHECK(one.points[1] == Point{1, 3, 0});
    CHECK(hstar_by_counting(cayley_simplex({tri})) == HStarPolynomial({1, 7, 1}));

    CHECK(code_of([&] { cayley({s1, PointConfiguration{3, {{0, 0, 0}}}}); }) == ErrorCode::DimensionMismatch);
  }

  TEST_CASE("white cayley groups") {
    const GeneratorMatrix g = white_cayley_generator(2, 5, {1, 2});
    CHECK(g.rows == std::vector<std::vector<std::int64_t>>{{1, 4, 2, 3}});
    CHECK(hstar_from_group(white_cayley_group(2, 5, {1, 2})) == binomial(4, 2));
    CHECK(white_cayley_generator(2, 5, {4, 3}).rows == g.rows);
    CHECK(white_cayley_generator(2, 2, {1, 1}).rows == std::vector<std::vector<std::int64_t>>{{1, 1, 1, 1}});
    CHECK(hstar_from_group(white_cayley_group(2, 2, {1, 1})) == binomial(1, 2));
    CHECK(hstar_from_group(white_cayley_group(3, 7, {1, 2, 3})) == binomial(6, 3));

    CHECK(code_of([] { white_cayley_group(2, 6, {1, 2}); }) == ErrorCode::NotCoprime);
    CHECK(code_of([] { white_cayley_group(2, 5, {0, 2}); }) == ErrorCode::RangeViolated);
    CHECK(code_of([] { white_cayley_group(2, 5, {1}); }) == ErrorCode::RangeViolated);
  }

  TEST_CASE("white cayley simplices realize their groups") {
    const LatticeSimplex s = white_cayley_simplex(2, 5, {1, 2});
    CHECK(hstar_by_counting(s) == binomial(4, 2));
    for (std::int64_t k = 2; k <= 3; ++k)
      for (std::int64_t m = 2; m <= 12; ++m) {
        std::vector<std::int64_t> a;
        for (std::int64_t v = 1; static_cast<std::int64_t>(a.size()) < k && v <= m / 2; ++v)
          if (std::gcd(v, m) == 1) a.push_back(v);
        while (static_cast<std::int64_t>(a.size()) < k) a.push_back(1);
        const LatticeSimplex w = white_cayley_simplex(k, m, a);
        CHECK(group_of_simplex(w) == white_cayley_group(k, m, a));
        if (k == 2) CHECK(hstar_by_counting(w) == binomial(static_cast<std::uint64_t>(m - 1), 2));
      }
  }

  TEST_CASE("binomial families") {
    CHECK(binomial_family_dimension(2, 3, 2) == 6);
    CHECK(hstar_from_group(binomial_family(2, 3, 2, 6)) == binomial(7, 2));
    CHECK(binomial_family_dimension(3, 2, 3) == 7);
    const SimplexGroup g = binomial_family(3, 2, 3, 7);
    CHECK(hstar_from_group(g) == binomial(8, 3));
    CHECK(hstar_by_counting(simplex_of_group(g)) == binomial(8, 3));
    CHECK(!is_lattice_pyramid(g));

    CHECK(code_of([] { binomial_family(2, 2, 1, 1); }) == ErrorCode::RangeViolated);
    CHECK(code_of([] { binomial_family(2, 3, 2, 7); }) == ErrorCode::NumericalConditionViolated);
    CHECK(code_of([] { binomial_family(4, 2, 2, 5); }) == ErrorCode::NotPrime);
  }

  TEST_CASE("binomial families: every non-zero element has height k") {
    for (auto [p, r] : {std::pair{2, 2}, {2, 3}, {3, 2}})
      for (std::int64_t k = 2; k <= 9; ++k) {
        const auto d = binomial_family_dimension(p, r, k);
        if (!d) continue;
        // An integral d already forces the repetition count to be integral.
        const SimplexGroup g = binomial_family(p, r, k, *d);
        CHECK(static_cast<std::int64_t>(g.order()) == (p == 2 ? (1 << r) : 9));
        for (const auto& x : g.elements())
          if (!x.is_zero()) CHECK(height(x) == k);
      }
  }

  TEST_CASE("trinomial family matrices") {
    const GeneratorMatrix b = trinomial_generator(FamilySpec::parse("b:2:2:3"));
    CHECK(b.den == 2);
    CHECK(b.rows == std::vector<std::vector<std::int64_t>>{
                        {1, 0, 1, 0, 1, 0, 1, 0}, {0, 1, 1, 0, 0, 1, 1, 0}, {1, 1, 1, 1, 1, 1, 1, 1}});
    const GeneratorMatrix c = trinomial_generator(FamilySpec::parse("c:2:2:2"));
    CHECK(c.den == 3);
    CHECK(c.rows == std::vector<std::vector<std::int64_t>>{{1, 2, 0, 1, 2, 0}, {1, 1, 1, 1, 1, 1}});
    const GeneratorMatrix a6 = trinomial_generator(FamilySpec::parse("a6:2"));
    CHECK(a6.den == 6);
    CHECK(a6.rows == std::vector<std::vector<std::int64_t>>{{1, 1, 2, 2, 3, 3}});

    CHECK(hstar_from_group(b.group()) == trinomial(8, 2));
    CHECK(hstar_from_group(c.group()) == trinomial(9, 2));
    CHECK(hstar_from_group(a6.group()) == trinomial(6, 2));
  }

  TEST_CASE("trinomial family contracts") {
    for (const auto& spec : all_small_specs()) {
      CAPTURE(spec.to_string());
      const SimplexGroup g = trinomial_family(spec);
      CHECK(static_cast<std::int64_t>(g.order()) == spec.m());
      CHECK(static_cast<std::int64_t>(g.ambient_len()) == spec.d() + 1);
      CHECK(hstar_from_group(g) == trinomial(static_cast<std::uint64_t>(spec.m()), static_cast<std::size_t>(spec.k)));
      CHECK(pyramid_indices(g).empty());
      if (spec.kind == FamilyCase::A4_4k || spec.kind == FamilyCase::B) CHECK(spec.d() == 4 * spec.k - 1);
      else CHECK(spec.d() == 3 * spec.k - 1);
    }
  }

  TEST_CASE("cyclic trinomial groups") {
    // Cyclic groups generated by the height-2k element shapes up to inversion.
    for (std::int64_t k = 2; k <= 3; ++k) {
      const auto n = static_cast<std::size_t>(3 * k);
      std::vector<std::int64_t> m3(n, 2);
      std::vector<std::int64_t> m4;
      m4.insert(m4.end(), 2 * k, 3);
      m4.insert(m4.end(), k, 2);
      std::vector<std::int64_t> m6;
      m6.insert(m6.end(), k, 5);
      m6.insert(m6.end(), k, 4);
      m6.insert(m6.end(), k, 3);
      CHECK(canonical_form(SimplexGroup::generated(n, 3, {m3})) ==
            canonical_form(trinomial_family(FamilySpec{FamilyCase::A3, k})));
      CHECK(canonical_form(SimplexGroup::generated(n, 4, {m4})) ==
            canonical_form(trinomial_family(FamilySpec{FamilyCase::A4_3k, k})));
      CHECK(canonical_form(SimplexGroup::generated(n, 6, {m6})) ==
            canonical_form(trinomial_family(FamilySpec{FamilyCase::A6, k})));
    }
  }

  TEST_CASE("family spec parsing and validation") {
    const FamilySpec b = FamilySpec::parse("b:2:2:3");
    CHECK(b.kind == FamilyCase::B);
    CHECK(b.m() == 8);
    CHECK(b.d() == 7);
    CHECK(b.to_string() == "b:2:2:3");
    CHECK(FamilySpec::parse("c:2:2:2").m() == 9);
    CHECK(FamilySpec::parse("a4-4k:3").d() == 11);

    for (const char* bad : {"b:1:1:3", "b:2:2:4", "c:1:1:2", "a3:1", "a3", "a3:2:1:1", "z:2", "b:2:x:3", "c:3:1:2"})
      CHECK_MESSAGE(code_of([&] { FamilySpec::parse(bad); }) == ErrorCode::InvalidSpec, bad);
  }

  TEST_CASE("specs by parameters") {
    CHECK(trinomial_specs_for(2, 5).size() == 5);
    CHECK(trinomial_specs_for(2, 7).size() == 3);
    CHECK(trinomial_specs_for(2, 4).empty());
    CHECK(trinomial_specs_for(2, 9, 5) == std::vector<FamilySpec>{FamilySpec::case_c(2, 2)});
  }
}
