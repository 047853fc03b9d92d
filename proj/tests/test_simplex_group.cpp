#include "hstar/canonical.hpp"
#include "hstar/correspondence.hpp"
#include "hstar/error.hpp"
#include "hstar/families.hpp"
#include "hstar/io.hpp"
#include "hstar/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

using namespace hstar;

namespace {

GroupElement frac(std::vector<std::pair<std::int64_t, std::int64_t>> f) { return GroupElement::from_fractions(f); }

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<SimplexGroup> family_groups() {
  std::vector<SimplexGroup> out;
  for (const char* s : {"a3:2", "a4-3k:2", "a4-4k:2", "a6:2", "a8:2", "b:2:2:3", "b:2:1:4", "c:2:2:2", "a6:3", "c:3:1:3"})
    out.push_back(trinomial_family(FamilySpec::parse(s)));
  return out;
}

std::map<std::int64_t, std::size_t> order_histogram(const SimplexGroup& g) {
  std::map<std::int64_t, std::size_t> h;
  for (const auto& x : g.elements()) ++h[element_order(x)];
  return h;
}

}  // namespace

TEST_SUITE("simplex_group") {
  TEST_CASE("element arithmetic") {
    CHECK(negate(frac({{1, 2}, {1, 3}})) == frac({{1, 2}, {2, 3}}));
    const GroupElement zero = GroupElement::zero(3);
    for (std::int64_t j = -3; j <= 5; ++j) CHECK(multiple(j, zero) == zero);
    CHECK(element_order(frac({{1, 6}, {1, 3}, {1, 2}, {0, 1}})) == 6);
    CHECK(support(frac({{0, 1}, {1, 2}, {0, 1}, {1, 2}})) == std::vector<std::size_t>{1, 3});
    CHECK(height(frac({{1, 3}, {2, 3}, {1, 2}, {1, 2}})) == 2);
    CHECK_THROWS_AS(height(frac({{1, 2}, {0, 1}})), Error);
    CHECK(add(frac({{1, 2}, {1, 3}}), frac({{1, 2}, {2, 3}})) == GroupElement::zero(2));
    CHECK(frac({{1, 2}, {0, 1}, {1, 2}}).to_string() == "(1/2,0,1/2)");
  }

  TEST_CASE("group of simplex examples") {
    const SimplexGroup triv = group_of_simplex(LatticeSimplex({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(triv.order() == 1);

    const LatticeSimplex s({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
    const SimplexGroup g = group_of_simplex(s);
    CHECK(g == SimplexGroup::generated(4, 2, {{1, 1, 1, 1}}));
    CHECK(oracle::rows_over(g, 2) == oracle::brute_force_group(s.vertices(), 2));
  }

  TEST_CASE("group of simplex matches brute force") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
      const std::size_t d = 1 + i % 3;
      const LatticeSimplex s = random_simplex(rng, d, -3, 3, d == 3 ? 12 : 40);
      const SimplexGroup g = group_of_simplex(s);
      const auto vol = static_cast<std::int64_t>(normalized_volume(s));
      CHECK(static_cast<std::int64_t>(g.order()) == vol);
      CHECK(oracle::rows_over(g, vol) == oracle::brute_force_group(s.vertices(), vol));
    }
  }

  TEST_CASE("simplex of group round trips") {
    const SimplexGroup triv = SimplexGroup::trivial(3);
    const LatticeSimplex t = simplex_of_group(triv);
    CHECK(t.dim() == 2);
    CHECK(normalized_volume(t) == 1);

    const SimplexGroup half = SimplexGroup::generated(4, 2, {{1, 1, 1, 1}});
    const LatticeSimplex h = simplex_of_group(half);
    CHECK(normalized_volume(h) == 2);
    CHECK(count_lattice_points(h, 1) == 4);
    CHECK(group_of_simplex(h) == half);

    const SimplexGroup reeve = SimplexGroup::generated(4, 5, {{1, 4, 2, 3}});
    CHECK(group_of_simplex(simplex_of_group(reeve)) == reeve);

    const SimplexGroup ex = SimplexGroup::generated(6, 3, {{1, 2, 0, 1, 2, 0}, {1, 1, 1, 1, 1, 1}});
    const LatticeSimplex es = simplex_of_group(ex);
    CHECK(es.dim() == 5);
    CHECK(normalized_volume(es) == 9);
    CHECK(group_of_simplex(es) == ex);

    for (const auto& g : family_groups()) CHECK(group_of_simplex(simplex_of_group(g)) == g);

    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
      const SimplexGroup g = group_of_simplex(random_simplex(rng, 2 + i % 3, -4, 4));
      CHECK(group_of_simplex(simplex_of_group(g)) == g);
    }
  }

  TEST_CASE("simplex of group needs integer heights") {
    try {
      simplex_of_group(SimplexGroup::generated(2, 2, {{1, 0}}));
      FAIL("expected NonIntegerHeight");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonIntegerHeight);
    }
  }

  TEST_CASE("h* from group") {
    CHECK(hstar_from_group(SimplexGroup::trivial(3)) == HStarPolynomial({1}));
    CHECK(hstar_from_group(SimplexGroup::generated(4, 2, {{1, 1, 1, 1}})) == HStarPolynomial({1, 0, 1}));
    const auto b = trinomial_family(FamilySpec::parse("b:2:2:3"));
    CHECK(b.order() == 8);
    CHECK(hstar_from_group(b) == HStarPolynomial({1, 0, 6, 0, 1}));
  }

  TEST_CASE("h* from group equals h* by counting") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
      const LatticeSimplex s = random_simplex(rng, 1 + i % 4, -4, 4);
      CHECK(hstar_from_group(group_of_simplex(s)) == hstar_by_counting(s));
    }
    for (const auto& g : family_groups()) {
      if (g.ambient_len() > 8) continue;
      CHECK(hstar_by_counting(simplex_of_group(g)) == hstar_from_group(g));
    }
  }

  TEST_CASE("pyramid indices") {
    CHECK(pyramid_indices(SimplexGroup::trivial(4)) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(pyramid_indices(SimplexGroup::generated(4, 2, {{1, 1, 0, 0}})) == std::vector<std::size_t>{2, 3});
    CHECK(pyramid_indices(trinomial_family(FamilySpec::parse("a6:2"))).empty());
  }

  TEST_CASE("element invariants") {
    std::vector<SimplexGroup> groups = family_groups();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 30; ++i) groups.push_back(group_of_simplex(random_simplex(rng, 2 + i % 4, -4, 4, 60)));
    for (const auto& g : groups)
      for (const auto& x : g.elements()) {
        if (x.is_zero()) continue;
        CHECK(static_cast<std::int64_t>(support(x).size()) == height(x) + height(negate(x)));
        const std::int64_t n = element_order(x);
        for (std::int64_t j = 1; j < n; ++j) {
          if (std::gcd(j, n) != 1) continue;
          CHECK(support(multiple(j, x)) == support(x));
          CHECK(height(multiple(j, x)) + height(multiple(n - j, x)) == height(x) + height(multiple(n - 1, x)));
        }
      }
  }

  TEST_CASE("structure of trinomial groups") {
    for (const auto& g : family_groups()) {
      const HStarPolynomial h = hstar_from_group(g);
      const std::int64_t k = static_cast<std::int64_t>(h.degree()) / 2;
      REQUIRE(k >= 2);
      std::vector<GroupElement> top;
      for (const auto& x : g.elements())
        if (!x.is_zero() && height(x) == 2 * k) top.push_back(x);
      REQUIRE(top.size() == 1);
      const GroupElement x = top[0];
      const GroupElement mx = negate(x);
      for (const auto& y : g.elements()) {
        if (y.is_zero() || y == x || y == mx) continue;
        CHECK(static_cast<std::int64_t>(support(y).size()) == 2 * k);
        for (std::int64_t j = 0; j < element_order(y); ++j) CHECK(multiple(j, y) != x);
      }
      // Coordinate shape of the height-2k element for each possible order.
      std::map<std::int64_t, std::int64_t> values;  // value * 12 -> multiplicity
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x.numerators()[i] != 0) ++values[x.numerators()[i] * (12 / x.denominator())];
      const std::int64_t o = element_order(x);
      CHECK((o == 2 || o == 3 || o == 4 || o == 6));
      if (o == 2) CHECK(values == std::map<std::int64_t, std::int64_t>{{6, 4 * k}});
      if (o == 3) CHECK(values == std::map<std::int64_t, std::int64_t>{{8, 3 * k}});
      if (o == 4) CHECK(values == std::map<std::int64_t, std::int64_t>{{9, 2 * k}, {6, k}});
      if (o == 6) CHECK(values == std::map<std::int64_t, std::int64_t>{{10, k}, {8, k}, {6, k}});
    }
  }

  TEST_CASE("canonical form") {
    const SimplexGroup a = SimplexGroup::generated(5, 2, {{0, 1, 1, 1, 1}});
    const SimplexGroup b = SimplexGroup::generated(5, 2, {{1, 1, 1, 1, 0}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(canonical_form(a)) == canonical_form(a));
    const SimplexGroup small = SimplexGroup::generated(5, 2, {{1, 1, 0, 0, 0}});
    CHECK(canonical_form(small) != canonical_form(a));
  }

  TEST_CASE("canonical form is a permutation invariant") {
    std::mt19937_64 rng(37);
    std::vector<SimplexGroup> groups = family_groups();
    for (int i = 0; i < 20; ++i) groups.push_back(group_of_simplex(random_simplex(rng, 3 + i % 3, -4, 4)));
    for (const auto& g : groups) {
      const CanonicalLabeling lab = canonical_labeling(g);
      CHECK(permute_coordinates(g, lab.permutation) == lab.group);
      CHECK(canonical_form(lab.group) == lab.group);
      for (int rep = 0; rep < 5; ++rep) {
        const SimplexGroup p = permute_coordinates(g, random_permutation(rng, g.ambient_len()));
        CHECK(canonical_form(p) == lab.group);
      }
      CHECK(hstar_from_group(lab.group) == hstar_from_group(g));
      CHECK(pyramid_indices(lab.group).size() == pyramid_indices(g).size());
      CHECK(order_histogram(lab.group) == order_histogram(g));
    }
  }

  TEST_CASE("canonical form budget") {
    // Fully symmetric group: every placement ties, so a tiny budget runs out.
    const SimplexGroup g = SimplexGroup::generated(8, 2, {{1, 1, 1, 1, 1, 1, 1, 1}});
    try {
      canonical_form(g, 3);
      FAIL("expected CanonicalizationBudget");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CanonicalizationBudget);
    }
  }

  TEST_CASE("group cap") {
    try {
      SimplexGroup::generated(3, 7, {{1, 6, 0}, {0, 1, 6}}, 10);
      FAIL("expected GroupTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GroupTooLarge);
    }
  }

  TEST_CASE("group elements form a subgroup") {
    for (const auto& g : family_groups()) {
      const auto elems = g.elements();
      for (std::size_t i = 0; i < elems.size(); i += 3)
        for (std::size_t j = 0; j < elems.size(); j += 5) CHECK(g.contains(add(elems[i], elems[j])));
      for (std::size_t i = 1; i < g.order(); ++i)
        CHECK(std::lexicographical_compare(g.row(i - 1).begin(), g.row(i - 1).end(), g.row(i).begin(), g.row(i).end()));
    }
  }

  TEST_CASE("simplex text and JSON round trip") {
    const LatticeSimplex s({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
    for (Format f : {Format::Text, Format::Json}) {
      const std::string text = write_simplex(s, f);
      CHECK(parse_simplex(text, f) == s);
      CHECK(write_simplex(parse_simplex(text, f), f) == text);
      CHECK(sniff_format(text) == f);
    }
    CHECK(write_simplex(s, Format::Text) == "0 0 0\n1 0 0\n0 1 0\n1 1 2\n");
    CHECK(parse_simplex("# comment\n0 0\n3 0\n0 3\n", Format::Text) == LatticeSimplex({{0, 0}, {3, 0}, {0, 3}}));
    CHECK_THROWS_AS(parse_simplex("0 0\n3 x\n0 3\n", Format::Text), Error);
    CHECK_THROWS_AS(parse_simplex("{\"dim\":2}", Format::Json), Error);
  }

  TEST_CASE("group text and JSON round trip") {
    const SimplexGroup g = trinomial_family(FamilySpec::parse("c:2:2:2"));
    CHECK(write_group(g, Format::Text) == "6 3\n1 2 0 1 2 0\n1 1 1 1 1 1\n");
    CHECK(write_group(g, Format::Json) == "{\"den\":3,\"generators\":[[1,2,0,1,2,0],[1,1,1,1,1,1]],\"len\":6}\n");
    for (Format f : {Format::Text, Format::Json}) {
      const std::string text = write_group(g, f);
      CHECK(parse_group(text, f) == g);
      CHECK(write_group(parse_group(text, f), f) == text);
    }
    CHECK_THROWS_AS(parse_group("2 2\n1 3\n", Format::Text), Error);
    CHECK_THROWS_AS(parse_group("2 2\n1 1 1\n", Format::Text), Error);
  }

  TEST_CASE("from elements") {
    const SimplexGroup g = trinomial_family(FamilySpec::parse("a8:2"));
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < g.order(); ++i) rows.emplace_back(g.row(i).begin(), g.row(i).end());
    CHECK(SimplexGroup::from_elements(g.ambient_len(), g.denominator(), rows) == g);
    rows.pop_back();
    CHECK_THROWS_AS(SimplexGroup::from_elements(g.ambient_len(), g.denominator(), rows), Error);
  }
}
