#include "hstar/classify.hpp"

#include "hstar/canonical.hpp"
#include "hstar/correspondence.hpp"
#include "hstar/error.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace hstar {
namespace {

nlohmann::json group_json(const SimplexGroup& g) {
  return {{"len", g.ambient_len()}, {"den", g.denominator()}, {"generators", g.generators()}};
}

// (k, a, b) for h = 1 + a t^k + b t^{2k} with k >= 1, b >= 1, a >= 0.
struct Trinomial {
  std::int64_t k, a, b;
};
std::optional<Trinomial> trinomial_terms(const HStarPolynomial& h) {
  const std::size_t deg = h.degree();
  if (deg < 2 || deg % 2 != 0 || h[0] != 1) return std::nullopt;
  const std::size_t k = deg / 2;
  for (std::size_t i = 1; i < deg; ++i)
    if (i != k && h[i] != 0) return std::nullopt;
  return Trinomial{static_cast<std::int64_t>(k), static_cast<std::int64_t>(h[k]), static_cast<std::int64_t>(h[deg])};
}

}  // namespace

std::optional<TrinomialShape> palindromic_trinomial_shape(const HStarPolynomial& h) {
  const auto t = trinomial_terms(h);
  if (!t || t->b != 1 || t->a < 1) return std::nullopt;
  return TrinomialShape{t->k, t->a + 2};
}

std::optional<FamilySpec> classify_trinomial_group(const SimplexGroup& g) {
  const auto shape = palindromic_trinomial_shape(hstar_from_group(g));
  if (!shape || shape->k < 2 || is_lattice_pyramid(g)) return std::nullopt;
  const auto d = static_cast<std::int64_t>(g.ambient_len()) - 1;
  const auto specs = trinomial_specs_for(shape->k, shape->m, d);
  if (specs.empty()) return std::nullopt;
  const SimplexGroup canon = canonical_form(g);
  for (const auto& spec : specs)
    if (canonical_form(trinomial_family(spec)) == canon) return spec;
  return std::nullopt;
}

std::string ClassificationEntry::to_json() const {
  nlohmann::json j{{"hstar", hstar.coeffs()}, {"k", k},        {"m", m},
                   {"d", d},                {"pyramid", pyramid}, {"order", group.order()}};
  j["case"] = match ? match->to_string() : "UNEXPECTED";
  j["group"] = group_json(group);
  return j.dump();
}

std::set<std::int64_t> ClassificationReport::m_set() const {
  std::set<std::int64_t> s;
  for (const auto& e : entries) s.insert(e.m);
  return s;
}

std::size_t ClassificationReport::unexpected_count() const {
  std::size_t c = 0;
  for (const auto& e : entries) c += e.match ? 0 : 1;
  return c;
}

bool ClassificationReport::unique_per_m() const { return m_set().size() == entries.size(); }

std::string ClassificationReport::json_lines() const {
  std::string out;
  for (const auto& e : entries) out += e.to_json() + '\n';
  return out;
}

std::string ClassificationReport::summary() const {
  std::ostringstream os;
  os << "# scope: k=" << k << " d=" << d << ' ' << bounds.to_string() << '\n';
  os << "candidates examined: " << stats.candidates_examined << '\n';
  os << "trinomial groups found: " << entries.size() << '\n';
  os << "m-set: {";
  bool first = true;
  for (auto m : m_set()) {
    os << (first ? "" : ",") << m;
    first = false;
  }
  os << "}\n";
  os << "unexpected: " << unexpected_count() << '\n';
  os << "unique per m: " << (unique_per_m() ? "yes" : "no") << '\n';
  for (const auto& e : entries)
    os << "  m=" << e.m << "  " << e.hstar.to_string() << "  " << (e.match ? e.match->to_string() : "UNEXPECTED")
       << '\n';
  for (const auto& s : missing) os << "  missing: " << s.to_string() << " (m=" << s.m() << ")\n";
  return os.str();
}

ClassificationReport verify_classification(std::int64_t k, std::int64_t d, EnumerationBounds bounds) {
  if (k < 1 || 2 * k > d + 1) throw Error(ErrorCode::RangeViolated, "need 1 <= k and 2k <= d + 1");
  bounds.n = static_cast<std::size_t>(d + 1);
  bounds.exclude_pyramids = true;

  ClassificationReport report;
  report.k = k;
  report.d = d;
  report.bounds = bounds;

  const GroupFilter keep = [k](const SimplexGroup& g) {
    const auto shape = palindromic_trinomial_shape(hstar_from_group(g));
    return shape && shape->k == k;
  };
  const auto groups = enumerate_groups(bounds, keep, &report.stats);

  for (const auto& g : groups) {
    ClassificationEntry e{g, hstar_from_group(g)};
    const auto shape = palindromic_trinomial_shape(e.hstar);
    e.k = shape->k;
    e.m = shape->m;
    e.d = d;
    e.pyramid = is_lattice_pyramid(g);
    e.match = classify_trinomial_group(g);
    report.entries.push_back(std::move(e));
  }

  // Family members the bounds can see must turn up.
  for (const auto& spec : trinomial_specs_for(k, d)) {
    const SimplexGroup g = trinomial_family(spec);
    if (static_cast<std::int64_t>(g.order()) > bounds.max_order) continue;
    bool visible = true;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
      const auto o = element_order(g.element(i));
      if (o > 1 && !bounds.allowed_orders.empty() &&
          std::find(bounds.allowed_orders.begin(), bounds.allowed_orders.end(), o) == bounds.allowed_orders.end())
        visible = false;
      if (bounds.elementary_prime && o > 1 && o != *bounds.elementary_prime) visible = false;
    }
    rank = g.generators().size();
    if (rank > bounds.max_rank) visible = false;
    if (!visible) continue;
    bool found = false;
    for (const auto& e : report.entries) found = found || (e.match && *e.match == spec);
    if (!found) report.missing.push_back(spec);
  }
  return report;
}

ConjectureScanResult conjecture_scan(std::size_t max_n, std::int64_t max_order, std::uint64_t budget,
                                     std::size_t threads) {
  ConjectureScanResult res;
  for (std::size_t n = 1; n <= max_n; ++n) {
    EnumerationBounds b;
    b.n = n;
    b.max_order = max_order;
    b.max_rank = n;
    b.exclude_pyramids = true;
    b.budget = budget > res.candidates_examined ? budget - res.candidates_examined : 0;
    b.threads = threads;
    EnumerationStats stats;
    const GroupFilter keep = [](const SimplexGroup& g) { return trinomial_terms(hstar_from_group(g)).has_value(); };
    const auto groups = enumerate_groups(b, keep, &stats);
    res.candidates_examined += stats.candidates_examined;
    for (const auto& g : groups) {
      ++res.groups_scanned;
      const HStarPolynomial h = hstar_from_group(g);
      const auto t = *trinomial_terms(h);
      const ConjectureHit hit{g, h, t.k, t.a, t.b};
      if (t.a + t.b + 1 == 9 * t.k) res.nine_halves_equality.push_back(hit);
      if (t.b < 2) continue;
      ++res.trinomials_checked;
      if (t.a + t.b + 1 > (4 * t.b + 4) * t.k && !res.counterexample) res.counterexample = hit;
    }
  }
  return res;
}

}  // namespace hstar
