#include "hstar/canonical.hpp"
#include "hstar/classify.hpp"
#include "hstar/correspondence.hpp"
#include "hstar/error.hpp"
#include "hstar/families.hpp"
#include "hstar/feasibility.hpp"
#include "hstar/io.hpp"
#include "hstar/random.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hstar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;
constexpr int kExitBudget = 3;

const char* kFamilyHelp =
    "Family grammar:\n"
    "  a3:K  a4-3k:K  a4-4k:K  a6:K  a8:K   trinomial case (a), K >= 2\n"
    "  b:K:A:L   k = 2^(L-3) A, m = 2^L, d = 2^(L-1) A - 1, L >= 3, (A,L) != (1,3)\n"
    "  c:K:A:L   k = 3^(L-2) A, m = 3^L, d = 3^(L-1) A - 1, L >= 2, (A,L) != (1,2)\n"
    "  white:K:M:A1,...,AK   cyclic group of (A1/M, (M-A1)/M, ...)\n"
    "  binomial:P:R:K        p-ary simplex code family, d solved from P, R, K";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << content;
}

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Text; }

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidSpec, "'" + item + "' is not an integer");
    }
  }
  return out;
}

void print_hstar(const HStarPolynomial& h, bool pyramid, Format fmt) {
  if (fmt == Format::Json) {
    nlohmann::json j{{"hstar", h.coeffs()}, {"volume", h.volume()}, {"degree", h.degree()}, {"pyramid", pyramid}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "h* = " << h.to_string() << ", vol " << h.volume() << ", degree " << h.degree() << ", "
              << (pyramid ? "pyramid" : "not pyramid") << '\n';
  }
}

// Both paths on one simplex; a disagreement is an OracleMismatch.
HStarPolynomial checked_hstar(const LatticeSimplex& s, bool& pyramid) {
  const SimplexGroup g = group_of_simplex(s);
  const HStarPolynomial by_group = hstar_from_group(g);
  const HStarPolynomial by_count = hstar_by_counting(s);
  if (by_group != by_count) {
    std::cerr << "group path:    " << by_group.to_string() << '\n'
              << "counting path: " << by_count.to_string() << '\n'
              << "simplex:\n"
              << write_simplex(s, Format::Text) << "group:\n"
              << write_group(g, Format::Text);
    throw Error(ErrorCode::OracleMismatch, "h* computations disagree");
  }
  pyramid = is_lattice_pyramid(g);
  return by_group;
}

struct HstarOptions {
  std::string input;
  bool group = false;
  std::size_t random = 0;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
};

int cmd_hstar(const HstarOptions& o, Format fmt) {
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.random; ++i) {
      const std::size_t dim = o.dim ? o.dim : 1 + i % 5;
      bool pyramid = false;
      checked_hstar(random_simplex(rng, dim, -4, 4), pyramid);
    }
    std::cout << o.random << " random simplices, seed " << o.seed << ": both paths agree\n";
    return kExitOk;
  }
  if (o.input.empty()) throw Error(ErrorCode::ParseError, "no input file");
  const std::string text = read_file(o.input);
  const Format in_fmt = sniff_format(text);
  bool is_group = o.group;
  if (in_fmt == Format::Json) is_group = nlohmann::json::parse(text).contains("den");
  if (is_group) {
    const SimplexGroup g = parse_group(text, in_fmt);
    print_hstar(hstar_from_group(g), is_lattice_pyramid(g), fmt);
  } else {
    bool pyramid = false;
    const HStarPolynomial h = checked_hstar(parse_simplex(text, in_fmt), pyramid);
    print_hstar(h, pyramid, fmt);
  }
  return kExitOk;
}

struct BuildOptions {
  std::string family;
  std::string out;
  bool canonical = false;
};

int cmd_build(const BuildOptions& o, Format fmt) {
  const auto colon = o.family.find(':');
  const std::string tag = o.family.substr(0, colon);
  std::vector<std::string> parts;
  {
    std::stringstream ss(o.family);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  }
  auto num = [&](std::size_t i) {
    const auto v = parse_list(parts.at(i));
    if (v.size() != 1) throw Error(ErrorCode::InvalidSpec, "'" + parts[i] + "' is not a single integer");
    return v[0];
  };

  std::optional<SimplexGroup> group;
  std::optional<LatticeSimplex> simplex;
  std::int64_t k = 0, m = 0, d = 0;
  if (tag == "white") {
    if (parts.size() != 4) throw Error(ErrorCode::InvalidSpec, "expected white:k:m:a1,...,ak");
    k = num(1);
    m = num(2);
    const auto a = parse_list(parts[3]);
    group = white_cayley_group(k, m, a);
    simplex = white_cayley_simplex(k, m, a);
    d = 2 * k - 1;
  } else if (tag == "binomial") {
    if (parts.size() != 4) throw Error(ErrorCode::InvalidSpec, "expected binomial:p:r:k");
    const std::int64_t p = num(1), r = num(2);
    k = num(3);
    const auto dd = binomial_family_dimension(p, r, k);
    if (!dd) throw Error(ErrorCode::NumericalConditionViolated, "no integer d solves the dimension relation");
    d = *dd;
    group = binomial_family(p, r, k, d);
    m = static_cast<std::int64_t>(group->order());
  } else {
    const FamilySpec spec = FamilySpec::parse(o.family);
    group = trinomial_family(spec);
    k = spec.k;
    m = spec.m();
    d = spec.d();
  }
  if (o.canonical) group = canonical_form(*group);
  if (!simplex || o.canonical) simplex = simplex_of_group(*group);

  std::cout << "k=" << k << " m=" << m << " d=" << d << '\n';
  const std::string group_text = write_group(*group, fmt);
  if (o.out.empty()) {
    std::cout << group_text;
  } else {
    const std::string ext = fmt == Format::Json ? ".json" : ".txt";
    write_file(o.out + ".group" + ext, group_text);
    write_file(o.out + ".simplex" + ext, write_simplex(*simplex, fmt));
    std::cout << "wrote " << o.out << ".group" << ext << " and " << o.out << ".simplex" << ext << '\n';
  }
  return kExitOk;
}

struct VerifyOptions {
  std::int64_t k = 2;
  std::int64_t d = 5;
  std::int64_t max_order = 0;
  std::size_t max_rank = 0;
  std::string orders;
  std::int64_t elementary = 0;
  std::uint64_t budget = 100'000'000;
  std::size_t threads = 0;
  std::string out;
};

int cmd_verify(const VerifyOptions& o, Format fmt) {
  EnumerationBounds b;
  b.max_order = o.max_order ? o.max_order : 9 * o.k;
  if (o.elementary) b.elementary_prime = o.elementary;
  b.max_rank = o.max_rank ? o.max_rank : (o.elementary ? static_cast<std::size_t>(o.d + 1) : 2);
  if (!o.orders.empty()) b.allowed_orders = parse_list(o.orders);
  b.budget = o.budget;
  b.threads = o.threads;
  const ClassificationReport report = verify_classification(o.k, o.d, b);
  if (fmt == Format::Json)
    std::cout << report.json_lines();
  else
    std::cout << report.summary();
  if (!o.out.empty()) write_file(o.out, report.json_lines());
  return report.clean() ? kExitOk : kExitFinding;
}

int cmd_feasible(const std::string& kind, const std::vector<std::int64_t>& args) {
  auto need = [&](std::size_t n, const char* usage) {
    if (args.size() != n) throw Error(ErrorCode::InvalidSpec, std::string("usage: feasible ") + usage);
  };
  Verdict v;
  std::string note;
  if (kind == "scott") {
    need(2, "scott A B");
    v = scott_check(args[0], args[1]);
  } else if (kind == "degree2") {
    need(2, "degree2 A B");
    v = degree2_check(args[0], args[1]);
  } else if (kind == "binomial") {
    need(3, "binomial K D A");
    v = binomial_check(args[0], args[1], args[2]);
  } else if (kind == "gorenstein2") {
    need(2, "gorenstein2 M D");
    v = gorenstein_deg2_check(args[0], args[1]);
  } else if (kind == "trinomial") {
    need(3, "trinomial K M D");
    const TrinomialVerdict t = trinomial_check(args[0], args[1], args[2]);
    v = t;
    if (t.differs())
      note = std::string("note: the five-condition list read literally says ") +
             (t.literal_reading ? "yes" : "no");
  } else {
    throw Error(ErrorCode::UnknownKind, "unknown kind '" + kind + "' (scott, degree2, binomial, gorenstein2, trinomial)");
  }
  std::cout << (v.feasible ? "yes" : "no") << " (" << v.rule << ")\n";
  if (!note.empty()) std::cout << note << '\n';
  return kExitOk;
}

int cmd_conjecture(std::size_t max_n, std::int64_t max_order, std::uint64_t budget, std::size_t threads) {
  const ConjectureScanResult r = conjecture_scan(max_n, max_order, budget, threads);
  std::cout << "scope: n <= " << max_n << ", order <= " << max_order << '\n'
            << "candidates examined: " << r.candidates_examined << '\n'
            << "trinomial h* groups: " << r.groups_scanned << '\n'
            << "with b >= 2: " << r.trinomials_checked << '\n';
  int status = kExitOk;
  for (const auto& hit : r.nine_halves_equality) {
    std::cout << "vol = 9k: " << hit.hstar.to_string() << " (k=" << hit.k << ")\n";
    if (hit.k != 1) status = kExitFinding;
  }
  if (r.counterexample) {
    std::cout << "counterexample: " << r.counterexample->hstar.to_string() << '\n'
              << write_group(r.counterexample->group, Format::Text);
    return kExitFinding;
  }
  std::cout << "no counterexample\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ehrhart h*-polynomials of lattice simplices via their finite abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  HstarOptions ho;
  auto* hs = app.add_subcommand("hstar", "h* of a simplex (both methods) or of a group file");
  hs->add_option("input", ho.input, "Simplex or group file");
  hs->add_flag("--group", ho.group, "Read the input as a group");
  hs->add_option("--random", ho.random, "Check N seeded random simplices instead of a file");
  hs->add_option("--dim", ho.dim, "Dimension of random simplices (default cycles 1..5)");
  hs->add_option("--seed", ho.seed, "Random seed");

  BuildOptions bo;
  auto* bs = app.add_subcommand("build", "Construct a family group and a realizing simplex");
  bs->footer(kFamilyHelp);
  bs->add_option("family", bo.family, "Family spec")->required();
  bs->add_option("--out", bo.out, "Output prefix; files PREFIX.group.* and PREFIX.simplex.*");
  bs->add_flag("--canonical", bo.canonical, "Emit the permutation-canonical form");

  VerifyOptions vo;
  auto* vs = app.add_subcommand("verify", "Exhaustively check the trinomial classification at (k, d)");
  vs->add_option("--k", vo.k, "Half the h* degree")->required();
  vs->add_option("--d", vo.d, "Dimension")->required();
  vs->add_option("--max-order", vo.max_order, "Largest group order (default 9k)");
  vs->add_option("--max-rank", vo.max_rank, "Largest number of invariant factors (default 2, or d+1 with --elementary)");
  vs->add_option("--orders", vo.orders, "Comma-separated allowed element orders");
  vs->add_option("--elementary", vo.elementary, "Only elementary abelian P-groups");
  vs->add_option("--budget", vo.budget, "Candidate budget");
  vs->add_option("--threads", vo.threads, "Worker threads (0 = all cores)");
  vs->add_option("--out", vo.out, "Write the JSON-lines report here");

  std::string kind;
  std::vector<std::int64_t> fargs;
  auto* fs = app.add_subcommand("feasible", "Realizability predicates: scott, degree2, binomial, gorenstein2, trinomial");
  fs->add_option("kind", kind, "Predicate")->required();
  fs->add_option("params", fargs, "Integer parameters")->required();

  std::size_t max_n = 6;
  std::int64_t conj_order = 12;
  std::uint64_t conj_budget = 100'000'000;
  std::size_t conj_threads = 0;
  auto* cs = app.add_subcommand("conjecture", "Scan small groups for a + b + 1 > (4b+4) k");
  cs->add_option("--max-n", max_n, "Largest number of coordinates");
  cs->add_option("--max-order", conj_order, "Largest group order");
  cs->add_option("--budget", conj_budget, "Candidate budget");
  cs->add_option("--threads", conj_threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Format fmt = parse_format(format);
  try {
    if (*hs) return cmd_hstar(ho, fmt);
    if (*bs) return cmd_build(bo, fmt);
    if (*vs) return cmd_verify(vo, fmt);
    if (*fs) return cmd_feasible(kind, fargs);
    if (*cs) return cmd_conjecture(max_n, conj_order, conj_budget, conj_threads);
  } catch (const BudgetExceededError& e) {
    std::cerr << e.what() << " (examined " << e.candidates_examined() << ", found " << e.groups_found() << ")\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == ErrorCode::OracleMismatch ? kExitFinding : kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ParseError: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
