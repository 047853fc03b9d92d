#include "hstar/error.hpp"
#include "hstar/io.hpp"

#include <json.hpp>

#include <sstream>

namespace hstar {

std::vector<std::int64_t> parse_int_line(std::string_view line, std::size_t line_no);
std::vector<std::string_view> content_lines(std::string_view text);

std::string write_group(const SimplexGroup& g, Format format) {
  if (format == Format::Json) {
    nlohmann::json j;
    j["len"] = g.ambient_len();
    j["den"] = g.denominator();
    j["generators"] = g.generators();
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << g.ambient_len() << ' ' << g.denominator() << '\n';
  for (const auto& gen : g.generators()) {
    for (std::size_t i = 0; i < gen.size(); ++i) os << (i ? " " : "") << gen[i];
    os << '\n';
  }
  return os.str();
}

SimplexGroup parse_group(std::string_view text, Format format, std::size_t cap) {
  std::size_t n = 0;
  std::int64_t q = 0;
  std::vector<std::vector<std::int64_t>> gens;
  if (format == Format::Json) {
    try {
      const auto j = nlohmann::json::parse(text);
      n = j.at("len").get<std::size_t>();
      q = j.at("den").get<std::int64_t>();
      gens = j.at("generators").get<std::vector<std::vector<std::int64_t>>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  } else {
    const auto lines = content_lines(text);
    if (lines.empty()) throw Error(ErrorCode::ParseError, "missing \"n q\" header line");
    const auto header = parse_int_line(lines.front(), 1);
    if (header.size() != 2 || header[0] < 1)
      throw Error(ErrorCode::ParseError, "header must be \"n q\" with n >= 1");
    n = static_cast<std::size_t>(header[0]);
    q = header[1];
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      gens.push_back(parse_int_line(lines[i], i + 1));
    }
  }
  if (q < 1) throw Error(ErrorCode::ParseError, "denominator must be positive");
  for (const auto& g : gens) {
    if (g.size() != n)
      throw Error(ErrorCode::ParseError, "generator with " + std::to_string(g.size()) + " entries, expected " +
                                             std::to_string(n));
    for (auto v : g)
      if (v < 0 || v >= q) throw Error(ErrorCode::ParseError, "generator entries must lie in [0, q)");
  }
  return SimplexGroup::generated(n, q, gens, cap);
}

}  // namespace hstar
