#include "hstar/error.hpp"
#include "hstar/io.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

namespace hstar {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace

// Shared with group_io.cpp.
std::vector<std::int64_t> parse_int_line(std::string_view line, std::size_t line_no) {
  std::vector<std::int64_t> out;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::int64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t'))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected integers, got '" +
                                             std::string(line) + "'");
    out.push_back(v);
    p = next;
  }
  return out;
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split_lines(text))
    if (line.empty() || line.front() != '#') out.push_back(line);
  return out;
}

Format sniff_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? Format::Json : Format::Text;
  }
  return Format::Text;
}

std::string write_simplex(const LatticeSimplex& s, Format format) {
  if (format == Format::Json) {
    nlohmann::json j;
    j["dim"] = s.dim();
    j["vertices"] = s.vertices();
    return j.dump() + "\n";
  }
  std::ostringstream os;
  for (const auto& v : s.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << '\n';
  }
  return os.str();
}

LatticeSimplex parse_simplex(std::string_view text, Format format) {
  if (format == Format::Json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      const auto dim = j.at("dim").get<std::size_t>();
      auto vertices = j.at("vertices").get<std::vector<Point>>();
      if (vertices.size() != dim + 1)
        throw Error(ErrorCode::ParseError, "\"dim\" is " + std::to_string(dim) + " but " +
                                               std::to_string(vertices.size()) + " vertices were given");
      return LatticeSimplex(std::move(vertices));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  std::vector<Point> vertices;
  std::size_t line_no = 0;
  for (auto line : content_lines(text)) vertices.push_back(parse_int_line(line, ++line_no));
  if (vertices.empty()) throw Error(ErrorCode::ParseError, "no vertices");
  return LatticeSimplex(std::move(vertices));
}

}  // namespace hstar
