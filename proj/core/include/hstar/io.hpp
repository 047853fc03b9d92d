#pragma once

#include "hstar/group.hpp"
#include "hstar/simplex.hpp"

#include <string>
#include <string_view>

namespace hstar {

enum class Format { Text, Json };

/// Text: one vertex per line, coordinates separated by single spaces, each
/// line ending in '\n'. Lines starting with '#' are skipped on input.
/// JSON: {"dim":d,"vertices":[[...],...]}.
std::string write_simplex(const LatticeSimplex& s, Format format);
LatticeSimplex parse_simplex(std::string_view text, Format format);

/// Text: "n q" on the first line, then one generator per line as
/// q-scaled integers. JSON: {"den":q,"generators":[[...]],"len":n}.
/// Generators are written exactly as the group holds them.
std::string write_group(const SimplexGroup& g, Format format);
SimplexGroup parse_group(std::string_view text, Format format, std::size_t cap = SimplexGroup::kDefaultCap);

/// JSON if the first non-blank character is '{', text otherwise.
Format sniff_format(std::string_view text);

}  // namespace hstar
