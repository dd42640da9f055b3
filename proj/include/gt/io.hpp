#pragma once

#include "gt/triple.hpp"

#include <string>
#include <vector>

namespace gt {

/// Parses the .gtriple text format:
///   gtriple 1
///   n <N>
///   E1 / E2 / E3 section headers, each followed by "<u> <v>" edge lines.
/// Lines starting with '#' are comments.  In E1/E2 the rule u < v applies;
/// in E3, u indexes V1 and v indexes V2.
Triple parse_triple(const std::string &text);

/// Canonical form: LF endings, sections in order, edges sorted
/// lexicographically.  parse_triple(serialize_triple(t)) == t.
std::string serialize_triple(const Triple &t);

/// Packing certificate line: "f(0),f(1),...,f(n-1)".
std::vector<int> parse_packing(const std::string &line);
std::string serialize_packing(const std::vector<int> &map);

} // namespace gt
