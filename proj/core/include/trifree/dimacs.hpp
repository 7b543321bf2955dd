#pragma once

#include "trifree/format_error.hpp"
#include "trifree/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace trifree {

/// DIMACS edge format: "p edge n m" followed by 1-indexed "e u v" lines.
/// Each comment becomes a "c" line ahead of the problem line.
void write_dimacs(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
std::string to_dimacs(const Graph& g, const std::vector<std::string>& comments = {});

/// Throws FormatError naming the offending line.
Graph read_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);

}  // namespace trifree
