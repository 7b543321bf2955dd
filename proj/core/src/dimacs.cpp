#include "trifree/dimacs.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace trifree {

void write_dimacs(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_dimacs(out, g, comments);
  return out.str();
}

Graph read_dimacs(std::istream& in) {
  std::optional<Graph> g;
  std::size_t declared_edges = 0;
  std::size_t seen_edges = 0;
  std::string line;
  std::size_t number = 0;
  auto fail = [&](const std::string& what) -> FormatError {
    return FormatError("line " + std::to_string(number) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      long long n = -1;
      long long m = -1;
      if (g) throw fail("second problem line");
      if (!(fields >> format >> n >> m) || format != "edge" || n < 0 || m < 0) throw fail("expected 'p edge n m'");
      g.emplace(static_cast<std::size_t>(n));
      declared_edges = static_cast<std::size_t>(m);
    } else if (tag == "e") {
      if (!g) throw fail("edge before the problem line");
      long long u = 0;
      long long v = 0;
      if (!(fields >> u >> v)) throw fail("expected 'e u v'");
      const auto n = static_cast<long long>(g->size());
      if (u < 1 || v < 1 || u > n || v > n) throw fail("vertex out of range");
      if (u == v) throw fail("self-loop");
      g->add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
      ++seen_edges;
    } else {
      throw fail("unknown line type '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing token '" + extra + "'");
  }
  if (!g) throw FormatError("missing problem line");
  if (seen_edges != declared_edges) {
    throw FormatError("problem line declares " + std::to_string(declared_edges) + " edges, found " +
                      std::to_string(seen_edges));
  }
  return std::move(*g);
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

}  // namespace trifree
