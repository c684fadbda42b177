#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twopath/digraph.hpp"

namespace twopath {

// Text format:
//   n m
//   u v        (m lines, u follows v, 0-based)
// Lines whose first non-blank character is '#' are comments anywhere.
DiGraph read_graph(std::istream& in);
DiGraph read_graph_file(const std::string& path);

// Edges are written sorted by (u, v). Each comment line is emitted as "# <text>"
// before the header.
void write_graph(std::ostream& out, const DiGraph& g, const std::vector<std::string>& comments = {});
void write_graph_file(const std::string& path, const DiGraph& g,
                      const std::vector<std::string>& comments = {});

}  // namespace twopath
