#pragma once

#include <iosfwd>
#include <string>

#include "ladderlab/graph.hpp"

namespace ladderlab {

// Edge-list text format:
//   <n> <m>
//   m lines "<u> <v>" with 0 <= u < v < n
//   optional "l <v> <text>" label lines after the edges
// Lines starting with '#' are ignored anywhere.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Highlighted vertices (when given) are drawn filled.
void write_dot(std::ostream& out, const Graph& g, const std::vector<Vertex>& highlight = {});

}  // namespace ladderlab
