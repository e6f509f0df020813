#pragma once

#include <filesystem>
#include <iosfwd>

#include "netrob/graph.hpp"

namespace netrob {

// Edge-list text format:
//   # {directed|undirected} N M      optional header, must precede any edge
//   u v                              0-based ids, whitespace separated
// Blank lines and other '#' lines are ignored. Without a header the graph is
// undirected (unless `default_directed`) with N = 1 + largest id seen.

Graph read_edge_list(std::istream& in, bool default_directed = false);
Graph read_edge_list(const std::filesystem::path& path, bool default_directed = false);

void write_edge_list(std::ostream& out, const Graph& graph);
void write_edge_list(const std::filesystem::path& path, const Graph& graph);

}  // namespace netrob
