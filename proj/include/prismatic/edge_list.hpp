#pragma once

#include <iosfwd>
#include <string>

#include "prismatic/graph.hpp"

namespace prismatic {

// Shared edge-list text format:
//   first line `n m`, then m lines `u v` with 0-based indices, `#`-prefixed
//   comment lines ignored. Emission is bit-exact: edges sorted
//   lexicographically with u < v, LF line endings.
//
// Generated graphs carry their per-vertex labels in a comment block directly
// after the header:
//   # labels
//   # <v> <label>
// The block is ordinary comments to any other reader.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

std::string to_edge_list(const Graph& g);

}  // namespace prismatic
