#pragma once

#include <iosfwd>
#include <string>

#include "sosperfect/graph.hpp"

namespace sosperfect {

/// Edge-list text format:
///
///     # optional comment lines
///     n m
///     i j        (m lines, 0-indexed)
///
/// '#' starts a comment anywhere on a line. Throws std::invalid_argument on
/// malformed input (bad header, wrong edge count, i == j, out-of-range).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
/// Writes "n m" and then edges with i < j in row-major order.
void write_edge_list(std::ostream& out, const Graph& g);

/// Undirected DOT with default styling.
void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");

}  // namespace sosperfect
