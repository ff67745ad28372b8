#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "cdom/graph.hpp"

namespace cdom {

// graph6: one graph per line in the de-facto standard bit packing.
// An optional ">>graph6<<" prefix is accepted. Errors carry the byte offset.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// Edge list: first token n, then one "u v" pair per line, 0-indexed.
// '#' starts a comment. Duplicate edges collapse. Errors carry the line number.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

struct Graph6Stream {
  std::vector<Graph> graphs;
  // Line number and message for each entry that failed to parse.
  std::vector<std::pair<std::size_t, std::string>> rejected;
};

// Reads every non-blank line; malformed lines are collected, not thrown.
Graph6Stream read_graph6_stream(std::istream& in);

}  // namespace cdom
