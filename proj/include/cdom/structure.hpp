#pragma once

#include <vector>

#include "cdom/graph.hpp"

namespace cdom {

struct VertexClasses {
  VertexSet pendants;   // degree 1
  VertexSet supports;   // adjacent to a pendant
  VertexSet internals;  // degree > 1
};

// Isolated vertices belong to none of the three classes.
VertexClasses vertex_classes(const Graph& g);

bool is_connected(const Graph& g);
// Connectivity of the subgraph induced by `s`; the empty set is not connected.
bool is_connected_induced(const Graph& g, std::uint64_t s);
int component_count(const Graph& g);

bool is_tree(const Graph& g);
// Connected with m = n.
bool is_unicyclic(const Graph& g);
// Vertices of the unique cycle in traversal order, starting from the smallest
// cycle vertex and stepping to its smaller cycle neighbour first.
std::vector<int> find_unique_cycle(const Graph& g);
bool is_regular(const Graph& g, int r);

struct BlockDecomposition {
  // Maximal biconnected subgraphs (bridges and isolated vertices included),
  // sorted by their vertex lists.
  std::vector<VertexSet> blocks;
  VertexSet cutvertices;
  // cutvertices_in_block[i] = blocks[i] & cutvertices.
  std::vector<VertexSet> cutvertices_in_block;
};

BlockDecomposition blocks(const Graph& g);
bool is_block_graph(const Graph& g);

}  // namespace cdom
