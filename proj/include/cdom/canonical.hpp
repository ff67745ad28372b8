#pragma once

#include <string>
#include <vector>

#include "cdom/graph.hpp"

namespace cdom {

struct CanonicalLabeling {
  // Vertex v of the input receives label `labels[v]` in `form`.
  std::vector<int> labels;
  Graph form;
};

// Canonical relabeling by equitable-partition refinement and exhaustive
// individualization. Twin vertices are branched on once. Intended for the
// small orders used by the corpora and catalog (n <= 12 or so).
CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);
// graph6 of the canonical form; equal strings <=> isomorphic graphs.
std::string canonical_graph6(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

namespace corpus {

// Pairwise non-isomorphic graphs in canonical form, sorted by graph6.
// Results are memoized; the functions are thread-safe.
const std::vector<Graph>& all_graphs(int n);        // n <= 8
const std::vector<Graph>& connected_graphs(int n);  // n <= 8
const std::vector<Graph>& trees(int n);             // n <= 16
const std::vector<Graph>& unicyclic_graphs(int n);  // 3 <= n <= 12

}  // namespace corpus

}  // namespace cdom
