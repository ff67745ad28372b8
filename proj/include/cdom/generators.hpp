#pragma once

#include "cdom/graph.hpp"

namespace cdom::gen {

// Edges {i, i+1}.
Graph path(int n);
// path(n) plus {n-1, 0}; n >= 3.
Graph cycle(int n);
Graph complete(int n);
// K_{1,n-1} with vertex 0 as the center.
Graph star(int n);
// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
// K_{k x 2}: K_{2k} minus the perfect matching {2i, 2i+1}; k >= 2.
Graph cocktail_party(int k);

}  // namespace cdom::gen
