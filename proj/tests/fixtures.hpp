#pragma once

#include <cstdint>
#include <vector>

#include "cdom/graph.hpp"

namespace cdom::fixtures {

// Vertex names of the 10-vertex tree from the worked example.
enum TreeVertex { A, B, C, D, E, F, G, H, I, J };

inline Graph example_tree() {
  return Graph::from_edges(10, {{A, B}, {B, C}, {B, D}, {D, E}, {E, F}, {F, G}, {G, H}, {G, J}, {H, I}});
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// Triangular prism, the complement of C_6.
inline Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

// Two triangles sharing vertex 2.
inline Graph bowtie() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

// k triangles sharing vertex 0.
inline Graph triangle_star(int k) {
  std::vector<Edge> e;
  for (int t = 0; t < k; ++t) {
    const int a = 1 + 2 * t;
    e.emplace_back(0, a);
    e.emplace_back(0, a + 1);
    e.emplace_back(a, a + 1);
  }
  return Graph::from_edges(1 + 2 * k, e);
}

// Triangle 0-1-2 with pendant 3 on vertex 0.
inline Graph paw() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }

// 4-cycle 0..3 with pendant 4 on vertex 0.
inline Graph c4_with_pendant() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}); }

// Deterministic xorshift for hand-rolled property tests.
struct Xorshift {
  std::uint64_t state;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline Graph random_graph(Xorshift& rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform(0, 1) < p) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace cdom::fixtures
