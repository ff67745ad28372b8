#include "cdom/structure.hpp"

#include <algorithm>
#include <functional>

namespace cdom {

VertexClasses vertex_classes(const Graph& g) {
  const int n = g.order();
  VertexClasses c{VertexSet(n), VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == 1) c.pendants.insert(v);
    if (d > 1) c.internals.insert(v);
  }
  for (int v = 0; v < n; ++v) {
    if ((g.row(v) & c.pendants.bits()) != 0) c.supports.insert(v);
  }
  return c;
}

bool is_connected_induced(const Graph& g, std::uint64_t s) {
  if (s == 0) return false;
  std::uint64_t seen = s & (~s + 1);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= g.row(std::countr_zero(b));
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && is_connected_induced(g, VertexSet::full_mask(g.order()));
}

int component_count(const Graph& g) {
  std::uint64_t left = VertexSet::full_mask(g.order());
  int count = 0;
  while (left != 0) {
    std::uint64_t seen = left & (~left + 1);
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= g.row(std::countr_zero(b));
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    left &= ~seen;
    ++count;
  }
  return count;
}

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

bool is_unicyclic(const Graph& g) { return is_connected(g) && g.size() == g.order(); }

std::vector<int> find_unique_cycle(const Graph& g) {
  if (!is_unicyclic(g)) throw DomainError("find_unique_cycle requires a connected unicyclic graph");
  const int n = g.order();
  std::uint64_t alive = VertexSet::full_mask(n);
  // Strip pendant vertices until only the cycle is left.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (((alive >> v) & 1U) != 0 && std::popcount(g.row(v) & alive) <= 1) {
        alive &= ~(std::uint64_t{1} << v);
        changed = true;
      }
    }
  }
  const int length = std::popcount(alive);
  std::vector<int> cycle;
  int prev = -1;
  int cur = std::countr_zero(alive);
  for (int i = 0; i < length; ++i) {
    cycle.push_back(cur);
    std::uint64_t next = g.row(cur) & alive;
    if (prev >= 0) next &= ~(std::uint64_t{1} << prev);
    prev = cur;
    cur = std::countr_zero(next);
  }
  return cycle;
}

bool is_regular(const Graph& g, int r) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != r) return false;
  return true;
}

BlockDecomposition blocks(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out{{}, VertexSet(n), {}};
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  int timer = 0;

  // Hopcroft-Tarjan; recursion depth is bounded by n <= 64.
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    int children = 0;
    for (std::uint64_t b = g.row(u); b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (disc[static_cast<std::size_t>(v)] < 0) {
        ++children;
        stack.emplace_back(u, v);
        dfs(v, u);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
          if (parent >= 0 || children > 1) out.cutvertices.insert(u);
          VertexSet block(n);
          Edge e;
          do {
            e = stack.back();
            stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
          } while (e != Edge{u, v});
          out.blocks.push_back(block);
        }
      } else if (v != parent && disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
        stack.emplace_back(u, v);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
      }
    }
  };

  for (int v = 0; v < n; ++v) {
    if (disc[static_cast<std::size_t>(v)] >= 0) continue;
    if (g.degree(v) == 0) {
      disc[static_cast<std::size_t>(v)] = timer++;
      out.blocks.push_back(VertexSet(n, {v}));
      continue;
    }
    dfs(v, -1);
  }
  std::sort(out.blocks.begin(), out.blocks.end(), lex_less);
  for (const auto& b : out.blocks) out.cutvertices_in_block.push_back(b & out.cutvertices);
  return out;
}

bool is_block_graph(const Graph& g) {
  for (const auto& b : blocks(g).blocks) {
    for (int v : b.to_vector()) {
      if ((g.row(v) & b.bits()) != (b.bits() & ~(std::uint64_t{1} << v))) return false;
    }
  }
  return true;
}

}  // namespace cdom
