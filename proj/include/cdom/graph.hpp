#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cdom/vertex_set.hpp"

namespace cdom {

using Edge = std::pair<int, int>;

// Simple undirected graph on at most 64 vertices. Row v of the adjacency
// is the bit set N(v). Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse; loops and out-of-range endpoints throw DomainError.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // Rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<std::uint64_t> rows);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  int size() const noexcept { return edges_; }

  std::uint64_t row(int v) const { return rows_.at(static_cast<std::size_t>(v)); }
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }

  bool has_edge(int u, int v) const { return ((row(u) >> v) & 1U) != 0; }
  int degree(int v) const { return std::popcount(row(v)); }
  int max_degree() const noexcept;

  VertexSet neighbors(int v) const { return {order(), row(v)}; }
  VertexSet closed_neighborhood(int v) const {
    return {order(), row(v) | (std::uint64_t{1} << v)};
  }
  // N[S]: union of closed neighborhoods.
  std::uint64_t closed_neighborhood_bits(std::uint64_t set) const noexcept;

  VertexSet vertices() const { return VertexSet::full(order()); }

  // Edges as (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const;

  Graph complement() const;
  // Vertex v of this graph becomes perm[v] in the result.
  Graph relabeled(std::span<const int> perm) const;
  Graph induced_subgraph(const VertexSet& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<std::uint64_t> rows);

  std::vector<std::uint64_t> rows_;
  int edges_ = 0;
};

}  // namespace cdom
