#include "cdom/graph.hpp"

#include <algorithm>
#include <string>

namespace cdom {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw DomainError("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

Graph::Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  edges_ = twice / 2;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw DomainError("edge endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return Graph(std::move(rows));
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint64_t mask = VertexSet::full_mask(n);
  for (int u = 0; u < n; ++u) {
    const std::uint64_t r = rows[static_cast<std::size_t>(u)];
    if ((r & ~mask) != 0) throw DomainError("adjacency row has a bit beyond the vertex count");
    if (((r >> u) & 1U) != 0) throw DomainError("loop at vertex " + std::to_string(u));
    for (std::uint64_t b = r; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (((rows[static_cast<std::size_t>(v)] >> u) & 1U) == 0) {
        throw DomainError("adjacency is not symmetric");
      }
    }
  }
  return Graph(std::move(rows));
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (auto r : rows_) best = std::max(best, std::popcount(r));
  return best;
}

std::uint64_t Graph::closed_neighborhood_bits(std::uint64_t set) const noexcept {
  std::uint64_t covered = set;
  for (std::uint64_t b = set; b != 0; b &= b - 1) {
    covered |= rows_[static_cast<std::size_t>(std::countr_zero(b))];
  }
  return covered;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < order(); ++u) {
    for (std::uint64_t b = row(u) & ~VertexSet::full_mask(u + 1); b != 0; b &= b - 1) {
      out.emplace_back(u, std::countr_zero(b));
    }
  }
  return out;
}

Graph Graph::complement() const {
  const std::uint64_t mask = VertexSet::full_mask(order());
  std::vector<std::uint64_t> rows(rows_.size());
  for (int v = 0; v < order(); ++v) {
    rows[static_cast<std::size_t>(v)] = ~row(v) & mask & ~(std::uint64_t{1} << v);
  }
  return Graph(std::move(rows));
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw DomainError("permutation size mismatch");
  std::vector<std::uint64_t> rows(rows_.size(), 0);
  for (int u = 0; u < order(); ++u) {
    std::uint64_t r = 0;
    for (std::uint64_t b = row(u); b != 0; b &= b - 1) {
      r |= std::uint64_t{1} << perm[static_cast<std::size_t>(std::countr_zero(b))];
    }
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = r;
  }
  return Graph(std::move(rows));
}

Graph Graph::induced_subgraph(const VertexSet& keep) const {
  const auto kept = keep.to_vector();
  std::vector<int> index(static_cast<std::size_t>(order()), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  std::vector<std::uint64_t> rows(kept.size(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::uint64_t b = row(kept[i]) & keep.bits(); b != 0; b &= b - 1) {
      rows[i] |= std::uint64_t{1} << index[static_cast<std::size_t>(std::countr_zero(b))];
    }
  }
  return Graph(std::move(rows));
}

}  // namespace cdom
