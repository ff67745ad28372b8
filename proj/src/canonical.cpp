#include "cdom/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>

#include "cdom/graph_io.hpp"
#include "cdom/structure.hpp"

namespace cdom {

namespace {

using Partition = std::vector<std::vector<int>>;

// Splits cells by (current cell, neighbour count in every cell) until stable.
// Cell order depends only on the signature values, so the result is
// equivariant under relabeling.
void refine(const Graph& g, Partition& cells) {
  const int n = g.order();
  for (;;) {
    std::vector<std::uint64_t> masks;
    masks.reserve(cells.size());
    for (const auto& c : cells) {
      std::uint64_t m = 0;
      for (int v : c) m |= std::uint64_t{1} << v;
      masks.push_back(m);
    }
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      for (int v : cells[ci]) {
        auto& k = keys[static_cast<std::size_t>(v)];
        k.reserve(cells.size() + 1);
        k.push_back(static_cast<int>(ci));
        for (auto m : masks) k.push_back(std::popcount(g.row(v) & m));
      }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
    });
    Partition next;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || keys[static_cast<std::size_t>(order[i])] != keys[static_cast<std::size_t>(order[i - 1])]) {
        next.emplace_back();
      }
      next.back().push_back(order[i]);
    }
    for (auto& c : next) std::sort(c.begin(), c.end());
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

bool twins(const Graph& g, int u, int v) {
  const std::uint64_t bu = std::uint64_t{1} << u;
  const std::uint64_t bv = std::uint64_t{1} << v;
  return (g.row(u) & ~bv) == (g.row(v) & ~bu);
}

struct Search {
  const Graph& g;
  std::optional<std::vector<std::uint64_t>> best_rows;
  std::vector<int> best_labels;

  void leaf(const Partition& cells) {
    const int n = g.order();
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cells.size(); ++i) labels[static_cast<std::size_t>(cells[i][0])] = static_cast<int>(i);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      std::uint64_t r = 0;
      for (std::uint64_t b = g.row(u); b != 0; b &= b - 1) {
        r |= std::uint64_t{1} << labels[static_cast<std::size_t>(std::countr_zero(b))];
      }
      rows[static_cast<std::size_t>(labels[static_cast<std::size_t>(u)])] = r;
    }
    if (!best_rows || rows > *best_rows) {
      best_rows = std::move(rows);
      best_labels = std::move(labels);
    }
  }

  void run(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int> cell = *target;
    std::vector<int> tried;
    for (int v : cell) {
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
      tried.push_back(v);
      Partition next;
      next.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != ti) {
          next.push_back(cells[i]);
          continue;
        }
        next.push_back({v});
        std::vector<int> rest;
        for (int w : cell)
          if (w != v) rest.push_back(w);
        next.push_back(std::move(rest));
      }
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {{}, g};
  Search s{g, std::nullopt, {}};
  Partition start(1);
  for (int v = 0; v < g.order(); ++v) start[0].push_back(v);
  s.run(std::move(start));
  return {s.best_labels, Graph::from_rows(std::move(*s.best_rows))};
}

Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace corpus {

namespace {

using Catalog = std::map<std::string, Graph>;

std::vector<Graph> to_sorted_vector(const Catalog& c) {
  std::vector<Graph> out;
  out.reserve(c.size());
  for (const auto& [key, g] : c) out.push_back(g);
  return out;
}

Graph with_new_vertex(const Graph& g, std::uint64_t neighbours) {
  std::vector<Edge> e = g.edges();
  const int n = g.order();
  for (std::uint64_t b = neighbours; b != 0; b &= b - 1) e.emplace_back(std::countr_zero(b), n);
  return Graph::from_edges(n + 1, e);
}

struct Cache {
  std::mutex mu;
  std::map<int, std::vector<Graph>> all, connected, trees, unicyclic;
};

Cache& cache() {
  static Cache c;
  return c;
}

const std::vector<Graph>& all_locked(Cache& c, int n) {
  auto it = c.all.find(n);
  if (it != c.all.end()) return it->second;
  std::vector<Graph> built;
  if (n == 0) {
    built.push_back(Graph::from_edges(0, {}));
  } else {
    const auto& smaller = all_locked(c, n - 1);
    Catalog found;
    for (const auto& g : smaller) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
        auto form = canonical_form(with_new_vertex(g, nb));
        found.emplace(to_graph6(form), std::move(form));
      }
    }
    built = to_sorted_vector(found);
  }
  return c.all.emplace(n, std::move(built)).first->second;
}

const std::vector<Graph>& trees_locked(Cache& c, int n) {
  auto it = c.trees.find(n);
  if (it != c.trees.end()) return it->second;
  std::vector<Graph> built;
  if (n == 1) {
    built.push_back(Graph::from_edges(1, {}));
  } else {
    Catalog found;
    for (const auto& t : trees_locked(c, n - 1)) {
      for (int v = 0; v < n - 1; ++v) {
        auto form = canonical_form(with_new_vertex(t, std::uint64_t{1} << v));
        found.emplace(to_graph6(form), std::move(form));
      }
    }
    built = to_sorted_vector(found);
  }
  return c.trees.emplace(n, std::move(built)).first->second;
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
  if (n < 0 || n > 8) throw DomainError("all_graphs supports 0 <= n <= 8");
  auto& c = cache();
  std::lock_guard lock(c.mu);
  return all_locked(c, n);
}

const std::vector<Graph>& connected_graphs(int n) {
  if (n < 1 || n > 8) throw DomainError("connected_graphs supports 1 <= n <= 8");
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto it = c.connected.find(n);
  if (it != c.connected.end()) return it->second;
  std::vector<Graph> out;
  for (const auto& g : all_locked(c, n))
    if (is_connected(g)) out.push_back(g);
  return c.connected.emplace(n, std::move(out)).first->second;
}

const std::vector<Graph>& trees(int n) {
  if (n < 1 || n > 16) throw DomainError("trees supports 1 <= n <= 16");
  auto& c = cache();
  std::lock_guard lock(c.mu);
  return trees_locked(c, n);
}

const std::vector<Graph>& unicyclic_graphs(int n) {
  if (n < 3 || n > 12) throw DomainError("unicyclic_graphs supports 3 <= n <= 12");
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto it = c.unicyclic.find(n);
  if (it != c.unicyclic.end()) return it->second;
  Catalog found;
  for (const auto& t : trees_locked(c, n)) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (t.has_edge(u, v)) continue;
        auto e = t.edges();
        e.emplace_back(u, v);
        auto form = canonical_form(Graph::from_edges(n, e));
        found.emplace(to_graph6(form), std::move(form));
      }
    }
  }
  return c.unicyclic.emplace(n, to_sorted_vector(found)).first->second;
}

}  // namespace corpus

}  // namespace cdom
