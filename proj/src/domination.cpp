#include "cdom/domination.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "cdom/structure.hpp"

namespace cdom {

std::string_view to_string(DominationKind kind) noexcept {
  return kind == DominationKind::dominating ? "dominating" : "connected-dominating";
}

namespace {

using Bits = std::uint64_t;

constexpr Bits bit(int v) { return Bits{1} << v; }

// Closed neighbourhood rows plus the quantities the searches prune on.
struct Context {
  explicit Context(const Graph& g)
      : graph(g), n(g.order()), all(VertexSet::full_mask(g.order())), spread(g.max_degree() + 1) {
    closed.resize(static_cast<std::size_t>(n));
    last_dominator.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      closed[static_cast<std::size_t>(v)] = g.row(v) | bit(v);
      last_dominator[static_cast<std::size_t>(v)] = 63 - std::countl_zero(closed[static_cast<std::size_t>(v)]);
    }
  }

  Bits cover(Bits s) const {
    Bits c = 0;
    for (Bits b = s; b != 0; b &= b - 1) c |= closed[static_cast<std::size_t>(std::countr_zero(b))];
    return c;
  }

  const Graph& graph;
  int n;
  Bits all;
  int spread;  // max |N[v]|
  std::vector<Bits> closed;
  std::vector<int> last_dominator;  // largest index in N[v]
};

int lower_bound(const Context& c) { return (c.n + c.spread - 1) / c.spread; }

// Branch on the lowest uncovered vertex: some member of its closed
// neighbourhood must be chosen.
bool dominating_within(const Context& c, Bits covered, int budget) {
  const Bits uncovered = c.all & ~covered;
  if (uncovered == 0) return true;
  if (budget == 0 || std::popcount(uncovered) > budget * c.spread) return false;
  const int u = std::countr_zero(uncovered);
  for (Bits b = c.closed[static_cast<std::size_t>(u)]; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    if (dominating_within(c, covered | c.closed[static_cast<std::size_t>(v)], budget - 1)) return true;
  }
  return false;
}

// Grows connected sets whose smallest vertex is the root. `frontier` holds
// addable neighbours of the set; `allowed` excludes vertices branched out.
bool connected_within(const Context& c, Bits set, Bits covered, Bits frontier, Bits allowed, int budget) {
  const Bits uncovered = c.all & ~covered;
  if (uncovered == 0) return true;
  if (budget == 0 || frontier == 0) return false;
  if (std::popcount(uncovered) > budget * c.spread) return false;
  // Every uncovered vertex needs a still-allowed dominator outside the set.
  const Bits candidates = allowed & ~set;
  for (Bits b = uncovered; b != 0; b &= b - 1) {
    if ((c.closed[static_cast<std::size_t>(std::countr_zero(b))] & candidates) == 0) return false;
  }
  const int w = std::countr_zero(frontier);
  const Bits grown = set | bit(w);
  if (connected_within(c, grown, covered | c.closed[static_cast<std::size_t>(w)],
                       (frontier | c.graph.row(w)) & allowed & ~grown, allowed, budget - 1)) {
    return true;
  }
  return connected_within(c, set, covered, frontier & ~bit(w), allowed & ~bit(w), budget);
}

bool connected_dominating_exists(const Context& c, int k) {
  for (int root = 0; root < c.n; ++root) {
    const Bits allowed = c.all & ~(bit(root) - 1);
    if (connected_within(c, bit(root), c.closed[static_cast<std::size_t>(root)],
                         c.graph.row(root) & allowed, allowed, k - 1)) {
      return true;
    }
  }
  return false;
}

Bits above(const Context& c, int v) { return v >= 63 ? 0 : c.all & (~Bits{0} << (v + 1)); }

// A disconnected partial set can still become connected only if each of its
// components touches a vertex that may be picked later.
bool components_can_join(const Context& c, Bits chosen, int last, int left) {
  if (is_connected_induced(c.graph, chosen)) return true;
  if (left == 0) return false;
  const Bits future = above(c, last);
  Bits rest = chosen;
  while (rest != 0) {
    Bits comp = rest & (~rest + 1);
    Bits frontier = comp;
    while (frontier != 0) {
      Bits next = 0;
      for (Bits b = frontier; b != 0; b &= b - 1) next |= c.graph.row(std::countr_zero(b));
      next &= chosen & ~comp;
      comp |= next;
      frontier = next;
    }
    if ((c.cover(comp) & future) == 0) return false;
    rest &= ~comp;
  }
  return true;
}

// Visits the size-k sets satisfying the kind in lexicographic order of their
// sorted vertex lists. The visitor returns false to stop.
void lex_search(const Context& c, int k, bool need_connected, const std::function<bool(Bits)>& visit) {
  bool stop = false;
  std::function<void(int, Bits, Bits, int)> rec = [&](int start, Bits chosen, Bits covered, int left) {
    const Bits uncovered = c.all & ~covered;
    if (left == 0) {
      if (uncovered == 0 && (!need_connected || is_connected_induced(c.graph, chosen))) stop = !visit(chosen);
      return;
    }
    if (std::popcount(uncovered) > left * c.spread) return;
    // Any pick beyond the last dominator of an uncovered vertex strands it.
    int limit = c.n - 1;
    for (Bits b = uncovered; b != 0; b &= b - 1) {
      limit = std::min(limit, c.last_dominator[static_cast<std::size_t>(std::countr_zero(b))]);
    }
    for (int v = start; v <= limit && !stop; ++v) {
      if (c.n - v < left) break;
      const Bits next = chosen | bit(v);
      if (need_connected && !components_can_join(c, next, v, left - 1)) continue;
      rec(v + 1, next, covered | c.closed[static_cast<std::size_t>(v)], left - 1);
    }
  };
  rec(0, 0, 0, k);
}

int connected_number(const Context& c) {
  if (c.n == 1) return 1;
  for (int k = std::max(1, lower_bound(c));; ++k) {
    if (connected_dominating_exists(c, k)) return k;
  }
}

std::optional<Bits> first_set(const Context& c, int k, bool need_connected) {
  std::optional<Bits> found;
  lex_search(c, k, need_connected, [&](Bits s) {
    found = s;
    return false;
  });
  return found;
}

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw DomainError("domination requires at least one vertex");
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DomainError("graph is disconnected: no connected dominating set exists");
}

}  // namespace

bool is_dominating_set(const Graph& g, const VertexSet& s) {
  return g.closed_neighborhood_bits(s.bits()) == VertexSet::full_mask(g.order());
}

bool is_connected_dominating_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw DomainError("connected dominating set check on an empty set");
  return is_dominating_set(g, s) && is_connected_induced(g, s.bits());
}

int domination_number(const Graph& g) {
  require_nonempty(g);
  const Context c(g);
  for (int k = lower_bound(c);; ++k) {
    if (dominating_within(c, 0, k)) return k;
  }
}

int connected_domination_number(const Graph& g) {
  require_nonempty(g);
  require_connected(g);
  return connected_number(Context(g));
}

DominationCertificate minimum_dominating_set(const Graph& g) {
  const int k = domination_number(g);
  const Context c(g);
  auto best = first_set(c, k, true);
  if (!best) best = first_set(c, k, false);
  return {VertexSet(g.order(), *best), DominationKind::dominating, k, true, true};
}

DominationCertificate minimum_connected_dominating_set(const Graph& g) {
  const int k = connected_domination_number(g);
  const auto best = first_set(Context(g), k, true);
  return {VertexSet(g.order(), *best), DominationKind::connected_dominating, k, true, true};
}

MinimumSetEnumeration enumerate_minimum_sets(const Graph& g, DominationKind kind, std::size_t limit) {
  if (limit == 0) throw DomainError("enumeration limit must be positive");
  const bool connected = kind == DominationKind::connected_dominating;
  const int k = connected ? connected_domination_number(g) : domination_number(g);
  MinimumSetEnumeration out;
  lex_search(Context(g), k, connected, [&](Bits s) {
    if (out.sets.size() == limit) {
      out.complete = false;
      return false;
    }
    out.sets.emplace_back(g.order(), s);
    return true;
  });
  return out;
}

int gamma_c_tree_fastpath(const Graph& g) {
  if (!is_tree(g) || g.order() < 3) throw DomainError("tree fast path requires a tree with at least 3 vertices");
  return g.order() - vertex_classes(g).pendants.size();
}

}  // namespace cdom
