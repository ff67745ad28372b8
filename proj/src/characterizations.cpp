#include "cdom/characterizations.hpp"

#include <algorithm>
#include <cmath>

#include "cdom/canonical.hpp"
#include "cdom/graph_io.hpp"
#include "cdom/structure.hpp"

namespace cdom {

namespace {

using Bits = std::uint64_t;

void note(std::vector<ConditionNote>* notes, std::string name, bool holds, std::string detail = {}) {
  if (notes) notes->push_back({std::move(name), holds, std::move(detail)});
}

std::string list(const Graph& g, Bits bits) {
  std::string s = "{";
  for (int v : VertexSet(g.order(), bits).to_vector()) {
    if (s.size() > 1) s += ",";
    s += std::to_string(v);
  }
  return s + "}";
}

Bits cycle_bits(const std::vector<int>& cycle) {
  Bits b = 0;
  for (int v : cycle) b |= Bits{1} << v;
  return b;
}

Bits filter(Bits s, auto pred) {
  Bits out = 0;
  for (Bits b = s; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    if (pred(v)) out |= Bits{1} << v;
  }
  return out;
}

// Every vertex outside N[X] of degree >= 2 is a support.
bool condition_a(const Graph& g, Bits x, Bits supports, std::vector<ConditionNote>* notes) {
  const Bits outside = VertexSet::full_mask(g.order()) & ~g.closed_neighborhood_bits(x);
  const Bits offenders = filter(outside, [&](int v) { return g.degree(v) >= 2 && !((supports >> v) & 1U); });
  note(notes, "a", offenders == 0, offenders == 0 ? "" : "non-support vertices " + list(g, offenders));
  return offenders == 0;
}

struct UnicyclicSetup {
  std::vector<int> cycle;
  Bits on_cycle = 0;
  Bits supports = 0;
};

UnicyclicSetup unicyclic_setup(const Graph& g, int want_length, int min_order) {
  if (!is_unicyclic(g)) throw DomainError("graph is not unicyclic");
  UnicyclicSetup s;
  s.cycle = find_unique_cycle(g);
  const int len = static_cast<int>(s.cycle.size());
  if (want_length >= 5 ? len < 5 : len != want_length) {
    throw DomainError("cycle length " + std::to_string(len) + " does not match this condition");
  }
  if (g.order() < min_order) throw DomainError("graph has too few vertices for this condition");
  s.on_cycle = cycle_bits(s.cycle);
  s.supports = vertex_classes(g).supports.bits();
  return s;
}

Bits degree_two_on_cycle(const Graph& g, Bits on_cycle) {
  return filter(on_cycle, [&](int v) { return g.degree(v) == 2; });
}

}  // namespace

std::string_view to_string(GraphClass c) noexcept {
  switch (c) {
    case GraphClass::tree:
      return "tree";
    case GraphClass::unicyclic:
      return "unicyclic";
    case GraphClass::cubic:
      return "cubic";
    case GraphClass::block:
      return "block";
    case GraphClass::other:
      return "other";
  }
  return "other";
}

std::optional<GraphClass> parse_graph_class(std::string_view s) {
  for (auto c : {GraphClass::tree, GraphClass::unicyclic, GraphClass::cubic, GraphClass::block, GraphClass::other})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::string_view to_string(CycleRule r) noexcept {
  switch (r) {
    case CycleRule::degree_at_least_3:
      return "degree>=3";
    case CycleRule::degree_at_least_2:
      return "degree>=2";
    case CycleRule::degree_exactly_2:
      return "degree=2";
  }
  return "?";
}

bool tree_condition(const Graph& g, std::vector<ConditionNote>* notes) {
  if (!is_tree(g) || g.order() < 3) throw DomainError("tree condition needs a tree with at least 3 vertices");
  const auto classes = vertex_classes(g);
  const Bits offenders = classes.internals.bits() & ~classes.supports.bits();
  note(notes, "internals are supports", offenders == 0, offenders == 0 ? "" : "non-support internals " + list(g, offenders));
  return offenders == 0;
}

bool unicyclic_condition_long_cycle(const Graph& g, CycleRule rule, std::vector<ConditionNote>* notes) {
  const auto s = unicyclic_setup(g, 5, 5);
  const Bits x = filter(s.on_cycle, [&](int v) {
    switch (rule) {
      case CycleRule::degree_at_least_3:
        return g.degree(v) >= 3;
      case CycleRule::degree_at_least_2:
        return g.degree(v) >= 2;
      case CycleRule::degree_exactly_2:
        return g.degree(v) == 2;
    }
    return false;
  });
  note(notes, "X", true, list(g, x) + " by " + std::string(to_string(rule)));

  const bool a = condition_a(g, x, s.supports, notes);

  const int size = std::popcount(x);
  const bool b = x != 0 && is_connected_induced(g, x) && size <= 3;
  note(notes, "b", b, "|X| = " + std::to_string(size));

  // Cycle neighbours of the path <X>, restricted to degree >= 3.
  bool c = true;
  if (b) {
    const Bits rim = g.closed_neighborhood_bits(x) & s.on_cycle & ~x;
    const Bits heavy = filter(rim, [&](int v) { return g.degree(v) >= 3; });
    const Bits heavy_supports = heavy & s.supports;
    c = size == 2 ? heavy_supports != 0 : heavy_supports == heavy;
    note(notes, "c", c, "degree>=3 neighbours " + list(g, heavy) + ", supports among them " + list(g, heavy_supports));
  } else {
    note(notes, "c", true, "not reached");
  }
  return a && b && c;
}

bool unicyclic_condition_c3(const Graph& g, std::vector<ConditionNote>* notes) {
  const auto s = unicyclic_setup(g, 3, 4);
  const Bits x = degree_two_on_cycle(g, s.on_cycle);
  note(notes, "X", true, list(g, x));
  const bool a = condition_a(g, x, s.supports, notes);
  const Bits heavy = s.on_cycle & ~x;
  const bool b = std::popcount(heavy) == 1 || (heavy & ~s.supports) == 0;
  note(notes, "b", b, "degree>=3 cycle vertices " + list(g, heavy));
  return a && b;
}

bool unicyclic_condition_c4(const Graph& g, std::vector<ConditionNote>* notes) {
  const auto s = unicyclic_setup(g, 4, 5);
  const Bits x = degree_two_on_cycle(g, s.on_cycle);
  note(notes, "X", true, list(g, x));
  const bool a = condition_a(g, x, s.supports, notes);
  const int size = std::popcount(x);
  bool b = true;
  if (size == 1) {
    b = (s.on_cycle & ~x & ~s.supports) == 0;
  } else if (size >= 2) {
    b = (s.on_cycle & s.supports) != 0;
  }
  note(notes, "b", b, size == 0 ? "|X| = 0, vacuous" : "|X| = " + std::to_string(size));
  return a && b;
}

const std::vector<std::string>& cubic_catalog() {
  static const std::vector<std::string> catalog{"C~", "EFz_", "ELv_", "G@NMf?", "G@Umf?"};
  return catalog;
}

bool cubic_catalog_check(const Graph& g) {
  if (!is_regular(g, 3) || !is_connected(g)) throw DomainError("graph is not a connected cubic graph");
  const auto key = canonical_graph6(g);
  return std::any_of(cubic_catalog().begin(), cubic_catalog().end(),
                     [&](const std::string& s) { return canonical_graph6(parse_graph6(s)) == key; });
}

bool block_graph_condition(const Graph& g, std::vector<ConditionNote>* notes) {
  if (!is_connected(g) || !is_block_graph(g)) throw DomainError("graph is not a connected block graph");
  const auto d = blocks(g);
  if (d.blocks.size() < 2) throw DomainError("block graph condition needs at least two blocks");
  Bits in_end_block = 0;
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    if (d.cutvertices_in_block[i].size() == 1) in_end_block |= d.cutvertices_in_block[i].bits();
  const Bits offenders = d.cutvertices.bits() & ~in_end_block;
  note(notes, "cutvertices in end blocks", offenders == 0,
       offenders == 0 ? "" : "cutvertices outside end blocks " + list(g, offenders));
  return offenders == 0;
}

bool gamma_equality(const Graph& g) { return domination_number(g) == connected_domination_number(g); }

bool energies_equal(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  return std::abs(dominating_energy(g).energy - c_dominating_energy(g).energy) < tol;
}

GraphClass detect_class(const Graph& g) {
  if (is_tree(g)) return GraphClass::tree;
  if (is_unicyclic(g)) return GraphClass::unicyclic;
  if (is_connected(g) && is_regular(g, 3)) return GraphClass::cubic;
  if (is_connected(g) && is_block_graph(g)) return GraphClass::block;
  return GraphClass::other;
}

CharacterizationVerdict characterize(const Graph& g, std::optional<GraphClass> forced, CycleRule rule, double tol) {
  if (g.order() == 0 || !is_connected(g)) throw DomainError("characterization requires a connected graph");
  CharacterizationVerdict v;
  v.graph_class = forced.value_or(detect_class(g));
  const auto d = dominating_energy(g);
  const auto c = c_dominating_energy(g);
  v.gamma = d.gamma_used;
  v.gamma_c = c.gamma_used;
  v.energy_D = d.energy;
  v.energy_Dc = c.energy;
  v.energies_equal = std::abs(d.energy - c.energy) < tol;

  auto* notes = &v.notes;
  switch (v.graph_class) {
    case GraphClass::tree:
      if (!is_tree(g)) throw DomainError("graph is not a tree");
      v.applicable = g.order() >= 3;
      if (v.applicable) v.predicate_holds = tree_condition(g, notes);
      break;
    case GraphClass::unicyclic: {
      if (!is_unicyclic(g)) throw DomainError("graph is not unicyclic");
      const auto len = find_unique_cycle(g).size();
      note(notes, "cycle length", true, std::to_string(len));
      if (len >= 5) {
        v.applicable = true;
        v.predicate_holds = unicyclic_condition_long_cycle(g, rule, notes);
      } else if (len == 3) {
        v.applicable = g.order() >= 4;
        if (v.applicable) v.predicate_holds = unicyclic_condition_c3(g, notes);
      } else {
        v.applicable = g.order() >= 5;
        if (v.applicable) v.predicate_holds = unicyclic_condition_c4(g, notes);
      }
      break;
    }
    case GraphClass::cubic:
      v.applicable = true;
      v.predicate_holds = cubic_catalog_check(g);
      note(notes, "in catalog", v.predicate_holds);
      break;
    case GraphClass::block:
      if (!is_block_graph(g)) throw DomainError("graph is not a block graph");
      v.applicable = blocks(g).blocks.size() >= 2;
      if (v.applicable) v.predicate_holds = block_graph_condition(g, notes);
      break;
    case GraphClass::other:
      break;
  }
  if (!v.applicable) note(notes, "preconditions", false, "class preconditions not met");
  return v;
}

OpenProblemScan open_problem_scan(std::span<const Graph> graphs, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  OpenProblemScan out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    ++out.scanned;
    if (g.order() == 0 || !is_connected(g)) {
      ++out.skipped;
      continue;
    }
    const auto d = dominating_energy(g);
    const auto c = c_dominating_energy(g);
    if (d.gamma_used == c.gamma_used) continue;
    if (!(std::abs(d.energy - c.energy) < tol) || d.charpoly == c.charpoly) continue;

    const auto d2 = energy_for_set(g, d.set, DominationKind::dominating, kReverifyJacobiTol);
    const auto c2 = energy_for_set(g, c.set, DominationKind::connected_dominating, kReverifyJacobiTol);
    if (!(std::abs(d2.energy - c2.energy) < tol / 100)) {
      ++out.failed_reverify;
      continue;
    }
    out.hits.push_back({i, to_graph6(g), d.gamma_used, c.gamma_used, d2.energy, c2.energy, d.charpoly, c.charpoly});
  }
  return out;
}

}  // namespace cdom
