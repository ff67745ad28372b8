#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cdom/graph.hpp"

namespace cdom {

enum class DominationKind { dominating, connected_dominating };

std::string_view to_string(DominationKind kind) noexcept;

struct DominationCertificate {
  VertexSet set;
  DominationKind kind = DominationKind::dominating;
  int size = 0;
  bool is_minimum = false;
  // Lexicographically least minimum set of its kind (for `dominating`, among
  // the connected minimum sets when any exist).
  bool canonical = false;
};

bool is_dominating_set(const Graph& g, const VertexSet& s);
// Throws DomainError for an empty set.
bool is_connected_dominating_set(const Graph& g, const VertexSet& s);

int domination_number(const Graph& g);
// Throws DomainError for disconnected graphs.
int connected_domination_number(const Graph& g);

// Minimum dominating set. Ties are broken towards connected sets first,
// then the lexicographically smallest sorted vertex list. n >= 1.
DominationCertificate minimum_dominating_set(const Graph& g);
// Lexicographically smallest minimum connected dominating set. G connected.
DominationCertificate minimum_connected_dominating_set(const Graph& g);

struct MinimumSetEnumeration {
  std::vector<VertexSet> sets;  // lexicographic order
  bool complete = true;         // false when truncated at the limit
};

// All optimal sets of the given kind, at most `limit` of them.
MinimumSetEnumeration enumerate_minimum_sets(const Graph& g, DominationKind kind, std::size_t limit);

// n - (number of pendant vertices); trees with n >= 3 only.
int gamma_c_tree_fastpath(const Graph& g);

}  // namespace cdom
