#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdom/spectral.hpp"

namespace cdom {

enum class GraphClass { tree, unicyclic, cubic, block, other };
std::string_view to_string(GraphClass c) noexcept;
std::optional<GraphClass> parse_graph_class(std::string_view s);

struct ConditionNote {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct CharacterizationVerdict {
  GraphClass graph_class = GraphClass::other;
  bool applicable = false;  // class preconditions met
  bool predicate_holds = false;
  int gamma = 0;
  int gamma_c = 0;
  double energy_D = 0.0;
  double energy_Dc = 0.0;
  bool energies_equal = false;
  std::vector<ConditionNote> notes;
};

inline constexpr double kEnergyEqualTol = 1e-6;

// Internal vertices are all supports. Trees with n >= 3.
bool tree_condition(const Graph& g, std::vector<ConditionNote>* notes = nullptr);

// How the long-cycle unicyclic condition picks X from the cycle vertices.
enum class CycleRule {
  degree_at_least_3,  // default
  degree_at_least_2,  // as printed
  degree_exactly_2,
};
std::string_view to_string(CycleRule r) noexcept;

// Unicyclic, cycle length >= 5.
bool unicyclic_condition_long_cycle(const Graph& g, CycleRule rule = CycleRule::degree_at_least_3,
                                    std::vector<ConditionNote>* notes = nullptr);
// Unicyclic with a triangle, n >= 4.
bool unicyclic_condition_c3(const Graph& g, std::vector<ConditionNote>* notes = nullptr);
// Unicyclic with a 4-cycle, n >= 5. |X| = 0 satisfies (b) vacuously.
bool unicyclic_condition_c4(const Graph& g, std::vector<ConditionNote>* notes = nullptr);

// K4, the prism, K_{3,3} and the two 8-vertex members, as graph6.
const std::vector<std::string>& cubic_catalog();
// Connected cubic graphs only.
bool cubic_catalog_check(const Graph& g);

// Every cutvertex lies in an end block. Block graphs with >= 2 blocks.
bool block_graph_condition(const Graph& g, std::vector<ConditionNote>* notes = nullptr);

bool gamma_equality(const Graph& g);
bool energies_equal(const Graph& g, double tol = kEnergyEqualTol);

// Class detection in the order tree, unicyclic, cubic, block, other.
GraphClass detect_class(const Graph& g);
CharacterizationVerdict characterize(const Graph& g, std::optional<GraphClass> forced = std::nullopt,
                                     CycleRule rule = CycleRule::degree_at_least_3, double tol = kEnergyEqualTol);

struct OpenProblemHit {
  std::size_t index = 0;  // position in the input stream
  std::string graph6;
  int gamma = 0;
  int gamma_c = 0;
  double energy_D = 0.0;
  double energy_Dc = 0.0;
  CharPoly charpoly_D;
  CharPoly charpoly_Dc;
};

struct OpenProblemScan {
  std::vector<OpenProblemHit> hits;
  std::size_t scanned = 0;
  std::size_t skipped = 0;            // disconnected or empty inputs
  std::size_t failed_reverify = 0;    // candidates dropped at the tightened tolerance
};

inline constexpr double kReverifyJacobiTol = 1e-14;

// Graphs with gamma != gamma_c, |E_D - E_Dc| < tol and distinct
// characteristic polynomials. Each candidate is re-checked at tol / 100.
OpenProblemScan open_problem_scan(std::span<const Graph> graphs, double tol = kEnergyEqualTol);

}  // namespace cdom
