#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdom/spectral.hpp"

namespace cdom {

inline constexpr double kBoundSlackTol = 1e-8;

double alpha(int n);

double mcclelland_upper(int n, int m, int k);
// Radicands below zero are clamped; `clamped` reports it.
double biernacki_lower(int n, int m, int k, double abs_max, double abs_min, bool* clamped = nullptr);
double cor6_lower(int n, int m, int k, double abs_max, double abs_min, bool* clamped = nullptr);
// nullopt when abs_max + abs_min == 0.
std::optional<double> diaz_metcalf_lower(int n, int m, int k, double abs_max, double abs_min);
double det_lower(int n, int m, int k, const BigInt& xi);
double lambda1_lower(int n, int m, int k);
// nullopt unless 2m + k >= n.
std::optional<double> koolen_moulton_upper(int n, int m, int k);

enum class BoundKind { upper, lower, spectral_radius_lower };
std::string_view to_string(BoundKind kind) noexcept;

// Which reading of the extremal-eigenvalue bounds an entry belongs to.
// `proof`: extremes of |lambda|; `literal`: |lambda_1|, |lambda_n| (and
// |lambda_2| where the statement has it) of the signed order. Bounds with a
// single reading are `shared`.
enum class Reading { shared, proof, literal };
std::string_view to_string(Reading reading) noexcept;

struct BoundEntry {
  std::string id;
  BoundKind kind = BoundKind::upper;
  Reading reading = Reading::shared;
  double value = 0.0;
  double target = 0.0;  // energy, or lambda_1 for spectral-radius bounds
  double slack = 0.0;   // value - target (upper), target - value (lower)
  bool satisfied = true;
  bool applicable = true;
  bool clamped = false;
};

struct BoundsReport {
  int n = 0;
  int m = 0;
  int k = 0;
  double energy = 0.0;
  double lambda1 = 0.0;
  double abs_max = 0.0;
  double abs_min = 0.0;
  BigInt xi;
  double trace_residual = 0.0;
  double power_residual = 0.0;
  std::vector<BoundEntry> entries;

  // Entry with this id under the given reading (shared entries match any).
  // Throws std::out_of_range for an unknown id.
  const BoundEntry& at(std::string_view id, Reading reading = Reading::proof) const;
  // Every applicable entry of the given readings (plus shared ones) satisfied.
  bool all_satisfied(Reading reading = Reading::proof) const;
};

// Bounds evaluated against a precomputed energy report.
BoundsReport evaluate_bounds(const EnergyReport& r);
// Canonical c-dominating energy of a connected graph plus every bound.
BoundsReport check_all(const Graph& g, double tol = kDefaultJacobiTol);

}  // namespace cdom
