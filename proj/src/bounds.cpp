#include "cdom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdom/structure.hpp"

namespace cdom {

namespace {

double clamped_sqrt(double radicand, bool* clamped) {
  if (clamped) *clamped = radicand < 0.0;
  return std::sqrt(std::max(0.0, radicand));
}

}  // namespace

// n [n/2] (1 - [n/2]/n) = [n/2] (n - [n/2]), exact in integers.
double alpha(int n) {
  const long long half = n / 2;
  return static_cast<double>(half * (n - half));
}

double mcclelland_upper(int n, int m, int k) { return std::sqrt(static_cast<double>(n) * (2.0 * m + k)); }

double biernacki_lower(int n, int m, int k, double abs_max, double abs_min, bool* clamped) {
  const double spread = abs_max - abs_min;
  return clamped_sqrt(n * (2.0 * m + k) - alpha(n) * spread * spread, clamped);
}

double cor6_lower(int n, int m, int k, double abs_max, double abs_min, bool* clamped) {
  const double spread = abs_max - abs_min;
  return clamped_sqrt(n * (2.0 * m + k) - 0.25 * n * n * spread * spread, clamped);
}

std::optional<double> diaz_metcalf_lower(int n, int m, int k, double abs_max, double abs_min) {
  if (abs_max + abs_min == 0.0) return std::nullopt;
  return (abs_max * abs_min * n + 2.0 * m + k) / (abs_max + abs_min);
}

double det_lower(int n, int m, int k, const BigInt& xi) {
  double term = 0.0;
  if (xi != 0) term = n * (n - 1.0) * std::exp((2.0 / n) * std::log(static_cast<double>(xi)));
  return std::sqrt(2.0 * m + k + term);
}

double lambda1_lower(int n, int m, int k) { return (2.0 * m + k) / n; }

std::optional<double> koolen_moulton_upper(int n, int m, int k) {
  const double s = 2.0 * m + k;
  if (s < n) return std::nullopt;
  const double a = s / n;
  return a + std::sqrt(std::max(0.0, (n - 1.0) * (s - a * a)));
}

std::string_view to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::upper:
      return "upper";
    case BoundKind::lower:
      return "lower";
    case BoundKind::spectral_radius_lower:
      return "spectral-radius-lower";
  }
  return "?";
}

std::string_view to_string(Reading reading) noexcept {
  switch (reading) {
    case Reading::shared:
      return "shared";
    case Reading::proof:
      return "proof";
    case Reading::literal:
      return "literal";
  }
  return "?";
}

const BoundEntry& BoundsReport::at(std::string_view id, Reading reading) const {
  for (const auto& e : entries)
    if (e.id == id && (e.reading == reading || e.reading == Reading::shared)) return e;
  throw std::out_of_range("no bound with id " + std::string(id));
}

bool BoundsReport::all_satisfied(Reading reading) const {
  return std::all_of(entries.begin(), entries.end(), [&](const BoundEntry& e) {
    return !e.applicable || (e.reading != Reading::shared && e.reading != reading) || e.satisfied;
  });
}

BoundsReport evaluate_bounds(const EnergyReport& r) {
  if (r.n == 0) throw DomainError("bounds need at least one vertex");
  BoundsReport out;
  out.n = r.n;
  out.m = r.m;
  out.k = r.gamma_used;
  out.energy = r.energy;
  out.trace_residual = r.trace_residual;
  out.power_residual = r.power_residual;
  out.xi = r.det < 0 ? BigInt(-r.det) : r.det;

  const auto& v = r.spectrum.values;
  out.lambda1 = v.front();
  out.abs_max = 0.0;
  out.abs_min = std::abs(v.front());
  for (double x : v) {
    out.abs_max = std::max(out.abs_max, std::abs(x));
    out.abs_min = std::min(out.abs_min, std::abs(x));
  }
  const double l1 = std::abs(v.front());
  const double l2 = v.size() > 1 ? std::abs(v[1]) : l1;
  const double ln = std::abs(v.back());
  const int n = out.n, m = out.m, k = out.k;

  auto add = [&](std::string id, BoundKind kind, Reading reading, std::optional<double> value, bool clamped = false) {
    BoundEntry e;
    e.id = std::move(id);
    e.kind = kind;
    e.reading = reading;
    e.target = kind == BoundKind::spectral_radius_lower ? out.lambda1 : out.energy;
    e.applicable = value.has_value();
    e.clamped = clamped;
    if (value) {
      e.value = *value;
      e.slack = kind == BoundKind::upper ? e.value - e.target : e.target - e.value;
      e.satisfied = e.slack >= -kBoundSlackTol;
    }
    out.entries.push_back(std::move(e));
  };

  bool c = false;
  add("mcclelland_upper", BoundKind::upper, Reading::shared, mcclelland_upper(n, m, k));
  const double bp = biernacki_lower(n, m, k, out.abs_max, out.abs_min, &c);
  add("biernacki_lower", BoundKind::lower, Reading::proof, bp, c);
  const double bl = biernacki_lower(n, m, k, l1, ln, &c);
  add("biernacki_lower", BoundKind::lower, Reading::literal, bl, c);
  const double cp = cor6_lower(n, m, k, out.abs_max, out.abs_min, &c);
  add("cor6_lower", BoundKind::lower, Reading::proof, cp, c);
  const double cl = cor6_lower(n, m, k, l1, ln, &c);
  add("cor6_lower", BoundKind::lower, Reading::literal, cl, c);
  add("diaz_metcalf_lower", BoundKind::lower, Reading::proof, diaz_metcalf_lower(n, m, k, out.abs_max, out.abs_min));
  std::optional<double> dm_literal;
  if (l1 + ln > 0.0) dm_literal = (l1 * l2 * n + 2.0 * m + k) / (l1 + ln);
  add("diaz_metcalf_lower", BoundKind::lower, Reading::literal, dm_literal);
  add("det_lower", BoundKind::lower, Reading::shared, det_lower(n, m, k, out.xi));
  add("lambda1_lower", BoundKind::spectral_radius_lower, Reading::shared, lambda1_lower(n, m, k));
  add("koolen_moulton_upper", BoundKind::upper, Reading::shared, koolen_moulton_upper(n, m, k));
  return out;
}

BoundsReport check_all(const Graph& g, double tol) {
  if (g.order() == 0 || !is_connected(g)) throw DomainError("bounds require a connected graph");
  return evaluate_bounds(c_dominating_energy(g, tol));
}

}  // namespace cdom
