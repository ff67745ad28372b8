#include "cdom/serialize.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace cdom::io {

namespace {

Json rounded(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(round3(x));
  return out;
}

Json residuals(const EnergyReport& r) {
  return Json{{"trace", r.trace_residual}, {"power", r.power_residual}};
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

double round3(double x) {
  const double r = std::round(x * 1000.0) / 1000.0;
  return r == 0.0 ? 0.0 : r;  // no "-0"
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Json to_json(const CharPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs) out.push_back(to_json(c));
  return out;
}

Json to_json(const VertexSet& s) { return s.to_vector(); }

Json to_json(const DominationCertificate& c) {
  return Json{{"kind", to_string(c.kind)}, {"size", c.size}, {"set", to_json(c.set)}};
}

Json to_json(const EnergyReport& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"kind", to_string(r.kind)},
              {"set", to_json(r.set)},
              {"gamma", r.gamma_used},
              {"coeffs", to_json(r.charpoly)},
              {"eigenvalues", rounded(r.spectrum.values)},
              {"eigenvalues_full", r.spectrum.values},
              {"energy", round3(r.energy)},
              {"energy_full", r.energy},
              {"residuals", residuals(r)}};
}

Json spectrum_json(const EnergyReport& r) {
  return Json{{"n", r.n},
              {"kind", to_string(r.kind)},
              {"set", to_json(r.set)},
              {"coeffs", to_json(r.charpoly)},
              {"determinant", to_json(r.det)},
              {"eigenvalues", rounded(r.spectrum.values)},
              {"eigenvalues_full", r.spectrum.values},
              {"off_diagonal_residual", r.spectrum.off_diag_residual},
              {"sweeps", r.spectrum.sweeps}};
}

Json to_json(const EnergySpread& s) {
  return Json{{"count", s.count},
              {"complete", s.complete},
              {"min_energy", round3(s.min_energy)},
              {"max_energy", round3(s.max_energy)},
              {"min_energy_full", s.min_energy},
              {"max_energy_full", s.max_energy}};
}

Json to_json(const BoundsReport& r, std::optional<Reading> reading) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    if (reading && e.reading != Reading::shared && e.reading != *reading) continue;
    Json j{{"id", e.id},       {"kind", to_string(e.kind)}, {"reading", to_string(e.reading)},
           {"applicable", e.applicable}, {"value", e.value}, {"target", e.target},
           {"slack", e.slack}, {"satisfied", e.satisfied}, {"clamped", e.clamped}};
    if (!e.applicable) {
      j["value"] = nullptr;
      j["slack"] = nullptr;
    }
    entries.push_back(std::move(j));
  }
  Json out{{"n", r.n},
           {"m", r.m},
           {"gamma_c", r.k},
           {"energy", r.energy},
           {"lambda1", r.lambda1},
           {"abs_max", r.abs_max},
           {"abs_min", r.abs_min},
           {"xi", to_json(r.xi)},
           {"residuals", Json{{"trace", r.trace_residual}, {"power", r.power_residual}}}};
  if (reading) {
    out["reading"] = to_string(*reading);
    out["all_satisfied"] = r.all_satisfied(*reading);
  } else {
    out["all_satisfied"] = r.all_satisfied(Reading::proof);
  }
  out["bounds"] = std::move(entries);
  return out;
}

std::string bounds_csv(const BoundsReport& r, std::optional<Reading> reading, bool header) {
  std::string out = header ? "id,kind,reading,applicable,value,target,slack,satisfied,clamped\n" : "";
  for (const auto& e : r.entries) {
    if (reading && e.reading != Reading::shared && e.reading != *reading) continue;
    out += e.id;
    out += ',';
    out += to_string(e.kind);
    out += ',';
    out += to_string(e.reading);
    out += ',';
    out += flag(e.applicable);
    out += ',';
    out += e.applicable ? format_double(e.value) : "";
    out += ',';
    out += format_double(e.target);
    out += ',';
    out += e.applicable ? format_double(e.slack) : "";
    out += ',';
    out += flag(e.satisfied);
    out += ',';
    out += flag(e.clamped);
    out += '\n';
  }
  return out;
}

Json to_json(const CharacterizationVerdict& v) {
  Json notes = Json::array();
  for (const auto& n : v.notes) notes.push_back(Json{{"condition", n.name}, {"holds", n.holds}, {"detail", n.detail}});
  return Json{{"graph_class", to_string(v.graph_class)},
              {"applicable", v.applicable},
              {"predicate_holds", v.predicate_holds},
              {"gamma", v.gamma},
              {"gamma_c", v.gamma_c},
              {"gamma_equal", v.gamma == v.gamma_c},
              {"energy_D", v.energy_D},
              {"energy_Dc", v.energy_Dc},
              {"energies_equal", v.energies_equal},
              {"notes", std::move(notes)}};
}

Json to_json(const OpenProblemHit& h) {
  return Json{{"index", h.index},
              {"graph6", h.graph6},
              {"gamma", h.gamma},
              {"gamma_c", h.gamma_c},
              {"energy_D", h.energy_D},
              {"energy_Dc", h.energy_Dc},
              {"charpoly_D", to_json(h.charpoly_D)},
              {"charpoly_Dc", to_json(h.charpoly_Dc)}};
}

Json to_json(const qspr::RegressionResult& r) {
  return Json{{"property", qspr::to_string(r.property)},
              {"sample_count", r.sample_count},
              {"slope", r.slope},
              {"intercept", r.intercept},
              {"pearson_r", r.pearson_r},
              {"residual_sd", r.residual_sd}};
}

std::string plot_csv(const std::vector<std::pair<double, double>>& points) {
  std::string out = "descriptor,property\n";
  for (const auto& [x, y] : points) out += format_double(x) + "," + format_double(y) + "\n";
  return out;
}

}  // namespace cdom::io
