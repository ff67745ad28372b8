#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cdom/bounds.hpp"
#include "cdom/characterizations.hpp"
#include "cdom/domination.hpp"
#include "cdom/qspr.hpp"
#include "cdom/spectral.hpp"

namespace cdom::io {

// Keys keep insertion order so output is stable and readable.
using Json = nlohmann::ordered_json;

// Presentation rounding for energies and eigenvalues.
double round3(double x);

// Integer when it fits in 64 bits, decimal string otherwise.
Json to_json(const BigInt& x);
Json to_json(const CharPoly& p);
Json to_json(const VertexSet& s);
Json to_json(const DominationCertificate& c);

// energy / eigenvalues are rounded to 3 decimals; *_full keep every digit.
Json to_json(const EnergyReport& r);
Json spectrum_json(const EnergyReport& r);
Json to_json(const EnergySpread& s);

// Without a reading filter every entry is written.
Json to_json(const BoundsReport& r, std::optional<Reading> reading = std::nullopt);
std::string bounds_csv(const BoundsReport& r, std::optional<Reading> reading = std::nullopt, bool header = true);

Json to_json(const CharacterizationVerdict& v);
Json to_json(const OpenProblemHit& h);

Json to_json(const qspr::RegressionResult& r);
std::string plot_csv(const std::vector<std::pair<double, double>>& points);

// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace cdom::io
