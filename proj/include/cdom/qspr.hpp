#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdom/graph.hpp"

namespace cdom::qspr {

// bp, mv, mr, hv, ct, cp, st in the CSV column order.
enum class Property { bp, mv, mr, hv, ct, cp, st };
inline constexpr std::array kProperties{Property::bp, Property::mv, Property::mr, Property::hv,
                                        Property::ct, Property::cp, Property::st};
inline constexpr std::string_view kCsvHeader = "name,edges,bp,mv,mr,hv,ct,cp,st";
inline constexpr double kReferenceHvCorrelation = 0.995;
inline constexpr double kBandHalfWidth = 5.0;

std::string_view to_string(Property p) noexcept;
std::optional<Property> parse_property(std::string_view s);

struct AlkaneRecord {
  std::string name;
  Graph skeleton;  // hydrogen-suppressed carbon tree
  std::array<std::optional<double>, kProperties.size()> properties;

  std::optional<double> get(Property p) const { return properties[static_cast<std::size_t>(p)]; }
};

struct RowError {
  std::size_t row = 0;  // 1-based line number in the file
  std::string message;
};

struct AlkaneTable {
  std::vector<AlkaneRecord> records;
  std::vector<RowError> errors;  // rejected rows
};

// Throws ParseError for a wrong header; bad rows are collected, not thrown.
AlkaneTable load_alkane_csv(std::istream& in);
AlkaneTable load_alkane_csv(std::string_view text);

// Skeleton from "u-v;u-v;...". Throws ParseError / DomainError.
Graph parse_skeleton(std::string_view edges);

double descriptor(const Graph& skeleton);
double descriptor(const AlkaneRecord& r);

// Sample Pearson correlation. Lengths equal and >= 3; both variances nonzero.
double pearson_r(std::span<const double> xs, std::span<const double> ys);

struct RegressionResult {
  Property property = Property::hv;
  std::size_t sample_count = 0;
  double slope = 0.0;
  double intercept = 0.0;
  double pearson_r = 0.0;
  double residual_sd = 0.0;
};

// Least squares of the property on the descriptor over records that carry it.
RegressionResult fit_and_report(std::span<const AlkaneRecord> records, Property p);
// Fraction of hv-carrying records with |hv - 10 E| <= 5.
double eq1_band_check(std::span<const AlkaneRecord> records);
// (descriptor, property) pairs in record order.
std::vector<std::pair<double, double>> plot_points(std::span<const AlkaneRecord> records, Property p);

}  // namespace cdom::qspr
