#include "cdom/qspr.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "cdom/spectral.hpp"
#include "cdom/structure.hpp"

namespace cdom::qspr {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

// One CSV record; double quotes protect commas and escape themselves.
std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c != '"') {
        out.back() += c;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote", 0);
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int parse_index(std::string_view s, std::string_view token) {
  int v = -1;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || v < 0) {
    throw ParseError("malformed edge token '" + std::string(token) + "'", 0);
  }
  return v;
}

std::optional<double> parse_cell(std::string_view cell, Property p) {
  cell = trim(cell);
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
    throw ParseError("bad " + std::string(to_string(p)) + " value '" + std::string(cell) + "'", 0);
  }
  return v;
}

struct Samples {
  std::vector<double> x;
  std::vector<double> y;
};

Samples samples(std::span<const AlkaneRecord> records, Property p) {
  Samples s;
  for (const auto& r : records) {
    if (const auto v = r.get(p)) {
      s.x.push_back(descriptor(r));
      s.y.push_back(*v);
    }
  }
  return s;
}

}  // namespace

std::string_view to_string(Property p) noexcept {
  static constexpr std::array<std::string_view, kProperties.size()> names{"bp", "mv", "mr", "hv", "ct", "cp", "st"};
  return names[static_cast<std::size_t>(p)];
}

std::optional<Property> parse_property(std::string_view s) {
  for (auto p : kProperties)
    if (to_string(p) == s) return p;
  return std::nullopt;
}

Graph parse_skeleton(std::string_view edges) {
  std::vector<Edge> list;
  int n = 0;
  for (auto token : split(edges, ';')) {
    token = trim(token);
    if (token.empty()) continue;
    const auto dash = token.find('-');
    if (dash == std::string_view::npos) throw ParseError("malformed edge token '" + std::string(token) + "'", 0);
    const int u = parse_index(trim(token.substr(0, dash)), token);
    const int v = parse_index(trim(token.substr(dash + 1)), token);
    if (u == v) throw ParseError("loop in edge token '" + std::string(token) + "'", 0);
    if (std::max(u, v) >= kMaxVertices) throw DomainError("carbon index out of range");
    list.emplace_back(u, v);
    n = std::max(n, std::max(u, v) + 1);
  }
  if (n < 2 || n > 9) throw DomainError("skeleton must have 2 to 9 carbons, got " + std::to_string(n));
  const auto g = Graph::from_edges(n, list);
  if (!is_tree(g)) throw DomainError("skeleton is not a tree");
  if (g.max_degree() > 4) throw DomainError("carbon degree exceeds 4");
  return g;
}

AlkaneTable load_alkane_csv(std::istream& in) {
  AlkaneTable table;
  std::string line;
  std::size_t row = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++row;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (!header) {
      if (text != kCsvHeader) throw ParseError("expected header '" + std::string(kCsvHeader) + "'", row);
      header = true;
      continue;
    }
    try {
      const auto cells = split_record(text);
      if (cells.size() != 2 + kProperties.size()) {
        throw ParseError("expected " + std::to_string(2 + kProperties.size()) + " cells, got " +
                             std::to_string(cells.size()),
                         0);
      }
      AlkaneRecord r;
      r.name = std::string(trim(cells[0]));
      r.skeleton = parse_skeleton(cells[1]);
      for (std::size_t i = 0; i < kProperties.size(); ++i) r.properties[i] = parse_cell(cells[2 + i], kProperties[i]);
      table.records.push_back(std::move(r));
    } catch (const std::exception& e) {
      table.errors.push_back({row, e.what()});
    }
  }
  if (!header) throw ParseError("empty input: missing header", 0);
  return table;
}

AlkaneTable load_alkane_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_alkane_csv(in);
}

double descriptor(const Graph& skeleton) { return c_dominating_energy(skeleton).energy; }

double descriptor(const AlkaneRecord& r) { return descriptor(r.skeleton); }

double pearson_r(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("pearson_r: length mismatch");
  if (xs.size() < 3) throw DomainError("pearson_r: need at least 3 samples");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw DomainError("pearson_r: zero variance, correlation undefined");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

RegressionResult fit_and_report(std::span<const AlkaneRecord> records, Property p) {
  const auto s = samples(records, p);
  if (s.x.size() < 3) {
    throw DomainError("not enough records with property " + std::string(to_string(p)) + " (need 3, have " +
                      std::to_string(s.x.size()) + ")");
  }
  RegressionResult out;
  out.property = p;
  out.sample_count = s.x.size();
  out.pearson_r = pearson_r(s.x, s.y);

  const double n = static_cast<double>(s.x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    mx += s.x[i];
    my += s.y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    sxy += (s.x[i] - mx) * (s.y[i] - my);
    sxx += (s.x[i] - mx) * (s.x[i] - mx);
  }
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    const double e = s.y[i] - (out.intercept + out.slope * s.x[i]);
    sse += e * e;
  }
  out.residual_sd = std::sqrt(sse / (n - 2));
  return out;
}

double eq1_band_check(std::span<const AlkaneRecord> records) {
  const auto s = samples(records, Property::hv);
  if (s.x.empty()) throw DomainError("no records with property hv");
  std::size_t inside = 0;
  for (std::size_t i = 0; i < s.x.size(); ++i)
    if (std::abs(s.y[i] - 10.0 * s.x[i]) <= kBandHalfWidth) ++inside;
  return static_cast<double>(inside) / static_cast<double>(s.x.size());
}

std::vector<std::pair<double, double>> plot_points(std::span<const AlkaneRecord> records, Property p) {
  const auto s = samples(records, p);
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < s.x.size(); ++i) out.emplace_back(s.x[i], s.y[i]);
  return out;
}

}  // namespace cdom::qspr
