#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "cdom/canonical.hpp"
#include "cdom/error.hpp"
#include "cdom/qspr.hpp"
#include "cdom/spectral.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cdom;
using namespace cdom::qspr;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

double root_energy(const Graph& g, const VertexSet& s) {
  const auto m = build_domination_matrix(g, s, DominationKind::connected_dominating);
  double e = 0.0;
  for (double r : oracle::charpoly_roots(char_poly(m.entries))) e += std::abs(r);
  return e;
}

AlkaneRecord record(std::string name, std::string_view edges) {
  AlkaneRecord r;
  r.name = std::move(name);
  r.skeleton = parse_skeleton(edges);
  return r;
}

// Ethane through the hexanes, skeletons only.
std::vector<AlkaneRecord> small_alkanes() {
  return {record("ethane", "0-1"),
          record("propane", "0-1;1-2"),
          record("butane", "0-1;1-2;2-3"),
          record("isobutane", "0-1;0-2;0-3"),
          record("pentane", "0-1;1-2;2-3;3-4"),
          record("isopentane", "0-1;1-2;1-3;3-4"),
          record("neopentane", "0-1;0-2;0-3;0-4"),
          record("hexane", "0-1;1-2;2-3;3-4;4-5"),
          record("2-methylpentane", "0-1;1-2;1-5;2-3;3-4"),
          record("2,2-dimethylbutane", "0-1;1-2;1-4;1-5;2-3")};
}

void set(AlkaneRecord& r, Property p, double v) { r.properties[static_cast<std::size_t>(p)] = v; }

}  // namespace

TEST_CASE("property names") {
  for (auto p : kProperties) CHECK(parse_property(to_string(p)) == p);
  CHECK_FALSE(parse_property("density").has_value());
  CHECK(to_string(Property::hv) == "hv");
}

TEST_CASE("skeleton parsing") {
  CHECK(parse_skeleton("0-1").order() == 2);
  CHECK(parse_skeleton(" 0 - 1 ; 1-2 ").size() == 2);
  CHECK_THROWS_AS(parse_skeleton("0-1;1"), ParseError);
  CHECK_THROWS_AS(parse_skeleton("0-x"), ParseError);
  CHECK_THROWS_AS(parse_skeleton("0-0"), ParseError);
  CHECK_THROWS_AS(parse_skeleton(""), DomainError);
  CHECK_THROWS_AS(parse_skeleton("0-1;1-2;2-0"), DomainError);
  CHECK_THROWS_AS(parse_skeleton("0-1;2-3"), DomainError);
  CHECK_THROWS_AS(parse_skeleton("0-1;0-2;0-3;0-4;0-5"), DomainError);
  CHECK_THROWS_AS(parse_skeleton("0-1;1-2;2-3;3-4;4-5;5-6;6-7;7-8;8-9"), DomainError);
}

TEST_CASE("csv loading") {
  const std::string text =
      "name,edges,bp,mv,mr,hv,ct,cp,st\n"
      "ethane,0-1,-88.6,,,14.7,,,\n"
      "\n"
      "bad token,0-1;1,1,,,,,,\n"
      "ring,0-1;1-2;2-0,,,,,,,\n"
      "hexavalent,0-1;0-2;0-3;0-4;0-5,,,,,,,\n"
      "short,0-1,1\n"
      "propane,0-1;1-2,-42.1,75.7,15.6,19.0,96.8,42.0,\n"
      "bad value,0-1,abc,,,,,,\n";
  const auto t = load_alkane_csv(std::string_view(text));
  REQUIRE(t.records.size() == 2);
  CHECK(t.records[0].name == "ethane");
  CHECK(t.records[0].get(Property::bp) == -88.6);
  CHECK_FALSE(t.records[0].get(Property::mv).has_value());
  CHECK(t.records[1].get(Property::cp) == 42.0);
  CHECK_FALSE(t.records[1].get(Property::st).has_value());

  REQUIRE(t.errors.size() == 5);
  const std::vector<std::size_t> rows{4, 5, 6, 7, 9};
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(t.errors[i].row == rows[i]);
  CHECK(t.errors[0].message.find("malformed edge token") != std::string::npos);
  CHECK(t.errors[1].message.find("not a tree") != std::string::npos);
  CHECK(t.errors[2].message.find("degree") != std::string::npos);
  CHECK(t.errors[4].message.find("bp") != std::string::npos);

  CHECK_THROWS_AS(load_alkane_csv(std::string_view("name,edges,bp\n")), ParseError);
  CHECK_THROWS_AS(load_alkane_csv(std::string_view("")), ParseError);
  std::istringstream crlf("name,edges,bp,mv,mr,hv,ct,cp,st\r\nethane,0-1,,,,,,,\r\n");
  CHECK(load_alkane_csv(crlf).records.size() == 1);

  const auto quoted = load_alkane_csv(std::string_view(
      "name,edges,bp,mv,mr,hv,ct,cp,st\n"
      "\"2,2-dimethylbutane\",0-1;1-2;1-4;1-5;2-3,49.7,,,,,,\n"
      "\"say \"\"hi\"\"\",0-1,,,,,,,\n"
      "\"open,0-1,,,,,,,\n"));
  REQUIRE(quoted.records.size() == 2);
  CHECK(quoted.records[0].name == "2,2-dimethylbutane");
  CHECK(quoted.records[0].get(Property::bp) == 49.7);
  CHECK(quoted.records[1].name == "say \"hi\"");
  REQUIRE(quoted.errors.size() == 1);
  CHECK(quoted.errors[0].row == 4);
}

TEST_CASE("descriptor fixtures") {
  CHECK(close(descriptor(parse_skeleton("0-1")), std::sqrt(5.0), 1e-9));
  CHECK(close(descriptor(parse_skeleton("0-1;0-2;0-3;0-4")), std::sqrt(17.0), 1e-9));
  CHECK(close(descriptor(parse_skeleton("0-1;1-2;2-3;3-4")), 6.236, 1e-3));
  // The two-carbon set is the first vertex.
  CHECK(c_dominating_energy(parse_skeleton("0-1")).set.to_vector() == std::vector<int>{0});
}

TEST_CASE("descriptor against oracle on alkane trees") {
  int checked = 0;
  for (int n = 2; n <= 9; ++n) {
    for (const auto& t : corpus::trees(n)) {
      if (t.max_degree() > 4) continue;
      const auto bf = oracle::brute_force(t);
      const auto r = c_dominating_energy(t);
      REQUIRE(r.set.size() == bf.gamma_c);
      CHECK(close(descriptor(t), root_energy(t, r.set), 1e-8));
      ++checked;
    }
  }
  // Carbon skeletons C2..C9.
  CHECK(checked == 1 + 1 + 2 + 3 + 5 + 9 + 18 + 35);
}

TEST_CASE("pearson") {
  const std::vector<double> a{1, 2, 3}, b{2, 1, 3};
  CHECK(close(pearson_r(a, b), 0.5, 1e-15));
  CHECK(close(pearson_r(a, a), 1.0, 1e-15));
  const std::vector<double> neg{3, 2, 1};
  CHECK(close(pearson_r(a, neg), -1.0, 1e-15));

  CHECK_THROWS_AS(pearson_r(std::vector<double>{1, 2}, std::vector<double>{1, 2}), DomainError);
  CHECK_THROWS_AS(pearson_r(a, std::vector<double>{1, 2}), DomainError);
  CHECK_THROWS_AS(pearson_r(a, std::vector<double>{4, 4, 4}), DomainError);

  std::mt19937 rng(7);
  std::normal_distribution<double> dist;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(20), y(20);
    for (auto& v : x) v = dist(rng);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = 0.3 * x[i] + dist(rng);
    const double r = pearson_r(x, y);

    long double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= x.size();
    my /= y.size();
    long double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxy += (x[i] - mx) * (y[i] - my);
      sxx += (x[i] - mx) * (x[i] - mx);
      syy += (y[i] - my) * (y[i] - my);
    }
    CHECK(close(r, static_cast<double>(sxy / std::sqrt(sxx * syy)), 1e-12));

    auto ax = x, ay = y;
    for (auto& v : ax) v = 2.5 * v - 4.0;
    for (auto& v : ay) v = 0.1 * v + 7.0;
    CHECK(close(pearson_r(ax, ay), r, 1e-12));
    for (auto& v : ay) v = -v;
    CHECK(close(pearson_r(ax, ay), -r, 1e-12));
  }
}

TEST_CASE("synthetic hv equal to ten times the descriptor") {
  auto records = small_alkanes();
  for (auto& r : records) set(r, Property::hv, 10.0 * descriptor(r));
  const auto fit = fit_and_report(records, Property::hv);
  CHECK(fit.property == Property::hv);
  CHECK(fit.sample_count == records.size());
  CHECK(close(fit.slope, 10.0, 1e-9));
  CHECK(close(fit.intercept, 0.0, 1e-8));
  CHECK(close(fit.pearson_r, 1.0, 1e-12));
  CHECK(fit.residual_sd < 1e-8);
  CHECK(eq1_band_check(records) == 1.0);

  const auto pts = plot_points(records, Property::hv);
  REQUIRE(pts.size() == records.size());
  CHECK(pts[0].first == descriptor(records[0]));
  CHECK(pts[0].second == *records[0].get(Property::hv));
}

TEST_CASE("regression residuals and band") {
  auto records = small_alkanes();
  const std::vector<double> bp{-88.6, -42.1, -0.5, -11.7, 36.1, 27.8, 9.5, 68.7, 60.3, 49.7};
  for (std::size_t i = 0; i < records.size(); ++i) set(records[i], Property::bp, bp[i]);
  const auto fit = fit_and_report(records, Property::bp);

  double sum = 0.0, dot = 0.0, sse = 0.0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const double x = descriptor(records[i]);
    const double e = bp[i] - (fit.intercept + fit.slope * x);
    sum += e;
    dot += e * x;
    sse += e * e;
  }
  CHECK(std::abs(sum) < 1e-9);
  CHECK(std::abs(dot) < 1e-9);
  CHECK(close(fit.residual_sd, std::sqrt(sse / (records.size() - 2)), 1e-12));
  CHECK(fit.pearson_r > 0.9);

  // Half the records pushed outside the band.
  for (std::size_t i = 0; i < records.size(); ++i) set(records[i], Property::hv, 10.0 * descriptor(records[i]) + (i % 2 ? 6.0 : 5.0));
  CHECK(eq1_band_check(records) == 0.5);
}

TEST_CASE("missing properties") {
  auto records = small_alkanes();
  set(records[0], Property::mr, 1.0);
  set(records[3], Property::mr, 2.0);
  CHECK(plot_points(records, Property::mr).size() == 2);
  try {
    fit_and_report(records, Property::mr);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("mr") != std::string::npos);
  }
  CHECK_THROWS_AS(eq1_band_check(records), DomainError);
}
