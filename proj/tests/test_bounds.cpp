#include <cmath>

#include "cdom/bounds.hpp"
#include "cdom/canonical.hpp"
#include "cdom/generators.hpp"
#include "doctest.h"

using namespace cdom;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Example P5 spectrum, rounded as printed.
constexpr double kP5Max = 2.618;
constexpr double kP5Min = 0.382;

}  // namespace

TEST_CASE("alpha") {
  CHECK(alpha(5) == 6.0);
  CHECK(alpha(1) == 0.0);
  CHECK(alpha(4) == 4.0);
  for (int n = 1; n <= 40; ++n) {
    const double closed = n % 2 == 0 ? n * n / 4.0 : (n * n - 1) / 4.0;
    CHECK(alpha(n) == closed);
    CHECK(alpha(n) <= n * n / 4.0);
  }
}

TEST_CASE("plug-in values") {
  CHECK(close(mcclelland_upper(5, 4, 3), std::sqrt(55.0), 1e-12));
  CHECK(mcclelland_upper(1, 0, 1) == 1.0);
  CHECK(close(mcclelland_upper(5, 4, 1), std::sqrt(45.0), 1e-12));

  CHECK(close(biernacki_lower(5, 4, 3, kP5Max, kP5Min), std::sqrt(55 - 6 * 2.236 * 2.236), 1e-12));
  CHECK(close(biernacki_lower(5, 4, 3, kP5Max, kP5Min), 5.0, 0.01));
  CHECK(close(biernacki_lower(4, 3, 2, 1.5, 1.5), mcclelland_upper(4, 3, 2), 1e-12));
  CHECK(close(cor6_lower(5, 4, 3, kP5Max, kP5Min), std::sqrt(55 - 6.25 * 2.236 * 2.236), 1e-12));
  CHECK(close(cor6_lower(5, 4, 3, kP5Max, kP5Min), 4.874, 1e-3));

  bool clamped = false;
  CHECK(biernacki_lower(2, 0, 1, 10.0, 0.0, &clamped) == 0.0);
  CHECK(clamped);
  biernacki_lower(5, 4, 3, kP5Max, kP5Min, &clamped);
  CHECK_FALSE(clamped);

  CHECK(close(*diaz_metcalf_lower(5, 4, 3, kP5Max, kP5Min), (kP5Max * kP5Min * 5 + 11) / 3.0, 1e-12));
  CHECK(close(*diaz_metcalf_lower(5, 4, 3, kP5Max, kP5Min), 5.333, 1e-3));
  // Equal eigenvalues c with 2m + k = n c^2: bound equals n c.
  CHECK(close(*diaz_metcalf_lower(4, 6, 6, std::sqrt(4.5), std::sqrt(4.5)), 4 * std::sqrt(4.5), 1e-12));
  const double star_top = (1 + std::sqrt(17.0)) / 2;
  CHECK(close(*diaz_metcalf_lower(5, 4, 1, star_top, 0.0), 9 / star_top, 1e-12));
  CHECK(close(*diaz_metcalf_lower(5, 4, 1, star_top, 0.0), 3.514, 1e-3));
  CHECK_FALSE(diaz_metcalf_lower(3, 0, 0, 0.0, 0.0).has_value());

  CHECK(close(det_lower(5, 4, 3, 1), std::sqrt(31.0), 1e-12));
  CHECK(close(det_lower(5, 4, 3, 0), std::sqrt(11.0), 1e-12));
  CHECK(det_lower(1, 0, 1, 1) == 1.0);
  CHECK(close(det_lower(3, 2, 1, 8), std::sqrt(5 + 6 * 4.0), 1e-12));

  CHECK(close(lambda1_lower(5, 4, 3), 2.2, 1e-12));
  CHECK(lambda1_lower(1, 0, 1) == 1.0);
  CHECK(close(lambda1_lower(4, 6, 1), 3.25, 1e-12));

  CHECK(close(*koolen_moulton_upper(5, 4, 3), 2.2 + std::sqrt(4 * (11 - 4.84)), 1e-12));
  CHECK(close(*koolen_moulton_upper(5, 4, 3), 7.164, 1e-3));
  CHECK(*koolen_moulton_upper(5, 4, 3) < mcclelland_upper(5, 4, 3));
  CHECK(*koolen_moulton_upper(1, 0, 1) == 1.0);
  const double km9 = 17.0 / 9 + std::sqrt(8 * (17 - (17.0 / 9) * (17.0 / 9)));
  CHECK(close(*koolen_moulton_upper(9, 8, 1), km9, 1e-12));
  CHECK(km9 >= std::sqrt(33.0));
  CHECK_FALSE(koolen_moulton_upper(4, 1, 1).has_value());
}

TEST_CASE("check_all on P5") {
  const auto r = check_all(gen::path(5));
  CHECK(r.n == 5);
  CHECK(r.m == 4);
  CHECK(r.k == 3);
  CHECK(r.xi == 1);
  CHECK(close(r.energy, 6.236, 1e-3));
  CHECK(r.all_satisfied(Reading::proof));
  CHECK(close(r.at("biernacki_lower").value, 5.0, 0.01));
  CHECK(close(r.at("lambda1_lower").target, 2.618, 1e-3));
  CHECK(r.at("lambda1_lower").kind == BoundKind::spectral_radius_lower);
  CHECK(r.at("koolen_moulton_upper").applicable);

  // The signed-order reading breaks the lower bound on P5.
  const auto& literal = r.at("biernacki_lower", Reading::literal);
  CHECK(close(literal.value, 6.268, 1e-3));
  CHECK(literal.value > r.energy);
  CHECK_FALSE(literal.satisfied);
  CHECK_FALSE(r.all_satisfied(Reading::literal));
  CHECK_THROWS_AS(r.at("nope"), std::out_of_range);
}

TEST_CASE("check_all on K1: every bound tight") {
  const auto r = check_all(gen::complete(1));
  for (const auto& e : r.entries) {
    CHECK(e.applicable);
    CHECK(close(e.value, 1.0, 1e-12));
    CHECK(close(e.slack, 0.0, 1e-12));
  }
}

TEST_CASE("check_all rejects disconnected graphs") {
  CHECK_THROWS_AS(check_all(Graph::from_edges(2, {})), DomainError);
  CHECK_THROWS_AS(check_all(Graph::from_edges(0, {})), DomainError);
}

TEST_CASE("every bound holds on connected graphs n <= 8") {
  int literal_failures = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& g : corpus::connected_graphs(n)) {
      const auto r = check_all(g);
      CHECK(r.all_satisfied(Reading::proof));
      if (!r.all_satisfied(Reading::literal)) ++literal_failures;

      CHECK(r.at("det_lower").value >= std::sqrt(2.0 * r.m + r.k) - 1e-12);
      CHECK(r.at("biernacki_lower").value >= r.at("cor6_lower").value - 1e-12);
      const auto& km = r.at("koolen_moulton_upper");
      CHECK(km.applicable == (2 * r.m + r.k >= r.n));
      if (km.applicable) CHECK(km.value <= r.at("mcclelland_upper").value + 1e-12);
    }
  }
  MESSAGE("graphs violating a literal-reading bound: " << literal_failures);
  CHECK(literal_failures > 0);
}
