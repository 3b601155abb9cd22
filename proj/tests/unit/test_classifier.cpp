#include <cmath>

#include "adsgeo/classifier.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace ads;

TEST_CASE("binary cubic dichotomy") {
  // x^3 + y^3: one real linear factor
  CHECK(cubic_discriminant(1, 0, 0, 1) == doctest::Approx(-27));
  CHECK(classify_binary_cubic(1, 0, 0, 1) == SingularityLabel::D4_Plus);
  // x^3/3 - x y^2 = x (x^2/3 - y^2): three real lines
  CHECK(cubic_discriminant(1.0 / 3, 0, -1, 0) > 0);
  CHECK(classify_binary_cubic(1.0 / 3, 0, -1, 0) == SingularityLabel::D4_Minus);
  CHECK(classify_binary_cubic(1, 0, 0, 0) == SingularityLabel::Degenerate);
  CHECK(classify_binary_cubic(0, 0, 0, 0) == SingularityLabel::Degenerate);
  // discriminant against the resultant of the dehomogenised cubic at a random sample
  const double a = 0.7, b = -1.3, c = 0.4, d = 2.1;
  const double p = b / a, q = c / a, r = d / a;  // t^3 + p t^2 + q t + r
  const double disc = p * p * q * q - 4 * q * q * q - 4 * p * p * p * r - 27 * r * r + 18 * p * q * r;
  CHECK(cubic_discriminant(a, b, c, d) == doctest::Approx(disc * std::pow(a, 4)));
}

TEST_CASE("decision ladder on synthetic invariants") {
  ToleranceConfig cfg;
  CHECK(ladder(0.5, 1, 0, 1, 0, 1, cfg) == SingularityLabel::A2_CuspidalEdge);
  CHECK(ladder(0, 1, 0.5, 1, 0, 1, cfg) == SingularityLabel::A3_Swallowtail);
  CHECK(ladder(0, 1, 0, 1, 0.5, 1, cfg) == SingularityLabel::A4_Butterfly);
  CHECK(ladder(0, 1, 0, 1, 0, 1, cfg) == SingularityLabel::Degenerate);
  CHECK(ladder(1e-12, 1, 0.5, 1, 0, 1, cfg) == SingularityLabel::A3_Swallowtail);
}

TEST_CASE("AdS3 evolutes") {
  Geometry circ = preset("ads3-circle");
  auto r = classify_evolute_point_ads3(*circ.curve, 0.3, 1);
  CHECK(r.label == SingularityLabel::Degenerate);
  CHECK(std::abs(r.sigma) < 1e-9);
  Geometry helix = preset("ads3-helix");
  for (int br : {1, -1}) {
    auto h = classify_evolute_point_ads3(*helix.curve, 0.3, br);
    CHECK(h.label == SingularityLabel::A2_CuspidalEdge);
    CHECK(h.ak_order == 2);
    CHECK(h.consistent());
  }
  CHECK_THROWS_AS(classify_evolute_point_ads3(*helix.curve, 0.3, 0), InputError);
}

TEST_CASE("AdS4 helix focal points are cuspidal edges") {
  Geometry h = preset("ads4-helix");
  auto r = classify_focal_point_ads4_curve(*h.curve, 0.4, 0.3);
  CHECK(r.label == SingularityLabel::A2_CuspidalEdge);
  CHECK(r.consistent());
  CHECK(std::abs(pseudo_inner(r.focal, r.focal) + 1) < 1e-9);
}

TEST_CASE("generic surface: generic points and ridges") {
  Geometry g = preset("ads4-generic-surface");
  const auto& s = *g.surface;
  const double v = 0.5 * (s.domain_v().first + s.domain_v().second);
  const double a = s.domain_u().first, b = s.domain_u().second;
  int ridges = 0, generic = 0;
  const int n = 24;
  for (int i = 0; i < n && (ridges == 0 || generic == 0); ++i) {
    const double u0 = a + (b - a) * i / n, u1 = a + (b - a) * (i + 1) / n;
    BaseParams q;
    if (ridge_crossing(s, {u0, v}, {u1, v}, 1, 0, q)) {
      CHECK(ridge_order(s, q[0], q[1], 1, 0) == 1);
      CHECK(classify_surface_focal_point(s, q[0], q[1], 1, 0).label == SingularityLabel::A3_Swallowtail);
      ++ridges;
    } else {
      auto r = classify_surface_focal_point(s, u0, v, 1, 0);
      CHECK(r.label == SingularityLabel::A2_CuspidalEdge);
      CHECK(r.corank == 1);
      CHECK(ridge_order(s, u0, v, 1, 0) == 0);
      ++generic;
    }
  }
  CHECK(ridges > 0);
  CHECK(generic > 0);
  CHECK_THROWS_AS(classify_surface_focal_point(s, a, v, 2, 0), InputError);
}

TEST_CASE("umbilic sphere focal points have corank two") {
  Geometry sph = preset("ads4-lightcone-sphere", {{"r", 1.0}});
  const auto& s = *sph.surface;
  const double u = 0.5 * (s.domain_u().first + s.domain_u().second);
  const double v = 0.5 * (s.domain_v().first + s.domain_v().second);
  int seen = 0;
  for (int sg : {1, -1}) {
    try {
      auto r = classify_surface_focal_point(s, u, v, sg, 0);
      CHECK(r.corank == 2);
      CHECK_THROWS_AS(ridge_order(s, u, v, sg, 0), CorankError);
      ++seen;
    } catch (const NoFocalPointError&) {
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("report JSON") {
  Geometry h = preset("ads4-helix");
  auto r = classify_focal_point_ads4_curve(*h.curve, 0.4, 0.3);
  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["label"] == to_string(r.label));
  CHECK(j["focal"].size() == 5);
  CHECK(j["consistent"] == true);
  for (const char* k : {"case", "rho", "sigma", "sigma_prime", "corank", "ak_order", "mu_star", "advisory_notes"})
    CHECK(j.contains(k));
}
