#include <cmath>
#include <numbers>

#include "adsgeo/curve_frames.hpp"
#include "adsgeo/parametric.hpp"
#include "doctest.h"

using namespace ads;

namespace {
const double kSqrt2 = std::sqrt(2.0);

std::shared_ptr<ParamCurve> circle_like(double scale, double speed) {
  std::vector<TermSum> c = {poly1(scale * kSqrt2, 0), {}, cos1(scale, speed), sin1(scale, speed)};
  return std::make_shared<ParamCurve>(c, Interval{0.0, 2 * std::numbers::pi});
}

// Taylor polynomial of the spacelike geodesic (cosh s, 0, sinh s, 0)
std::shared_ptr<ParamCurve> geodesic_jet() {
  TermSum ch, sh;
  double f = 1;
  for (int k = 0; k <= 11; ++k) {
    if (k > 0) f *= k;
    (k % 2 ? sh : ch).push_back(poly1(1.0 / f, k).front());
  }
  return std::make_shared<ParamCurve>(std::vector<TermSum>{ch, {}, sh, {}}, Interval{-0.5, 0.5});
}
}  // namespace

TEST_CASE("circle preset derivatives") {
  Geometry g = preset("ads3-circle", {{"r", 1.0}});
  auto d = g.curve->derivatives(0.0, 1);
  CHECK(d[0][0] == doctest::Approx(kSqrt2));
  CHECK(d[0][1] == 0);
  CHECK(d[0][2] == doctest::Approx(1));
  CHECK(d[0][3] == doctest::Approx(0));
  CHECK(d[1][3] == doctest::Approx(1));
  CHECK(d[1][0] == 0);
  CHECK_THROWS_AS(g.curve->derivatives(0.0, 6), OrderError);
  CHECK_THROWS_AS(g.curve->derivatives(100.0, 1), DomainError);
}

TEST_CASE("exact derivatives match central differences") {
  const double h = 1e-5;
  for (const auto& name : {"ads3-helix", "ads3-generic-curve", "ads4-helix", "ads4-generic-curve"}) {
    Geometry g = preset(name);
    auto [a, b] = g.curve->domain();
    for (int i = 1; i < 10; ++i) {
      double s = a + (b - a) * i / 10;
      auto d = g.curve->derivatives(s, 5);
      auto dp = g.curve->derivatives(s + h, 4), dm = g.curve->derivatives(s - h, 4);
      for (int k = 1; k <= 5; ++k) {
        AVec fd = (dp[k - 1] - dm[k - 1]) / (2 * h);
        double scale = std::max(1.0, d[k].max_abs());
        CHECK((fd - d[k]).max_abs() < 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("presets") {
  Geometry c = preset("ads3-circle", {{"r", 1.0}});
  auto rep = validate(*c.curve, 100);
  CHECK(rep.ok);
  CHECK(rep.max_ads_residual < 1e-14);

  Geometry h = preset("ads4-helix", {{"B", 1.0}, {"p", 1.0}});
  auto hc = std::dynamic_pointer_cast<const ParamCurve>(h.curve);
  REQUIRE(hc);
  // third coordinate is B cos(q s) with q auto-solved
  CHECK(hc->coords()[2].front().wu == doctest::Approx(std::sqrt(3.0)));
  CHECK(validate(*h.curve, 100).max_unit_speed_residual < 1e-14);
  CHECK_THROWS_AS(preset("ads4-helix", {{"B", 1.0}, {"p", 1.0}, {"q", 2.0}}), PresetConstraintError);
  CHECK_THROWS_AS(preset("ads3-circle", {{"bogus", 1.0}}), PresetConstraintError);
  CHECK_THROWS_AS(preset("no-such-thing"), PresetConstraintError);

  Geometry sph = preset("ads4-lightcone-sphere", {{"r", 1.0}});
  const AVec lam0 = AVec::basis(5, -1);
  for (double u : {-1.0, 0.0, 0.5})
    for (double v : {0.3, 1.0, 2.0}) CHECK(std::abs(nullcone_residual(sph.surface->eval(u, v), lam0)) < 1e-12);

  for (const auto& name : preset_names()) {
    Geometry g = preset(name);
    auto r = g.is_curve() ? validate(*g.curve, 200) : validate(*g.surface, 20);
    CHECK_MESSAGE(r.ok, name);
  }
}

TEST_CASE("validate rejects curves off AdS or not unit speed") {
  auto scaled = validate(*circle_like(1.1, 1.0), 50);
  CHECK_FALSE(scaled.ok);
  CHECK(scaled.max_ads_residual == doctest::Approx(0.21));
  auto fast = validate(*circle_like(1.0, 2.0), 50);
  CHECK_FALSE(fast.ok);
  CHECK(fast.max_ads_residual < 1e-14);
  CHECK(fast.max_unit_speed_residual == doctest::Approx(3.0));
  CHECK(fast.failing_samples.size() == 50);
}

TEST_CASE("AdS3 circle frame") {
  Geometry g = preset("ads3-circle", {{"r", 1.0}});
  for (double s : {0.0, 1.3, 4.0}) {
    FrameAdS3 f = frame_ads3(*g.curve, s);
    CHECK(f.kappa_g == doctest::Approx(kSqrt2));
    CHECK(std::abs(f.tau_g) < 1e-12);
    CHECK(f.delta == 1);
    CHECK(pseudo_inner(f.t, f.t) == doctest::Approx(1));
    CHECK(gram_residual(f) < 1e-12);
  }
  CHECK(frenet_residual(*g.curve, 1.0, Space::AdS3) < 1e-7);
  auto sp = sigma_pm_ads3(*g.curve, 0.7);
  CHECK(std::abs(sp.sigma_plus) < 1e-12);
  CHECK(std::abs(sp.sigma_minus) < 1e-12);
}

TEST_CASE("geodesic has no frame") {
  auto geo = geodesic_jet();
  CHECK_THROWS_AS(frame_ads3(*geo, 0.0), FrameUndefinedError);
}

TEST_CASE("AdS3 helix: constant curvature and torsion") {
  Geometry g = preset("ads3-helix");
  auto j = curve_jets_ads3(*g.curve, 0.4);
  const double k = j.kappa.value(), tau = j.tau.value();
  CHECK(std::abs(tau) > 1e-3);
  CHECK(std::abs(j.kappa.d(1)) < 1e-12);
  CHECK(j.sigma_plus.value() == doctest::Approx(-k * tau));
  CHECK(j.sigma_minus.value() == doctest::Approx(k * tau));
}

TEST_CASE("kappa' against finite differences on the perturbed curve") {
  Geometry g = preset("ads3-generic-curve");
  const double h = 1e-5;
  for (double s : {0.5, 1.5, 3.0, 5.0}) {
    double fd = (frame_ads3(*g.curve, s + h).kappa_g - frame_ads3(*g.curve, s - h).kappa_g) / (2 * h);
    CHECK(curve_jets_ads3(*g.curve, s).kappa.d(1) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("AdS4 helix frame") {
  Geometry g = preset("ads4-helix", {{"B", 1.0}, {"p", 1.0}});
  FrameAdS4 f = frame_ads4(*g.curve, 0.0);
  CHECK(f.kappa1 == doctest::Approx(2 * kSqrt2));
  CHECK(f.delta1 == 1);
  CHECK(gram_residual(f) < 1e-12);
  for (int i = 0; i < 100; ++i) CHECK(frenet_residual(*g.curve, 0.05 + 0.06 * i, Space::AdS4) < 1e-6);
  // autonomous: the case tag does not move with s
  CHECK(frame_ads4(*g.curve, 3.0).case_tag == f.case_tag);
  CHECK(f.case_tag == CurveCase::Case2);
}

TEST_CASE("generic AdS4 families cover the three cases") {
  for (int fam = 1; fam <= 3; ++fam) {
    Geometry g = preset("ads4-generic-curve", {{"family", double(fam)}});
    auto [a, b] = g.curve->domain();
    for (int i = 0; i <= 20; ++i) {
      FrameAdS4 f = frame_ads4(*g.curve, a + (b - a) * i / 20);
      CHECK(static_cast<int>(f.case_tag) == fam);
      CHECK(gram_residual(f) < 1e-9);
    }
  }
}

TEST_CASE("sigma is shared by rho-root and sigma-root structure") {
  // rho vanishes only on its roots; at those roots sigma is finite
  Geometry g = preset("ads4-generic-curve", {{"family", 1.0}});
  auto j = curve_jets_ads4(*g.curve, 0.1);
  for (double th : rho_roots(j)) {
    auto inv = invariants_from_jets(j, th);
    CHECK(std::abs(inv.rho) < 1e-9 * inv.rho_scale);
    CHECK(std::isfinite(inv.sigma));
  }
}
