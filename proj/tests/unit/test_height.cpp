#include <cmath>
#include <numbers>

#include "adsgeo/height_family.hpp"
#include "adsgeo/lightlike_sheets.hpp"
#include "doctest.h"

using namespace ads;
using std::numbers::pi;

TEST_CASE("AdS height function values") {
  Geometry h = preset("ads4-helix");
  BaseParams b{0.9, 0};
  AVec X = base_point(h, b);
  CHECK(std::abs(height(h, b, X)) < 1e-14);
  CHECK(height(h, b, -X) == doctest::Approx(2.0));
  CHECK(std::abs(height(h, b, lh_eval(h, b, 1.0, 0.7).position)) < 1e-12);
  CHECK_THROWS_AS(height(h, b, 2.0 * X), ModelSpaceError);
}

TEST_CASE("height jets against finite differences") {
  const double step = 1e-5;
  for (auto name : {"ads4-helix", "ads4-generic-curve", "ads3-generic-curve"}) {
    Geometry g = preset(name);
    auto [lo, hi] = g.curve->domain();
    double s = 0.4 * lo + 0.6 * hi;
    AVec lam = lh_eval(g, {0.3 * lo + 0.7 * hi, 0}, 1.0, 0.8).position;  // any point of AdS
    auto j = height_jet_curve(*g.curve, s, lam, 5);
    auto jp = height_jet_curve(*g.curve, s + step, lam, 4), jm = height_jet_curve(*g.curve, s - step, lam, 4);
    double scale = 1;
    for (double d : j.derivatives) scale = std::max(scale, std::abs(d));
    CHECK(std::abs((jp.value - jm.value) / (2 * step) - j.derivatives[0]) < 1e-7 * scale);
    for (int k = 1; k < 5; ++k) {
      double fd = (jp.derivatives[k - 1] - jm.derivatives[k - 1]) / (2 * step);
      CHECK(std::abs(fd - j.derivatives[k]) < 1e-7 * scale);
    }
  }
  Geometry h = preset("ads4-helix");
  CHECK_THROWS_AS(height_jet_curve(*h.curve, 0.1, base_point(h, {0.1, 0}), 6), OrderError);
}

TEST_CASE("second derivative at a Case 1 sheet point") {
  Geometry g = preset("ads4-generic-curve", {{"family", 1.0}});
  FrameAdS4 f = frame_ads4(*g.curve, 0.2);
  for (double mu : {-0.7, 0.3, 1.2}) {
    AVec lam = lh_eval(g, {0.2, 0}, 0.9, mu).position;
    auto j = height_jet_curve(*g.curve, 0.2, lam, 2);
    CHECK(std::abs(j.derivatives[0]) < 1e-12);
    CHECK(j.derivatives[1] == doctest::Approx(-mu * f.kappa1 - 1));
  }
}

TEST_CASE("A_k detection") {
  Geometry h = preset("ads4-helix");
  BaseParams b{0.5, 0};
  // off the sheet
  AVec off = lh_eval(h, {2.0, 0}, 0.3, 0.5).position;
  CHECK(detect_Ak_curve(*h.curve, 0.5, off).k == 0);
  // focal point with rho != 0 on the helix
  FocalPoint fp = focal_eval(h, b, 0.4, 0);
  CHECK(detect_Ak_curve(*h.curve, 0.5, fp.position).k == 2);
  // synthetic jets
  CHECK(detect_Ak({0, 0, 0, 1, 0, 0}).k == 2);
  CHECK(detect_Ak({0, 0, 0, 0, 1, 0}).k == 3);
  CHECK(detect_Ak({0, 0, 0, 0, 0, 1}).k == 4);
  CHECK(detect_Ak({0, 0, 0, 0, 0, 0}).k == -1);
  CHECK(detect_Ak({0, 1, 0, 0, 0, 0}).k == 0);
}

TEST_CASE("surface Hessian corank") {
  Geometry s = preset("ads4-generic-surface");
  FocalPoint fp = focal_eval(s, {0.2, 0.6}, 1.0, 0);
  auto sh = hessian_surface(*s.surface, 0.2, 0.6, fp.position);
  CHECK(sh.corank == 1);
  CHECK(sh.gradient.norm() < 1e-12);
  Geometry sph = preset("ads4-lightcone-sphere", {{"r", 1.0}});
  FocalPoint fs = focal_eval(sph, {0.3, 1.0}, 1.0, 0);
  CHECK(hessian_surface(*sph.surface, 0.3, 1.0, fs.position).corank == 2);
  AVec far = lh_eval(s, {-1.0, -1.0}, 1.0, 0.8).position;
  auto so = hessian_surface(*s.surface, 0.2, 0.6, far);
  CHECK(so.gradient.norm() > 1e-3);
  CHECK(so.corank == 0);
}

TEST_CASE("Morse family rank") {
  Geometry h = preset("ads4-helix");
  SheetPoint p = lh_eval(h, {0.7, 0}, 1.3, 0.4);
  if (p.position[0] > 0) CHECK(morse_family_rank(h, p.base, p.position).rank == 2);
  CHECK(morse_family_rank(h, p.base, p.position, true).rank == 2);
  Geometry s = preset("ads4-generic-surface");
  SheetPoint q = lh_eval(s, {0.1, 0.2}, -1.0, 0.5);
  CHECK(morse_family_rank(s, q.base, q.position, true).rank == 3);
  // lambda_{-1} <= 0 lies outside the chart
  AVec bad = p.position;
  bad[0] = -bad[0];
  bad[1] = -bad[1];
  CHECK_THROWS_AS(morse_family_rank(h, p.base, -p.position), ChartError);
}

TEST_CASE("versality matrix") {
  Geometry h = preset("ads4-helix");
  for (double s : {0.0, 1.0, 4.0}) {
    auto r = versality_rank_ads4(*h.curve, s);
    CHECK(r.rank == 4);
    CHECK(r.singular_values[3] > 1e-8 * r.singular_values[0]);
  }
  // circle of AdS^3 inside AdS^4: gamma''' = -gamma' so the rank drops
  std::vector<TermSum> c = {poly1(std::sqrt(2.0), 0), {}, cos1(1, 1), sin1(1, 1), {}};
  ParamCurve flat(c, {0, 2 * pi});
  CHECK(versality_rank_ads4(flat, 0.5).rank == 3);
}

TEST_CASE("Legendrian lift") {
  Geometry h = preset("ads4-helix");
  BaseParams b{1.2, 0};
  const double th = 0.7, mu = 0.45;
  SheetPoint p = lh_eval(h, b, th, mu);
  auto L = legendrian_lift(h, b, p.position);
  // contact: the covector kills every sheet tangent (chart coordinates lambda_0..lambda_n)
  double peak = 0;
  for (double x : L.raw) peak = std::max(peak, std::abs(x));
  for (const auto& t : sheet_tangents(h, b, th, mu)) {
    double r = 0;
    for (std::size_t j = 0; j < L.raw.size(); ++j) r += L.raw[j] * t[static_cast<int>(j) + 1];
    CHECK(std::abs(r) < 1e-8 * peak * std::sqrt(t.sum_sq()));
  }
  // projective normalization
  std::vector<double> scaled;
  for (double x : L.raw) scaled.push_back(2.5 * x);
  auto n2 = normalize_homogeneous(scaled);
  for (std::size_t j = 0; j < n2.size(); ++j) CHECK(n2[j] == doctest::Approx(L.homogeneous[j]));
  CHECK_THROWS_AS(normalize_homogeneous({0, 0, 0}), LiftDegenerateError);
}

TEST_CASE("Legendrian lift does not depend on the sheet parametrization") {
  Geometry g = preset("ads4-generic-surface");
  auto alt = std::make_shared<ParamSurface>(*g.surface);
  alt->set_reference(AVec{0.15, 1.0, 0.1, -0.05, 0.05});
  Geometry gb = g;
  gb.surface = alt;
  BaseParams b{0.3, -0.6};
  AVec na = nullcone_gauss(g, b, 1.0);
  SheetPoint pa = lh_eval(g, b, 1.0, 0.8);
  // find the section of the other family parallel to na and the matching mu
  for (double sb : {1.0, -1.0}) {
    AVec nb = nullcone_gauss(gb, b, sb);
    int k = 0;
    for (int i = 1; i < 5; ++i)
      if (std::abs(na[i]) > std::abs(na[k])) k = i;
    double c = nb[k] / na[k];
    if ((nb - c * na).max_abs() > 1e-9) continue;
    SheetPoint pb = lh_eval(gb, b, sb, 0.8 / c);
    CHECK((pb.position - pa.position).max_abs() < 1e-12);
    auto la = legendrian_lift(g, b, pa.position), lb = legendrian_lift(gb, b, pb.position);
    for (std::size_t j = 0; j < la.homogeneous.size(); ++j)
      CHECK(lb.homogeneous[j] == doctest::Approx(la.homogeneous[j]));
    return;
  }
  FAIL("no parallel section found");
}
