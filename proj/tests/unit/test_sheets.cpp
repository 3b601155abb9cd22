#include <cmath>
#include <numbers>
#include <random>

#include "adsgeo/height_family.hpp"
#include "adsgeo/lightlike_sheets.hpp"
#include "adsgeo/surface_geometry.hpp"
#include "doctest.h"

using namespace ads;
using std::numbers::pi;

TEST_CASE("nullcone Gauss images are null") {
  Geometry h = preset("ads4-helix");
  FrameAdS4 f = frame_ads4(*h.curve, 0.7);
  AVec a = ng_curve_ads4(f, 0.0), b = ng_curve_ads4(f, pi / 2);
  CHECK((a - (f.nT() + f.b1())).max_abs() < 1e-15);
  CHECK((b - (f.nT() + f.b2())).max_abs() < 1e-15);
  CHECK(std::abs(pseudo_inner(a, a)) < 1e-12);
  CHECK(std::abs(pseudo_inner(b, b)) < 1e-12);

  Geometry s = preset("ads4-generic-surface");
  SurfaceFrame sf = normal_frame(*s.surface, 0.1, 0.2);
  for (int sign : {1, -1}) {
    AVec n = ng_surface(sf, sign);
    CHECK((n - (sf.nT + double(sign) * sf.nS)).max_abs() < 1e-15);
    CHECK(std::abs(pseudo_inner(n, n)) < 1e-12);
  }
}

TEST_CASE("sheet points stay on AdS and on the height-function zero set") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> U(0, 1);
  for (auto name : {"ads4-helix", "ads4-generic-curve", "ads3-generic-curve", "ads4-generic-surface"}) {
    Geometry g = preset(name);
    CHECK((lh_eval(g, {0.2, 0.1}, 1.0, 0.0).position - base_point(g, {0.2, 0.1})).max_abs() == 0);
    for (int i = 0; i < 50; ++i) {
      BaseParams b{};
      if (g.is_curve()) {
        auto [lo, hi] = g.curve->domain();
        b = {lo + (hi - lo) * U(rng), 0};
      } else {
        b = {-1.4 + 2.8 * U(rng), -1.4 + 2.8 * U(rng)};
      }
      double fb = object_kind(g) == ObjectKind::CurveAdS4 ? 2 * pi * U(rng) : (U(rng) < 0.5 ? 1.0 : -1.0);
      double mu = -2 + 4 * U(rng);
      SheetPoint p = lh_eval(g, b, fb, mu);
      CHECK(std::abs(ads_residual(p.position)) < 1e-10);
      CHECK(std::abs(height(g, b, p.position)) < 1e-10);
      auto d = base_derivatives(g, b, 1);
      for (std::size_t k = 1; k < d.size(); ++k) CHECK(std::abs(pseudo_inner(d[k], p.position)) < 1e-10);
    }
  }
}

TEST_CASE("focal distances") {
  // Case 1 family: mu* = -1/kappa1 whatever theta is
  Geometry c1 = preset("ads4-generic-curve", {{"family", 1.0}});
  FrameAdS4 f1 = frame_ads4(*c1.curve, 0.1);
  REQUIRE(f1.case_tag == CurveCase::Case1);
  for (double th : {0.0, 1.0, 2.5, 4.0}) {
    auto r = focal_mu(c1, {0.1, 0}, th);
    REQUIRE(r.size() == 1);
    CHECK(r[0].mu_star == doctest::Approx(-1.0 / f1.kappa1));
  }
  // Case 2 helix: |mu*| = 1/(kappa1 |cos theta|), nothing at cos theta = 0
  Geometry h = preset("ads4-helix");
  FrameAdS4 fh = frame_ads4(*h.curve, 0.3);
  for (double th : {0.0, 0.8, 2.0}) {
    auto r = focal_mu(h, {0.3, 0}, th);
    REQUIRE(r.size() == 1);
    CHECK(std::abs(r[0].mu_star) == doctest::Approx(1.0 / (fh.kappa1 * std::abs(std::cos(th)))));
  }
  CHECK(focal_mu(h, {0.3, 0}, pi / 2).empty());
  CHECK_THROWS_AS(focal_eval(h, {0.3, 0}, pi / 2, 0), NoFocalPointError);
  // umbilic: both branches coincide
  Geometry sph = preset("ads4-lightcone-sphere", {{"r", 1.0}});
  auto r = focal_mu(sph, {0.4, 1.0}, 1.0);
  REQUIRE(r.size() == 2);
  CHECK(r[0].mu_star == doctest::Approx(r[1].mu_star));
}

TEST_CASE("the height function is critical to second order at focal points") {
  Geometry h = preset("ads4-helix");
  for (double th : {0.0, 0.6, 2.4}) {
    FocalPoint fp = focal_eval(h, {1.1, 0}, th, 0);
    auto j = height_jet_curve(*h.curve, 1.1, fp.position, 2);
    CHECK(std::abs(j.value) < 1e-12);
    CHECK(std::abs(j.derivatives[0]) < 1e-12);
    CHECK(std::abs(j.derivatives[1]) < 1e-10);
  }
  Geometry s = preset("ads4-generic-surface");
  for (int b = 0; b < 2; ++b) {
    FocalPoint fp = focal_eval(s, {0.3, -0.2}, 1.0, b);
    auto sh = hessian_surface(*s.surface, 0.3, -0.2, fp.position);
    CHECK(std::abs(sh.hessian.determinant()) < 1e-10);
    CHECK(sh.corank == 1);
  }
}

TEST_CASE("discriminant sets") {
  Geometry h = preset("ads4-helix");
  GridSpec sp = default_grid(h, 6, 4, 3);
  CHECK(discriminant_samples(h, 1, sp).points.size() == sheet_grid(h, sp).points.size());
  Geometry c = preset("ads3-circle");
  auto d3 = discriminant_samples(c, 3, default_grid(c, 20, 2, 3));
  CHECK(d3.degenerate);
  CHECK(d3.note.find("degenerate family") != std::string::npos);
  GridSpec bad = default_grid(h, 6, 4, 3);
  bad.u.n = 1;
  CHECK_THROWS_AS(sheet_grid(h, bad), GridError);
}

TEST_CASE("grid spec parsing") {
  Geometry h = preset("ads4-helix");
  GridSpec sp = parse_grid(h, "s=0:6.28:200,theta=0:6.28:100,mu=-2:2:50");
  CHECK(sp.u.n == 200);
  CHECK(sp.theta.n == 100);
  CHECK(sp.mu.lo == -2);
  CHECK_THROWS(parse_grid(h, "s=0:1"));
  Geometry s = preset("ads4-generic-surface");
  GridSpec ss = parse_grid(s, "u=-1:1:5,v=-1:1:4,sign=-1,mu=-1:1:3");
  CHECK(ss.signs == std::vector<int>{-1});
  CHECK(sheet_grid(s, ss).points.size() == 5 * 4 * 3);
}

TEST_CASE("fiber shape eigenvalue is -1 on the helix") {
  Geometry h = preset("ads4-helix");
  for (double s : {0.2, 2.0, 5.0}) {
    CHECK(fiber_shape_eigenvalue(*h.curve, s, 0.0).fiber == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(fiber_shape_eigenvalue(*h.curve, s, pi / 2).fiber == doctest::Approx(-1.0).epsilon(1e-9));
  }
}

TEST_CASE("sheet comparison") {
  Geometry h = preset("ads4-helix");
  GridSpec sp = default_grid(h, 8, 4, 3);
  SheetGrid a = sheet_grid(h, sp);
  CHECK(compare_sheets(a, a) == 0);
  std::vector<AVec> pa, pb;
  for (const auto& p : a.points) {
    pa.push_back(p.position);
    pb.push_back(p.position + AVec{0, 0, 0, 0, 100.0});
  }
  CHECK(compare_point_sets(pa, pb) == doctest::Approx(100.0).epsilon(0.05));
}

TEST_CASE("two admissible timelike normals give parallel sections") {
  Geometry g = preset("ads4-generic-surface");
  auto alt = std::make_shared<ParamSurface>(*g.surface);
  alt->set_reference(AVec{0.15, 1.0, 0.1, -0.05, 0.05});
  SurfaceFrame fa = normal_frame(*g.surface, 0.5, 0.5), fb = normal_frame(*alt, 0.5, 0.5);
  CHECK((fa.nT - fb.nT).max_abs() > 1e-3);
  for (int sa : {1, -1}) {
    AVec na = ng_surface(fa, sa);
    double best = 1;
    for (int sb : {1, -1}) {
      AVec nb = ng_surface(fb, sb);
      Eigen::MatrixXd M(5, 2);
      for (int k = 0; k < 5; ++k) {
        M(k, 0) = na[k];
        M(k, 1) = nb[k];
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
      best = std::min(best, svd.singularValues()(1) / svd.singularValues()(0));
    }
    CHECK(best < 1e-9);
  }
}
