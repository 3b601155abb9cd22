#include "adsgeo/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "adsgeo/curve_frames.hpp"
#include "adsgeo/errors.hpp"
#include "adsgeo/height_family.hpp"
#include "adsgeo/lightlike_sheets.hpp"
#include "adsgeo/models.hpp"
#include "adsgeo/scan.hpp"
#include "adsgeo/surface_geometry.hpp"

namespace ads {

namespace {

// counts checks against a threshold, remembers the worst ratio
struct Tally {
  long checks = 0, failures = 0;
  double worst = 0;
  bool le(double value, double bound) {
    ++checks;
    worst = std::max(worst, std::isfinite(value) ? value / bound : INFINITY);
    bool ok = value < bound;
    if (!ok) ++failures;
    return ok;
  }
  bool ge(double value, double bound) {
    ++checks;
    bool ok = value > bound;
    if (!ok) ++failures;
    return ok;
  }
  void fail() {
    ++checks;
    ++failures;
  }
  void merge(const Tally& o) {
    checks += o.checks;
    failures += o.failures;
    worst = std::max(worst, o.worst);
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double enorm(const AVec& v) { return std::sqrt(v.sum_sq()); }

struct Obj {
  std::string label;
  Geometry g;
};

std::vector<Obj> curve_objects() {
  std::vector<Obj> out;
  for (auto n : {"ads3-circle", "ads3-helix", "ads3-generic-curve", "ads4-helix"})
    out.push_back({n, preset(n)});
  for (int fam = 1; fam <= 3; ++fam)
    out.push_back({"ads4-generic-curve/family" + std::to_string(fam),
                   preset("ads4-generic-curve", {{"family", double(fam)}})});
  return out;
}

std::vector<Obj> surface_objects() {
  std::vector<Obj> out;
  for (auto n : {"ads4-lightcone-sphere", "ads4-product-torus", "ads4-generic-surface"})
    out.push_back({n, preset(n)});
  return out;
}

std::vector<Obj> all_objects() {
  auto a = curve_objects();
  for (auto& s : surface_objects()) a.push_back(s);
  return a;
}

// evenly spaced interior samples, keeping `pad` away from the ends
std::vector<double> interior(Interval d, int n, double pad) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(d.first + pad + (d.second - d.first - 2 * pad) * (i + 0.5) / n);
  return out;
}

BaseParams random_base(const Geometry& g, std::mt19937& rng, double pad = 0.0) {
  auto pick = [&](Interval d) {
    std::uniform_real_distribution<double> U(d.first + pad, d.second - pad);
    return U(rng);
  };
  if (g.is_curve()) return {pick(g.curve->domain()), 0.0};
  return {pick(g.surface->domain_u()), pick(g.surface->domain_v())};
}

double random_fiber(const Geometry& g, std::mt19937& rng) {
  if (object_kind(g) == ObjectKind::CurveAdS4)
    return std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
  return rng() % 2 ? 1.0 : -1.0;
}

// ------------------------------------------------------------------ suites

SuiteResult algebra(const VerifyOptions& opt) {
  SuiteResult r;
  std::mt19937 rng(opt.seed);
  std::normal_distribution<double> N(0.0, 1.0);
  Tally t;
  double worst_o = 0, worst_d = 0;
  for (int dim : {4, 5})
    for (int i = 0; i < 1000; ++i) {
      std::vector<AVec> vs(dim - 1, AVec(dim));
      AVec x(dim);
      for (auto& v : vs)
        for (int k = 0; k < dim; ++k) v[k] = N(rng);
      for (int k = 0; k < dim; ++k) x[k] = N(rng);
      AVec w = wedge(vs);
      double prod = 1, vmax = 0;
      for (const auto& v : vs) {
        prod *= enorm(v);
        vmax = std::max(vmax, enorm(v));
      }
      for (const auto& v : vs) {
        double e = std::abs(pseudo_inner(v, w)) / (prod * vmax);
        worst_o = std::max(worst_o, e);
        t.le(e, 1e-9);
      }
      std::vector<AVec> rows{x};
      rows.insert(rows.end(), vs.begin(), vs.end());
      double e = std::abs(pseudo_inner(x, w) - det_rows(rows)) / (prod * enorm(x));
      worst_d = std::max(worst_d, e);
      t.le(e, 1e-9);
    }
  r.checks = t.checks;
  r.failures = t.failures;
  r.worst = t.worst;
  r.detail = "2000 tuples; max |<v,wedge>|/scale " + sci(worst_o) + ", max |<x,wedge>-det|/scale " +
             sci(worst_d);
  return r;
}

SuiteResult frames(const VerifyOptions& opt) {
  SuiteResult r;
  const auto& cfg = opt.cfg;
  ToleranceConfig fdc = cfg;
  fdc.fd_step = 1e-5;
  Tally t;
  std::ostringstream det;
  for (const auto& o : curve_objects()) {
    const auto& c = *o.g.curve;
    double wg = 0, wf = 0;
    long errs = 0;
    const bool ads3 = c.dim() == 4;
    for (double s : interior(c.domain(), 1000, 2 * fdc.fd_step)) {
      try {
        double g = ads3 ? gram_residual(frame_ads3(c, s, cfg)) : gram_residual(frame_ads4(c, s, cfg));
        double f = frenet_residual(c, s, ads3 ? Space::AdS3 : Space::AdS4, fdc);
        wg = std::max(wg, g);
        wf = std::max(wf, f);
        t.le(g, 1e-8);
        t.le(f, 1e-6);
      } catch (const AdsError&) {
        ++errs;
        t.fail();
      }
    }
    det << o.label << " gram " << sci(wg) << " frenet " << sci(wf);
    if (errs) det << " (" << errs << " frame errors)";
    det << "; ";
  }
  for (const auto& o : surface_objects()) {
    const auto& s = *o.g.surface;
    double wg = 0, ww = 0;
    long errs = 0;
    for (double u : interior(s.domain_u(), 32, 0.0))
      for (double v : interior(s.domain_v(), 32, 0.0)) {
        try {
          SurfaceFrame f = normal_frame(s, u, v, cfg);
          Eigen::MatrixXd G = gram({f.X, f.nT, f.nS});
          Eigen::Matrix3d want = Eigen::Vector3d(-1, -1, 1).asDiagonal();
          double g = (G - want).cwiseAbs().maxCoeff();
          for (const AVec* n : {&f.nT, &f.nS})
            for (const AVec* x : {&f.X_u1, &f.X_u2})
              g = std::max(g, std::abs(pseudo_inner(*n, *x)) / enorm(*x));
          wg = std::max(wg, g);
          t.le(g, 1e-8);
          for (int sign : {1, -1}) {
            double w = weingarten_residual(s, u, v, sign, fdc);
            ww = std::max(ww, w);
            t.le(w, 1e-6);
          }
        } catch (const AdsError&) {
          ++errs;
          t.fail();
        }
      }
    det << o.label << " gram " << sci(wg) << " weingarten " << sci(ww);
    if (errs) det << " (" << errs << " frame errors)";
    det << "; ";
  }
  r.checks = t.checks;
  r.failures = t.failures;
  r.worst = t.worst;
  r.detail = det.str();
  return r;
}

// null-sheet identities over a grid; returns per-object summary
std::string sheet_checks(const Geometry& g, const GridSpec& spec, const ToleranceConfig& cfg,
                         Tally& t) {
  SheetGrid grid = sheet_grid(g, spec, cfg);
  double wn = 0, wa = 0, wh = 0, wd = 0, wp = 0;
  long regular = 0;
  BaseParams last{NAN, NAN};
  double last_fiber = NAN;
  AVec ng;
  std::vector<AVec> d;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const auto& p = grid.points[i];
    if (p.base != last || p.fiber != last_fiber) {
      ng = nullcone_gauss(g, p.base, p.fiber, cfg);
      d = base_derivatives(g, p.base, 1);
      last = p.base;
      last_fiber = p.fiber;
      double e = std::abs(pseudo_inner(ng, ng)) / ng.sum_sq();
      wn = std::max(wn, e);
      t.le(e, 1e-8);
    }
    const double scale = std::max(1.0, p.position.sum_sq());
    double ea = std::abs(ads_residual(p.position)) / scale;
    double eh = std::abs(height(g, p.base, p.position, cfg)) / scale;
    double ed = 0;
    for (std::size_t k = 1; k < d.size(); ++k)
      ed = std::max(ed, std::abs(pseudo_inner(d[k], p.position)) / (enorm(d[k]) * std::sqrt(scale)));
    wa = std::max(wa, ea);
    wh = std::max(wh, eh);
    wd = std::max(wd, ed);
    t.le(ea, 1e-8);
    t.le(eh, 1e-8);
    t.le(ed, 1e-8);
    auto tv = sheet_tangents(g, p.base, p.fiber, p.mu, cfg);
    Eigen::MatrixXd J(tv[0].dim, tv.size());
    for (std::size_t c = 0; c < tv.size(); ++c)
      for (int k = 0; k < tv[c].dim; ++k) J(k, c) = tv[c][k];
    if (numeric_rank(J).rank == grid.regular_rank) {
      ++regular;
      double prod = 1;
      for (const auto& v : tv) prod *= v.sum_sq();
      double ep = std::abs(gram(tv).determinant()) / prod;
      wp = std::max(wp, ep);
      t.le(ep, 1e-8);
    }
  }
  return g.name + " " + std::to_string(grid.points.size()) + " pts (" + std::to_string(regular) +
         " regular): null " + sci(wn) + " ads " + sci(wa) + " H " + sci(wh) + " dH " + sci(wd) +
         " pullback " + sci(wp) + "; ";
}

SuiteResult null_sheet(const VerifyOptions& opt) {
  SuiteResult r;
  Tally t;
  std::string det;
  for (auto name : {"ads4-helix", "ads4-generic-curve"}) {
    Geometry g = preset(name);
    GridSpec sp = default_grid(g, 200, 64, 21);
    det += sheet_checks(g, sp, opt.cfg, t);
  }
  for (auto name : {"ads3-circle", "ads3-helix", "ads3-generic-curve"}) {
    Geometry g = preset(name);
    det += sheet_checks(g, default_grid(g, 200, 2, 21), opt.cfg, t);
  }
  for (const auto& o : surface_objects()) det += sheet_checks(o.g, default_grid(o.g, 30, 2, 21), opt.cfg, t);
  r.checks = t.checks;
  r.failures = t.failures;
  r.worst = t.worst;
  r.detail = det;
  return r;
}

SuiteResult focal(const VerifyOptions& opt) {
  SuiteResult r;
  const auto& cfg = opt.cfg;
  std::mt19937 rng(opt.seed + 3);
  Tally t;
  std::ostringstream det;
  for (const auto& o : all_objects()) {
    const Geometry& g = o.g;
    double w0 = 0, wmin_off = INFINITY;
    long found = 0, nondeg = 0;
    for (int i = 0; i < 200; ++i) {
      BaseParams b = random_base(g, rng);
      double fb = random_fiber(g, rng);
      std::vector<FocalRoot> roots;
      try {
        roots = focal_mu(g, b, fb, cfg);
      } catch (const AdsError&) {
        continue;
      }
      const AVec X = base_point(g, b);
      const AVec ng = nullcone_gauss(g, b, fb, cfg);
      for (const auto& root : roots) {
        ++found;
        FocalPoint fp = focal_eval(g, b, fb, root.branch_index, cfg);
        if (g.is_curve()) {
          double h2 = std::abs(height_jet_curve(*g.curve, b[0], fp.position, 2, cfg).derivatives[1]);
          w0 = std::max(w0, h2);
          t.le(h2, 1e-8);
          ++nondeg;
          for (double f : {0.9, 1.1}) {
            AVec lam = X + (root.mu_star * f) * ng;
            double off = std::abs(height_jet_curve(*g.curve, b[0], lam, 2, cfg).derivatives[1]);
            wmin_off = std::min(wmin_off, off);
            t.ge(off, 1e-3);
          }
        } else {
          const auto& s = *g.surface;
          SurfaceFrame fr = normal_frame(s, b[0], b[1], cfg);
          const double scale = fr.g.determinant();
          double dh = std::abs(hessian_surface(s, b[0], b[1], fp.position, cfg).hessian.determinant()) / scale;
          w0 = std::max(w0, dh);
          t.le(dh, 1e-8);
          // the other principal radius must stay clear of mu*(1 +- 0.1)
          auto pd = principal_curvatures(s, b[0], b[1], static_cast<int>(fb), cfg);
          double k_this = pd.kappas[root.branch_index], k_other = pd.kappas[1 - root.branch_index];
          bool clear = !pd.umbilic;
          for (double f : {0.9, 1.1}) clear = clear && std::abs(f * k_other / k_this - 1) > 0.05;
          if (!clear) continue;
          ++nondeg;
          for (double f : {0.9, 1.1}) {
            AVec lam = X + (root.mu_star * f) * ng;
            double off = std::abs(hessian_surface(s, b[0], b[1], lam, cfg).hessian.determinant()) / scale;
            wmin_off = std::min(wmin_off, off);
            t.ge(off, 1e-3);
          }
        }
      }
    }
    det << o.label << " focal " << found << " (non-degenerate " << nondeg << ") max "
        << (g.is_curve() ? "|h''| " : "|det Hess| ") << sci(w0) << " min off-focal " << sci(wmin_off)
        << "; ";
    if (found == 0) t.fail();
  }
  r.checks = t.checks;
  r.failures = t.failures;
  r.worst = t.worst;
  r.detail = det.str();
  return r;
}

SuiteResult fiber(const VerifyOptions& opt) {
  SuiteResult r;
  std::mt19937 rng(opt.seed + 5);
  Geometry g = preset("ads4-helix");
  Tally t;
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    BaseParams b = random_base(g, rng);
    double th = random_fiber(g, rng);
    double e = std::abs(fiber_shape_eigenvalue(*g.curve, b[0], th, opt.cfg).fiber + 1.0);
    worst = std::max(worst, e);
    t.le(e, 1e-9);
  }
  r.checks = t.checks;
  r.failures = t.failures;
  r.worst = t.worst;
  r.detail = "ads4-helix 1000 (s,theta) samples, max |eigenvalue + 1| " + sci(worst);
  return r;
}

SuiteResult collapse(const VerifyOptions& opt) {
  SuiteResult r;
  Geometry g = preset("ads4-lightcone-sphere", {{"r", 1.0}});
  const auto& s = *g.surface;
  const AVec lam0 = AVec::basis(5, -1), lam1 = AVec::basis(5, 0);
  Tally t;
  long umb = 0, pts = 0, to0 = 0, to1 = 0, focal_total = 0;
  double w0 = 0, w1 = 0;
  for (double u : interior(s.domain_u(), 20, 0.0))
    for (double v : interior(s.domain_v(), 20, 0.0)) {
      ++pts;
      bool has0 = false, ok = true;
      for (int sign : {1, -1}) {
        auto pd = principal_curvatures(s, u, v, sign, opt.cfg);
        if (pd.umbilic) ++umb;
        else t.fail();
        for (const auto& root : focal_mu(g, {u, v}, sign, opt.cfg)) {
          ++focal_total;
          AVec p = focal_eval(g, {u, v}, sign, root.branch_index, opt.cfg).position;
          double d0 = enorm(p - lam0), d1 = enorm(p - lam1);
          if (d0 < 1e-7) {
            has0 = true;
            ++to0;
            w0 = std::max(w0, d0);
          } else if (d1 < 1e-7) {
            ++to1;
            w1 = std::max(w1, d1);
          } else {
            ok = false;
          }
        }
      }
      t.checks += 1;
      if (!(has0 && ok)) ++t.failures;
    }
  r.checks = t.checks;
  r.failures = t.failures;
  r.worst = t.worst;
  r.detail = std::to_string(pts) + " grid points, umbilic on " + std::to_string(umb) + "/" +
             std::to_string(2 * pts) + " (point, sign) pairs; " + std::to_string(focal_total) +
             " focal points: " + std::to_string(to0) + " at (1,0,0,0,0) (max dist " + sci(w0) +
             "), " + std::to_string(to1) + " at the second vertex (0,1,0,0,0) (max dist " + sci(w1) + ")";
  return r;
}

SuiteResult classification(const VerifyOptions& opt) {
  SuiteResult r;
  Tally t;
  std::ostringstream det;
  auto tally_scan = [&](const std::string& label, const ScanResult& sr, bool need_100) {
    long agree = 0;
    for (const auto& p : sr.points) agree += p.report.consistent();
    long n = static_cast<long>(sr.points.size());
    t.checks += n;
    t.failures += n - agree;
    if (need_100 && n < 100) t.fail();
    det << label << " " << agree << "/" << n << " agree; ";
  };
  for (int fam = 1; fam <= 3; ++fam) {
    Geometry g = preset("ads4-generic-curve", {{"family", double(fam)}});
    ScanResult sr = scan_ads4_curve(*g.curve, 100, 1, opt.seed, opt.cfg);
    std::string tag = sr.points.empty() ? "?" : sr.points.front().report.case_tag;
    tally_scan("family " + std::to_string(fam) + " (" + tag + ")", sr, true);
  }
  tally_scan("ads4-helix", scan_ads4_curve(*preset("ads4-helix").curve, 100, 1, opt.seed, opt.cfg), true);
  tally_scan("ads3-generic-curve", scan_ads3_curve(*preset("ads3-generic-curve").curve, 100, opt.cfg), true);
  tally_scan("ads3-helix", scan_ads3_curve(*preset("ads3-helix").curve, 100, opt.cfg), true);
  {
    ScanResult sr = scan_ads3_curve(*preset("ads3-circle").curve, 100, opt.cfg);
    ++t.checks;
    if (!sr.degenerate_family) ++t.failures;
    det << "ads3-circle " << (sr.degenerate_family ? "flagged degenerate family" : "NOT flagged degenerate")
        << "; ";
  }
  tally_scan("ads4-generic-surface", scan_surface(*preset("ads4-generic-surface").surface, 16, opt.cfg), false);
  r.checks = t.checks;
  r.failures = t.failures;
  r.detail = det.str();
  return r;
}

SuiteResult models(const VerifyOptions& opt) {
  SuiteResult r;
  Tally t;
  std::ostringstream det;
  const auto& cfg = opt.cfg;
  const double pitch = 1e-3, tol = 1e-3;
  // A3: the singular set of the swallowtail is C(2,3,4) x R up to the linear map
  // (u^2,u^3,u^4) -> (-8u^3, -3u^4, -6u^2); domain locus u2 = -6 u1^2
  {
    std::vector<std::vector<double>> dom, dmod, img, imod;
    for (double u3 : {-0.5, 0.0, 0.5}) {
      BruteGrid bg{{-0.12, -0.1, u3}, {0.12, 0.05, u3 + pitch}, pitch};
      for (const auto& p : brute_force_critical_set(SingularityLabel::A3_Swallowtail, bg, cfg))
        if (std::abs(p.domain[2] - u3) < 1e-12) {
          dom.push_back({p.domain[0], p.domain[1]});
          img.push_back(p.image);
        }
      for (int i = 0; i <= 24000; ++i) {
        double u = -0.12 + i * 1e-5;
        dmod.push_back({u, -6 * u * u});
        auto c = eval_model_singular_set(ModelSet::C234, {u});
        imod.push_back({-8 * c[1], -3 * c[2], -6 * c[0], u3});
      }
    }
    double hd = hausdorff(dom, dmod), hi = hausdorff(img, imod);
    t.le(hd, tol);
    t.le(hi, tol);
    if (dom.size() < 100) t.fail();
    det << "A3 " << dom.size() << " pts, domain H " << sci(hd) << " image H " << sci(hi) << "; ";
  }
  // D4+: critical set is the cone u3^2 = 36 u1 u2
  {
    BruteGrid bg{{-0.05, -0.05, -0.05}, {0.05, 0.05, 0.05}, pitch};
    auto pts = brute_force_critical_set(SingularityLabel::D4_Plus, bg, cfg);
    double implicit = 0;
    std::vector<std::vector<double>> d;
    for (const auto& p : pts) {
      const double u1 = p.domain[0], u2 = p.domain[1], u3 = p.domain[2];
      double F = u3 * u3 - 36 * u1 * u2;
      double gn = std::sqrt(36 * 36 * (u1 * u1 + u2 * u2) + 4 * u3 * u3);
      implicit = std::max(implicit, gn > 0 ? std::abs(F) / gn : std::abs(F));
      d.push_back(p.domain);
    }
    std::vector<std::vector<double>> cone;
    for (int i = 0; i <= 400; ++i)
      for (int j = 0; j <= 400; ++j) {
        double u1 = -0.05 + i * 2.5e-4, u3 = -0.05 + j * 2.5e-4;
        if (std::abs(u1) < 1e-12) continue;
        double u2 = u3 * u3 / (36 * u1);
        if (std::abs(u2) <= 0.05) cone.push_back({u1, u2, u3});
      }
    double back = directed_hausdorff(cone, d);
    t.le(implicit, tol);
    t.le(back, tol);
    if (pts.size() < 100) t.fail();
    det << "D4+ " << pts.size() << " pts, distance to cone " << sci(implicit) << ", cone to pts "
        << sci(back) << "; ";
  }
  // singular curve of the D4+ front, through the cone parametrization
  {
    std::vector<std::vector<double>> mod;
    for (int i = 0; i <= 20000; ++i) mod.push_back(eval_model_singular_set(ModelSet::SigmaPU, {-1 + i * 1e-4}));
    BruteGrid bg{{-1.0003, -1.0003}, {1.0, 1.0}, pitch};
    std::vector<std::vector<double>> img;
    for (const auto& p : brute_force_critical_set(purse_map(1), bg, cfg)) img.push_back(p.image);
    double h = img.empty() ? INFINITY : hausdorff(img, mod);
    t.le(h, tol);
    auto other = brute_force_critical_set(purse_map(-1), bg, cfg);
    ++t.checks;
    if (!other.empty()) ++t.failures;
    det << "Sigma(PU) " << img.size() << " pts, H " << sci(h) << " (other nappe: " << other.size()
        << " critical pts)";
  }
  r.checks = t.checks;
  r.failures = t.failures;
  r.worst = t.worst;
  r.detail = det.str();
  return r;
}

SuiteResult morse(const VerifyOptions& opt) {
  SuiteResult r;
  std::mt19937 rng(opt.seed + 9);
  std::uniform_real_distribution<double> mu_mag(0.1, 2.0);
  Tally t;
  std::ostringstream det;
  for (const auto& o : all_objects()) {
    const Geometry& g = o.g;
    long ok = 0;
    for (int i = 0; i < 200; ++i) {
      BaseParams b = random_base(g, rng);
      double fb = random_fiber(g, rng);
      double mu = (rng() % 2 ? 1 : -1) * mu_mag(rng);
      try {
        SheetPoint p = lh_eval(g, b, fb, mu, opt.cfg);
        auto rep = morse_family_rank(g, b, p.position, true, opt.cfg);
        ++t.checks;
        if (rep.rank == base_dim(g) + 1) ++ok;
        else ++t.failures;
      } catch (const AdsError&) {
        t.fail();
      }
    }
    det << o.label << " " << ok << "/200; ";
  }
  Geometry h = preset("ads4-helix");
  long vok = 0;
  double worst_ratio = INFINITY;
  for (int i = 0; i < 100; ++i) {
    BaseParams b = random_base(h, rng);
    auto rep = versality_rank_ads4(*h.curve, b[0]);
    double ratio = rep.singular_values.size() >= 4 ? rep.singular_values[3] / rep.singular_values[0] : 0.0;
    worst_ratio = std::min(worst_ratio, ratio);
    ++t.checks;
    if (rep.rank == 4 && ratio > 1e-8) ++vok;
    else ++t.failures;
  }
  det << "versality ads4-helix " << vok << "/100 rank 4, min sigma4/sigma1 " << sci(worst_ratio);
  r.checks = t.checks;
  r.failures = t.failures;
  r.detail = det.str();
  return r;
}

SuiteResult frame_choice(const VerifyOptions& opt) {
  SuiteResult r;
  Tally t;
  std::ostringstream det;
  for (auto name : {"ads4-generic-surface", "ads4-product-torus"}) {
    Geometry ga = preset(name);
    auto alt = std::make_shared<ParamSurface>(*ga.surface);
    alt->set_reference(AVec{0.15, 1.0, 0.1, -0.05, 0.05});
    Geometry gb = ga;
    gb.surface = alt;
    GridSpec sp = default_grid(ga, 40, 2, 21);
    sp.unit_ng = true;
    sp.mu = {-1.0, 1.0, 21};
    SheetGrid a = sheet_grid(ga, sp, opt.cfg), b = sheet_grid(gb, sp, opt.cfg);
    double scale = 0;
    for (const auto& p : a.points) scale = std::max(scale, enorm(p.position));
    double dist = compare_sheets(a, b);
    t.le(dist, 1e-6 * scale);
    // pointwise parallelism of the two sections, both signs
    double worst = 0, nt_gap = 0;
    const auto& s = *ga.surface;
    for (double u : interior(s.domain_u(), 20, 0.0))
      for (double v : interior(s.domain_v(), 20, 0.0)) {
        SurfaceFrame fa = normal_frame(s, u, v, opt.cfg), fb = normal_frame(*alt, u, v, opt.cfg);
        nt_gap = std::max(nt_gap, enorm(fa.nT - fb.nT));
        for (int sa : {1, -1}) {
          AVec na = ng_surface(fa, sa);
          double best = INFINITY;
          for (int sb : {1, -1}) {
            AVec nb = ng_surface(fb, sb);
            Eigen::MatrixXd M(5, 2);
            for (int k = 0; k < 5; ++k) {
              M(k, 0) = na[k] / enorm(na);
              M(k, 1) = nb[k] / enorm(nb);
            }
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
            best = std::min(best, svd.singularValues()(1) / svd.singularValues()(0));
          }
          worst = std::max(worst, best);
          t.le(best, 1e-9);
        }
      }
    det << name << " sheet distance " << sci(dist) << " (scale " << sci(scale) << "), rank-1 residual "
        << sci(worst) << ", sections differ by up to " << sci(nt_gap) << "; ";
  }
  r.checks = t.checks;
  r.failures = t.failures;
  r.worst = t.worst;
  r.detail = det.str();
  return r;
}

struct Entry {
  const char* name;
  SuiteResult (*fn)(const VerifyOptions&);
};

const Entry kSuites[] = {
    {"algebra", algebra},
    {"frames", frames},
    {"null-sheet", null_sheet},
    {"focal", focal},
    {"fiber-eigenvalue", fiber},
    {"lightcone-collapse", collapse},
    {"classification", classification},
    {"model-sets", models},
    {"morse-versality", morse},
    {"frame-choice", frame_choice},
};

}  // namespace

int suite_count() { return static_cast<int>(std::size(kSuites)); }

std::string suite_name(int id) {
  if (id < 1 || id > suite_count()) throw GridError("no suite " + std::to_string(id));
  return kSuites[id - 1].name;
}

SuiteResult run_suite(int id, const VerifyOptions& opt) {
  const std::string name = suite_name(id);
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  try {
    r = kSuites[id - 1].fn(opt);
    r.pass = r.failures == 0 && r.checks > 0;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("aborted: ") + e.what();
  }
  r.id = id;
  r.name = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opt,
                                    const std::function<void(const SuiteResult&)>& progress) {
  std::vector<SuiteResult> out;
  for (int id = 1; id <= suite_count(); ++id) {
    out.push_back(run_suite(id, opt));
    if (progress) progress(out.back());
  }
  return out;
}

std::string format_suite_line(const SuiteResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "[%s] %2d %-18s %ld/%ld checks passed (%.1fs)", r.pass ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.checks - r.failures, r.checks, r.seconds);
  return std::string(head) + "\n       " + r.detail;
}

}  // namespace ads
