#include "adsgeo/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace ads {

namespace {

bool vanishes(double x, double scale, const ToleranceConfig& cfg) {
  return std::abs(x) < cfg.zero_detect_tol * std::max(1.0, scale);
}

constexpr int kDeg = 5;

// bivariate polynomial sum c[i][j] x^i y^j, total degree <= 5
struct BiPoly {
  std::array<std::array<double, kDeg + 1>, kDeg + 1> c{};
};

BiPoly mul(const BiPoly& p, const BiPoly& q) {
  BiPoly r;
  for (int i = 0; i <= kDeg; ++i)
    for (int j = 0; i + j <= kDeg; ++j) {
      if (p.c[i][j] == 0) continue;
      for (int k = 0; i + k <= kDeg; ++k)
        for (int l = 0; i + j + k + l <= kDeg; ++l) r.c[i + k][j + l] += p.c[i][j] * q.c[k][l];
    }
  return r;
}

// f(a x + b y, c x + d y)
BiPoly substitute(const BiPoly& f, double a, double b, double c, double d) {
  BiPoly U, V, one;
  U.c[1][0] = a;
  U.c[0][1] = b;
  V.c[1][0] = c;
  V.c[0][1] = d;
  one.c[0][0] = 1;
  std::array<BiPoly, kDeg + 1> pu, pv;
  pu[0] = pv[0] = one;
  for (int k = 1; k <= kDeg; ++k) {
    pu[k] = mul(pu[k - 1], U);
    pv[k] = mul(pv[k - 1], V);
  }
  BiPoly r;
  for (int i = 0; i <= kDeg; ++i)
    for (int j = 0; i + j <= kDeg; ++j) {
      if (f.c[i][j] == 0) continue;
      BiPoly t = mul(pu[i], pv[j]);
      for (int k = 0; k <= kDeg; ++k)
        for (int l = 0; k + l <= kDeg; ++l) r.c[k][l] += f.c[i][j] * t.c[k][l];
    }
  return r;
}

Jet eval(const BiPoly& f, const Jet& x, const Jet& y) {
  std::array<Jet, kDeg + 1> px, py;
  px[0] = Jet(1.0, x.ord);
  py[0] = Jet(1.0, x.ord);
  for (int k = 1; k <= kDeg; ++k) {
    px[k] = px[k - 1] * x;
    py[k] = py[k - 1] * y;
  }
  Jet r(0.0, x.ord);
  for (int i = 0; i <= kDeg; ++i)
    for (int j = 0; i + j <= kDeg; ++j)
      if (f.c[i][j] != 0) r = r + f.c[i][j] * (px[i] * py[j]);
  return r;
}

BiPoly dy(const BiPoly& f) {
  BiPoly r;
  for (int i = 0; i <= kDeg; ++i)
    for (int j = 0; i + j < kDeg; ++j) r.c[i][j] = (j + 1) * f.c[i][j + 1];
  return r;
}

// height function at lambda as a Taylor polynomial in (u - u1, v - u2)
BiPoly height_taylor(const ParamSurface& s, double u1, double u2, const AVec& lambda) {
  BiPoly f;
  double fact[kDeg + 1] = {1, 1, 2, 6, 24, 120};
  for (int i = 0; i <= kDeg; ++i)
    for (int j = 0; i + j <= kDeg; ++j)
      f.c[i][j] = pseudo_inner(s.partial(u1, u2, i, j), lambda) / (fact[i] * fact[j]);
  f.c[0][0] += 1.0;
  return f;
}

struct SurfaceAnalysis {
  CriteriaReport report;
  int k = 0;
};

SurfaceAnalysis analyse_surface(const ParamSurface& s, double u1, double u2, int sign, int branch,
                                const ToleranceConfig& cfg) {
  Geometry g;
  g.surface = std::make_shared<ParamSurface>(s);
  SurfaceAnalysis out;
  auto& r = out.report;
  FocalPoint fp = focal_eval(g, {u1, u2}, sign, branch, cfg);
  r.mu_star = fp.mu_star;
  r.focal = fp.position;
  r.case_tag = sign > 0 ? "nT+nS" : "nT-nS";
  SurfaceHeight sh = hessian_surface(s, u1, u2, fp.position, cfg);
  r.corank = sh.corank;
  BiPoly f = height_taylor(s, u1, u2, fp.position);
  if (sh.corank == 2) {
    const double a = f.c[3][0], b = f.c[2][1], c = f.c[1][2], d = f.c[0][3];
    r.cubic_discriminant = cubic_discriminant(a, b, c, d);
    r.label = classify_binary_cubic(a, b, c, d, cfg);
    r.ak_order = -1;
    if (r.label == SingularityLabel::Degenerate)
      r.advisory_notes.push_back("umbilic focal point with vanishing cubic: outside the generic D4 dichotomy");
    else
      r.advisory_notes.push_back("D4 neighbourhood conditions (nearby ridge structure) are not decided pointwise");
    out.k = -1;
    return out;
  }
  if (sh.corank == 0) {
    r.label = SingularityLabel::Degenerate;
    r.ak_order = 1;
    r.advisory_notes.push_back("Hessian is non-degenerate at the focal point");
    out.k = 1;
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(sh.hessian);
  int ker = std::abs(es.eigenvalues()(0)) < std::abs(es.eigenvalues()(1)) ? 0 : 1;
  Eigen::Vector2d kv = es.eigenvectors().col(ker), cv = es.eigenvectors().col(1 - ker);
  // x along the kernel, y along the complement
  BiPoly fr = substitute(f, kv(0), cv(0), kv(1), cv(1));
  const double fyy = 2 * fr.c[0][2];
  const Jet x = Jet::variable(0.0, kDeg);
  Jet phi(0.0, kDeg);
  const BiPoly fy = dy(fr);
  for (int m = 1; m < kDeg; ++m) {
    Jet res = eval(fy, x, phi);
    phi.a[m] = -res.a[m] / fyy;
  }
  Jet gx = eval(fr, x, phi);
  std::vector<double> h;
  double fact = 1;
  for (int j = 0; j <= kDeg; ++j) {
    if (j > 0) fact *= j;
    h.push_back(gx.a[j] * fact);
  }
  AkReport ak = detect_Ak(h, cfg);
  out.k = ak.k;
  r.ak_order = ak.k;
  r.ridge_order = ak.k >= 2 ? ak.k - 2 : -1;
  r.label = label_for_ak(ak.k);
  if (ak.k == 1) r.label = SingularityLabel::Degenerate;
  if (ak.k == 4) r.advisory_notes.push_back("butterfly also needs nearby 1-ridge structure, not decided pointwise");
  return out;
}

}  // namespace

SingularityLabel ladder(double rho, double rho_scale, double sigma, double sigma_scale,
                        double sigma_prime, double sigma_prime_scale, const ToleranceConfig& cfg) {
  if (!vanishes(rho, rho_scale, cfg)) return SingularityLabel::A2_CuspidalEdge;
  if (!vanishes(sigma, sigma_scale, cfg)) return SingularityLabel::A3_Swallowtail;
  if (!vanishes(sigma_prime, sigma_prime_scale, cfg)) return SingularityLabel::A4_Butterfly;
  return SingularityLabel::Degenerate;
}

CriteriaReport classify_evolute_point_ads3(const CurveSource& c, double s, int branch,
                                           const ToleranceConfig& cfg) {
  if (branch != 1 && branch != -1) throw InputError("evolute branch must be +1 or -1");
  auto j = curve_jets_ads3(c, s, cfg);
  const auto& f = j.frame;
  if (vanishes(f.kappa_g, 1.0, cfg)) throw NoFocalPointError("geodesic curvature vanishes");
  CriteriaReport r;
  r.case_tag = branch > 0 ? "sigma+" : "sigma-";
  const Jet& sg = branch > 0 ? j.sigma_plus : j.sigma_minus;
  r.sigma = sg.value();
  r.sigma_prime = sg.d(1);
  const double k = j.kappa.value(), kp = j.kappa.d(1), kpp = j.kappa.d(2);
  const double t = j.tau.value(), tp = j.tau.d(1);
  const double sscale = 1 + std::abs(kp) + std::abs(k * t);
  const double pscale = 1 + std::abs(kpp) + std::abs(kp * t) + std::abs(k * tp);
  if (!vanishes(r.sigma, sscale, cfg)) r.label = SingularityLabel::A2_CuspidalEdge;
  else if (!vanishes(r.sigma_prime, pscale, cfg)) r.label = SingularityLabel::A3_Swallowtail;
  else r.label = SingularityLabel::Degenerate;
  r.mu_star = 1.0 / (f.delta * f.kappa_g);
  r.focal = f.gamma + r.mu_star * ng_curve_ads3(f, branch);
  r.ak_order = detect_Ak_curve(c, s, r.focal, cfg).k;
  if (r.label == SingularityLabel::Degenerate)
    r.advisory_notes.push_back("sigma and its derivative vanish");
  return r;
}

CriteriaReport classify_focal_point_ads4_curve(const CurveSource& c, double s, double theta,
                                               const ToleranceConfig& cfg) {
  auto j = curve_jets_ads4(c, s, cfg);
  Geometry g;
  g.curve = std::shared_ptr<const CurveSource>(&c, [](const CurveSource*) {});
  auto roots = focal_mu(g, {s, 0}, theta, cfg);
  if (roots.empty()) throw NoFocalPointError("no focal point at this fiber angle");
  CurveInvariants inv = invariants_from_jets(j, theta);
  CriteriaReport r;
  r.case_tag = to_string(inv.case_tag);
  r.rho = inv.rho;
  r.eta = inv.eta;
  r.sigma = inv.sigma;
  r.sigma_prime = inv.sigma_prime;
  r.mu_star = roots.front().mu_star;
  r.focal = j.frame.gamma + r.mu_star * ng_curve_ads4(j.frame, theta);
  if (!vanishes(inv.rho, inv.rho_scale, cfg)) {
    r.label = SingularityLabel::A2_CuspidalEdge;
  } else if (!inv.sigma_defined) {
    r.label = SingularityLabel::Degenerate;
    r.advisory_notes.push_back("sigma root argument is negative");
  } else {
    r.label = ladder(inv.rho, inv.rho_scale, inv.sigma, inv.sigma_scale, inv.sigma_prime,
                     inv.sigma_scale, cfg);
  }
  r.ak_order = detect_Ak_curve(c, s, r.focal, cfg).k;
  return r;
}

double cubic_discriminant(double a, double b, double c, double d) {
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

SingularityLabel classify_binary_cubic(double a, double b, double c, double d,
                                       const ToleranceConfig& cfg) {
  const double n = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
  if (n < cfg.zero_detect_tol) return SingularityLabel::Degenerate;
  const double disc = cubic_discriminant(a, b, c, d) / (n * n * n * n);
  if (std::abs(disc) < cfg.zero_detect_tol) return SingularityLabel::Degenerate;
  return disc < 0 ? SingularityLabel::D4_Plus : SingularityLabel::D4_Minus;
}

CriteriaReport classify_surface_focal_point(const ParamSurface& s, double u1, double u2, int sign,
                                            int branch, const ToleranceConfig& cfg) {
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  return analyse_surface(s, u1, u2, sign, branch, cfg).report;
}

int ridge_order(const ParamSurface& s, double u1, double u2, int sign, int branch,
                const ToleranceConfig& cfg) {
  auto a = analyse_surface(s, u1, u2, sign, branch, cfg);
  if (a.report.corank != 1)
    throw CorankError("ridge order needs a corank-one focal point, corank is " +
                      std::to_string(a.report.corank));
  if (a.k < 2) throw CorankError("height function is not degenerate along the kernel");
  return a.k - 2;
}

std::string report_json(const CriteriaReport& r) {
  nlohmann::ordered_json j;
  j["label"] = to_string(r.label);
  j["case"] = r.case_tag;
  j["rho"] = r.rho;
  j["eta"] = r.eta;
  j["sigma"] = r.sigma;
  j["sigma_prime"] = r.sigma_prime;
  j["corank"] = r.corank;
  j["ak_order"] = r.ak_order;
  j["ridge_order"] = r.ridge_order;
  j["mu_star"] = r.mu_star;
  j["cubic_discriminant"] = r.cubic_discriminant;
  std::vector<double> pos(r.focal.c.begin(), r.focal.c.begin() + r.focal.dim);
  j["focal"] = pos;
  j["consistent"] = r.consistent();
  j["advisory_notes"] = r.advisory_notes;
  return j.dump(2);
}

}  // namespace ads
