#include "adsgeo/surface_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace ads {

double adopted_determinant(const AVec& X, const AVec& nT) {
  // rows e1, e2, e3 kill the last three columns, leaving the leading 2x2 minor
  return X[0] * nT[1] - X[1] * nT[0];
}

namespace {

Eigen::Matrix2d metric(const AVec& a, const AVec& b) {
  Eigen::Matrix2d g;
  g << pseudo_inner(a, a), pseudo_inner(a, b), pseudo_inner(a, b), pseudo_inner(b, b);
  return g;
}

void require_pd(const Eigen::Matrix2d& g, const ToleranceConfig& cfg) {
  double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if (!(g(0, 0) > cfg.algebraic_tol * scale) || !(g.determinant() > cfg.algebraic_tol * scale * scale))
    throw MetricDegenerateError("first fundamental form is not positive definite");
}

}  // namespace

SurfaceFrame normal_frame(const ParamSurface& s, double u1, double u2, const ToleranceConfig& cfg,
                          const std::optional<AVec>& nT_override) {
  s.check_param(u1, u2);
  SurfaceFrame f;
  f.u1 = u1;
  f.u2 = u2;
  f.X = s.eval(u1, u2);
  f.X_u1 = s.partial(u1, u2, 1, 0);
  f.X_u2 = s.partial(u1, u2, 0, 1);
  f.g = metric(f.X_u1, f.X_u2);
  require_pd(f.g, cfg);
  const Eigen::Matrix2d gi = f.g.inverse();

  AVec p;
  if (nT_override) {
    p = *nT_override;
  } else {
    const AVec a = s.reference();
    p = a + pseudo_inner(a, f.X) * f.X;  // <X,X> = -1
    Eigen::Vector2d r(pseudo_inner(p, f.X_u1), pseudo_inner(p, f.X_u2));
    Eigen::Vector2d c = gi * r;
    p = p - c(0) * f.X_u1 - c(1) * f.X_u2;
  }
  const double q = pseudo_inner(p, p);
  const double scale = std::max(1.0, p.sum_sq());
  if (!(q < -1e-6 * scale))
    throw ChartError("reference vector projects to a non-timelike normal at (" +
                     std::to_string(u1) + ", " + std::to_string(u2) + ")");
  f.nT = p / std::sqrt(-q);
  if (nT_override) {
    double off = std::max({std::abs(pseudo_inner(f.nT, f.X)), std::abs(pseudo_inner(f.nT, f.X_u1)),
                           std::abs(pseudo_inner(f.nT, f.X_u2))});
    if (off > cfg.algebraic_tol * scale * 10) throw ChartError("supplied nT is not normal");
  }
  const double adet = adopted_determinant(f.X, f.nT);
  if (std::abs(adet) < cfg.algebraic_tol) throw ChartError("adopted orientation undefined");
  if (adet < 0) f.nT = -f.nT;
  AVec w = wedge({f.X, f.nT, f.X_u1, f.X_u2});
  f.nS = w / std::sqrt(pseudo_inner(w, w));
  return f;
}

Eigen::Matrix2d second_form(const ParamSurface& s, const SurfaceFrame& f, int sign) {
  const AVec ng = f.nT + static_cast<double>(sign) * f.nS;
  const AVec xuu = s.partial(f.u1, f.u2, 2, 0), xuv = s.partial(f.u1, f.u2, 1, 1),
             xvv = s.partial(f.u1, f.u2, 0, 2);
  Eigen::Matrix2d h;
  h << pseudo_inner(ng, xuu), pseudo_inner(ng, xuv), pseudo_inner(ng, xuv), pseudo_inner(ng, xvv);
  return h;
}

std::pair<Eigen::Matrix2d, Eigen::Matrix2d> fundamental_forms(const ParamSurface& s, double u1,
                                                              double u2, int sign,
                                                              const ToleranceConfig& cfg) {
  SurfaceFrame f = normal_frame(s, u1, u2, cfg);
  return {f.g, second_form(s, f, sign)};
}

PrincipalData principal_from_forms(const Eigen::Matrix2d& h, const Eigen::Matrix2d& g, int sign,
                                   const ToleranceConfig& cfg) {
  PrincipalData pd;
  pd.sign = sign;
  pd.h = h;
  auto er = generalized_eigen(h, g);
  pd.kappas = {er.values[0], er.values[1]};
  pd.directions = {er.vectors[0], er.vectors[1]};
  pd.K_N = h.determinant() / g.determinant();
  double m = std::max({1.0, std::abs(pd.kappas[0]), std::abs(pd.kappas[1])});
  pd.umbilic = std::abs(pd.kappas[0] - pd.kappas[1]) < cfg.zero_detect_tol * m;
  return pd;
}

PrincipalData principal_curvatures(const ParamSurface& s, double u1, double u2, int sign,
                                   const ToleranceConfig& cfg) {
  auto [g, h] = fundamental_forms(s, u1, u2, sign, cfg);
  return principal_from_forms(h, g, sign, cfg);
}

Stencil fd_stencil(double x, double lo, double hi, double h) {
  const double slack = 1e-9;
  Stencil st;
  if (x - h >= lo - slack && x + h <= hi + slack) {
    st.offset = {-h, h, 0};
    st.weight = {-0.5 / h, 0.5 / h, 0};
    st.size = 2;
  } else if (x + 2 * h <= hi + slack) {
    st.offset = {0, h, 2 * h};
    st.weight = {-1.5 / h, 2.0 / h, -0.5 / h};
    st.size = 3;
  } else {
    st.offset = {0, -h, -2 * h};
    st.weight = {1.5 / h, -2.0 / h, 0.5 / h};
    st.size = 3;
  }
  return st;
}

Stencil fd_stencil_2d(const ParamSurface& s, double u1, double u2, double du, double dv, double h) {
  // t in [lo, hi] keeps (u1 + t du, u2 + t dv) inside the rectangle
  double lo = -INFINITY, hi = INFINITY;
  auto clip = [&](double x, double d, Interval dom) {
    if (d == 0) return;
    double a = (dom.first - x) / d, b = (dom.second - x) / d;
    lo = std::max(lo, std::min(a, b));
    hi = std::min(hi, std::max(a, b));
  };
  clip(u1, du, s.domain_u());
  clip(u2, dv, s.domain_v());
  return fd_stencil(0.0, lo, hi, h);
}

double weingarten_residual(const ParamSurface& s, double u1, double u2, int sign,
                           const ToleranceConfig& cfg) {
  const double step = cfg.fd_step;
  if (!(step > 0)) throw GridError("finite-difference step must be positive");
  SurfaceFrame f = normal_frame(s, u1, u2, cfg);
  Eigen::Matrix2d h = second_form(s, f, sign);
  Eigen::Matrix2d gi = f.g.inverse();
  Eigen::Matrix2d hmix = h * gi;  // h_i^j
  auto ng_at = [&](double a, double b) {
    SurfaceFrame q = normal_frame(s, a, b, cfg);
    if (pseudo_inner(q.nT, f.nT) > 0) throw FrameContinuityError("timelike normal flipped");
    return q.nT + static_cast<double>(sign) * q.nS;
  };
  double worst = 0;
  const AVec tang[2] = {f.X_u1, f.X_u2};
  for (int i = 0; i < 2; ++i) {
    double du = i == 0 ? 1 : 0, dv = i == 1 ? 1 : 0;
    Stencil st = fd_stencil_2d(s, u1, u2, du, dv, step);
    AVec d(f.X.dim);
    for (int k = 0; k < st.size; ++k)
      d += st.weight[k] * ng_at(u1 + st.offset[k] * du, u2 + st.offset[k] * dv);
    Eigen::Vector2d r(pseudo_inner(d, tang[0]), pseudo_inner(d, tang[1]));
    Eigen::Vector2d c = gi * r;
    AVec res = c(0) * tang[0] + c(1) * tang[1] + hmix(i, 0) * tang[0] + hmix(i, 1) * tang[1];
    worst = std::max(worst, res.max_abs());
  }
  auto pd = principal_from_forms(h, f.g, sign, cfg);
  return worst / std::max({1.0, std::abs(pd.kappas[0]), std::abs(pd.kappas[1])});
}

}  // namespace ads
