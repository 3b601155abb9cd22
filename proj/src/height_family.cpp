#include "adsgeo/height_family.hpp"

#include <algorithm>
#include <cmath>

namespace ads {

void require_on_ads(const AVec& lambda, const ToleranceConfig& cfg) {
  if (!lambda.finite() || std::abs(ads_residual(lambda)) > cfg.algebraic_tol * std::max(1.0, lambda.sum_sq()))
    throw ModelSpaceError("lambda is not on anti-de Sitter space");
}

double height(const Geometry& g, const BaseParams& u, const AVec& lambda,
              const ToleranceConfig& cfg) {
  require_on_ads(lambda, cfg);
  const AVec X = base_point(g, u);
  if (X.dim != lambda.dim) throw DimensionError("lambda and the object live in different spaces");
  return pseudo_inner(X, lambda) + 1.0;
}

HeightJet height_jet_curve(const CurveSource& c, double s, const AVec& lambda, int max_order,
                           const ToleranceConfig& cfg) {
  if (max_order < 0 || max_order > kMaxCurveOrder) throw OrderError("height jets go to order 5");
  require_on_ads(lambda, cfg);
  if (c.dim() != lambda.dim) throw DimensionError("lambda and the curve live in different spaces");
  auto d = c.derivatives(s, max_order);
  HeightJet j;
  j.s = s;
  j.lambda = lambda;
  j.value = pseudo_inner(d[0], lambda) + 1.0;
  for (int k = 1; k <= max_order; ++k) j.derivatives.push_back(pseudo_inner(d[k], lambda));
  return j;
}

AkReport detect_Ak(const std::vector<double>& h, const ToleranceConfig& cfg) {
  AkReport r;
  double denom = 1.0;
  for (std::size_t i = 1; i < h.size(); ++i) denom += std::abs(h[i]);
  for (double x : h) r.normalized_derivatives.push_back(std::abs(x) / denom);
  const auto& n = r.normalized_derivatives;
  const double tol = cfg.zero_detect_tol;
  if (n.size() < 2 || n[0] >= tol || n[1] >= tol) {
    r.k = 0;
    return r;
  }
  for (std::size_t j = 2; j < n.size(); ++j)
    if (n[j] >= tol) {
      r.k = static_cast<int>(j) - 1;
      return r;
    }
  r.k = -1;
  return r;
}

AkReport detect_Ak_curve(const CurveSource& c, double s, const AVec& lambda,
                         const ToleranceConfig& cfg) {
  auto j = height_jet_curve(c, s, lambda, 5, cfg);
  std::vector<double> h{j.value};
  h.insert(h.end(), j.derivatives.begin(), j.derivatives.end());
  return detect_Ak(h, cfg);
}

SurfaceHeight hessian_surface(const ParamSurface& s, double u1, double u2, const AVec& lambda,
                              const ToleranceConfig& cfg) {
  require_on_ads(lambda, cfg);
  s.check_param(u1, u2);
  SurfaceHeight r;
  r.gradient << pseudo_inner(s.partial(u1, u2, 1, 0), lambda),
      pseudo_inner(s.partial(u1, u2, 0, 1), lambda);
  const double huv = pseudo_inner(s.partial(u1, u2, 1, 1), lambda);
  r.hessian << pseudo_inner(s.partial(u1, u2, 2, 0), lambda), huv, huv,
      pseudo_inner(s.partial(u1, u2, 0, 2), lambda);
  // the Hessian at a sheet point is mu h - g, so g sets the scale
  const AVec xu = s.partial(u1, u2, 1, 0), xv = s.partial(u1, u2, 0, 1);
  const double gscale = std::max({std::abs(pseudo_inner(xu, xu)), std::abs(pseudo_inner(xv, xv)),
                                  std::abs(pseudo_inner(xu, xv))});
  const double thr = cfg.zero_detect_tol * std::max({1.0, gscale, r.hessian.cwiseAbs().maxCoeff()});
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(r.hessian);
  for (int i = 0; i < 2; ++i) r.corank += std::abs(es.eigenvalues()(i)) < thr;
  return r;
}

RankReport morse_family_rank(const Geometry& g, const BaseParams& u, const AVec& lambda,
                             bool allow_isometry, const ToleranceConfig& cfg) {
  require_on_ads(lambda, cfg);
  const int nb = base_dim(g);
  auto d = base_derivatives(g, u, 2);
  AVec l = lambda;
  if (!(l[0] > 0)) {
    if (!allow_isometry) throw ChartError("lambda_{-1} <= 0: outside the chart lambda_{-1} > 0");
    auto flip = [](AVec& v) {
      v[0] = -v[0];
      v[1] = -v[1];
    };
    flip(l);
    for (auto& v : d) flip(v);
    if (!(l[0] > 0)) throw ChartError("lambda_{-1} = 0 in both charts");
  }
  const int n = l.dim - 2;
  // rows of partials: X, then X_{u_k}; second derivatives X_{u_k u_j}
  auto first = [&](int k) -> const AVec& { return d[1 + k]; };
  auto second = [&](int k, int j) -> const AVec& {
    if (nb == 1) return d[2];
    return d[3 + k + j];  // ordering (2,0), (1,1), (0,2)
  };
  Eigen::MatrixXd J(nb + 1, nb + n + 1);
  auto lam_cols = [&](const AVec& Y, int row) {
    J(row, nb) = (Y[0] * l[1] - Y[1] * l[0]) / l[0];
    for (int i = 1; i <= n; ++i) J(row, nb + i) = (Y[i + 1] * l[0] - Y[0] * l[i + 1]) / l[0];
  };
  for (int j = 0; j < nb; ++j) J(0, j) = pseudo_inner(first(j), l);
  lam_cols(d[0], 0);
  for (int k = 0; k < nb; ++k) {
    for (int j = 0; j < nb; ++j) J(k + 1, j) = pseudo_inner(second(k, j), l);
    lam_cols(first(k), k + 1);
  }
  return numeric_rank(J);
}

Eigen::MatrixXd versality_matrix(const CurveSource& c, double s) {
  if (c.dim() != 5) throw DimensionError("versality check is for curves in AdS^4");
  auto d = c.derivatives(s, 3);
  Eigen::MatrixXd A(4, 5);
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 5; ++k) A(r, k) = (k < 2 ? -1.0 : 1.0) * d[r][k];
  return A;
}

RankReport versality_rank_ads4(const CurveSource& c, double s) {
  return numeric_rank(versality_matrix(c, s));
}

std::vector<double> normalize_homogeneous(const std::vector<double>& raw) {
  double nrm = 0, peak = 0;
  for (double x : raw) {
    nrm += x * x;
    peak = std::max(peak, std::abs(x));
  }
  nrm = std::sqrt(nrm);
  if (!(nrm > 0)) throw LiftDegenerateError("homogeneous coordinates all vanish");
  std::vector<double> out;
  double sign = 0;
  for (double x : raw) {
    if (sign == 0 && std::abs(x) > 1e-14 * peak) sign = x > 0 ? 1 : -1;
  }
  for (double x : raw) out.push_back(sign * x / nrm);
  return out;
}

LegendrianLift legendrian_lift(const Geometry& g, const BaseParams& u, const AVec& lambda) {
  const AVec X = base_point(g, u);
  if (X.dim != lambda.dim) throw DimensionError("lambda and the object live in different spaces");
  LegendrianLift r;
  r.lambda = lambda;
  r.raw.push_back(X[0] * lambda[1] - X[1] * lambda[0]);
  for (int i = 2; i < X.dim; ++i) r.raw.push_back(X[i] * lambda[0] - X[0] * lambda[i]);
  r.homogeneous = normalize_homogeneous(r.raw);
  return r;
}

}  // namespace ads
