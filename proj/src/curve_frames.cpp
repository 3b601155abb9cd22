#include "adsgeo/curve_frames.hpp"

#include <algorithm>
#include <cmath>

namespace ads {

const char* to_string(CurveCase c) {
  switch (c) {
    case CurveCase::Case1: return "Case1";
    case CurveCase::Case2: return "Case2";
    case CurveCase::Case3: return "Case3";
  }
  return "?";
}

const AVec& FrameAdS4::nT() const {
  return case_tag == CurveCase::Case1 ? n1 : (case_tag == CurveCase::Case2 ? n2 : n3);
}
const AVec& FrameAdS4::b1() const { return case_tag == CurveCase::Case1 ? n2 : n1; }
const AVec& FrameAdS4::b2() const { return case_tag == CurveCase::Case3 ? n2 : n3; }

namespace {

// unit vector along v: returns (norm jet, sign of <v,v>)
struct Normalized {
  VecJet unit;
  Jet norm;
  int sign;
};

Normalized normalize(const VecJet& v, const char* what, const ToleranceConfig& cfg) {
  AVec v0 = v.value();
  Jet q = dot(v, v);
  double scale = std::max(1.0, v0.sum_sq());
  if (v0.max_abs() < cfg.zero_detect_tol || std::sqrt(std::abs(q.value())) < cfg.zero_detect_tol)
    throw FrameUndefinedError(std::string(what) + " vanishes (curvature ~ 0)");
  if (std::abs(q.value()) < 1e-10 * scale)
    throw CausalDegeneracyError(std::string(what) + " is null (causal degeneracy)");
  int sg = q.value() > 0 ? 1 : -1;
  Jet norm = sqrt(sg * q);
  return {v / norm, norm, sg};
}

VecJet curve_jet(const CurveSource& c, double s, int order) {
  return VecJet::from_derivs(c.derivatives(s, order), order);
}

}  // namespace

CurveJetsAdS3 curve_jets_ads3(const CurveSource& c, double s, const ToleranceConfig& cfg) {
  if (c.dim() != 4) throw DimensionError("AdS^3 frames need a curve in R^4_2");
  VecJet g = curve_jet(c, s, 5);
  VecJet t = g.deriv();
  VecJet v = t.deriv() - g;
  AVec g2 = t.deriv().value();
  if (std::abs(pseudo_inner(g2, g2) + 1.0) < cfg.zero_detect_tol)
    throw FrameUndefinedError("<gamma'', gamma''> = -1: geodesic curvature vanishes");
  Normalized nn = normalize(v, "gamma'' - gamma", cfg);
  VecJet b = wedge(std::vector<VecJet>{g, t, nn.unit});
  Jet tau = dot(b.deriv(), nn.unit);

  CurveJetsAdS3 r;
  r.kappa = nn.norm;
  r.tau = tau;
  Jet kp = nn.norm.deriv();
  r.sigma_plus = kp - nn.norm * tau;
  r.sigma_minus = kp + nn.norm * tau;
  auto& f = r.frame;
  f.gamma = g.value();
  f.t = t.value();
  f.n = nn.unit.value();
  f.b = b.value();
  f.kappa_g = nn.norm.value();
  f.tau_g = tau.value();
  f.delta = nn.sign;
  return r;
}

FrameAdS3 frame_ads3(const CurveSource& c, double s, const ToleranceConfig& cfg) {
  return curve_jets_ads3(c, s, cfg).frame;
}

SigmaPM sigma_pm_ads3(const CurveSource& c, double s, const ToleranceConfig& cfg) {
  auto j = curve_jets_ads3(c, s, cfg);
  return {j.sigma_plus.value(), j.sigma_minus.value(), j.sigma_plus.d(1), j.sigma_minus.d(1)};
}

CurveJetsAdS4 curve_jets_ads4(const CurveSource& c, double s, const ToleranceConfig& cfg) {
  if (c.dim() != 5) throw DimensionError("AdS^4 frames need a curve in R^5_2");
  VecJet g = curve_jet(c, s, 5);
  VecJet t = g.deriv();
  VecJet v = t.deriv() - g;
  Normalized a = normalize(v, "gamma'' - gamma", cfg);
  VecJet n1 = a.unit;
  VecJet u = n1.deriv() + (a.sign * a.norm) * t;
  Normalized b = normalize(u, "n1' + delta1 kappa1 t", cfg);
  VecJet n2 = b.unit;
  VecJet n3 = wedge(std::vector<VecJet>{g, t, n1, n2});
  int d3 = dot(n3, n3).value() > 0 ? 1 : -1;
  Jet k3 = d3 * dot(n2.deriv(), n3);

  CurveJetsAdS4 r;
  r.k1 = a.norm;
  r.k2 = b.norm;
  r.k3 = k3;
  auto& f = r.frame;
  f.gamma = g.value();
  f.t = t.value();
  f.n1 = n1.value();
  f.n2 = n2.value();
  f.n3 = n3.value();
  f.kappa1 = a.norm.value();
  f.kappa2 = b.norm.value();
  f.kappa3 = k3.value();
  f.delta1 = a.sign;
  f.delta2 = b.sign;
  f.delta3 = d3;
  int timelike = (a.sign < 0) + (b.sign < 0) + (d3 < 0);
  if (timelike != 1) throw CausalDegeneracyError("frame does not have exactly one timelike normal");
  f.case_tag = a.sign < 0 ? CurveCase::Case1 : (b.sign < 0 ? CurveCase::Case2 : CurveCase::Case3);
  return r;
}

FrameAdS4 frame_ads4(const CurveSource& c, double s, const ToleranceConfig& cfg) {
  return curve_jets_ads4(c, s, cfg).frame;
}

// Per-case sigma on a fixed branch, as a jet of order 1 so sigma' is exact.
SigmaJet sigma_jet_ads4(const CurveJetsAdS4& j, int branch) {
  const Jet K1 = truncate(j.k1, 1), K1p = truncate(j.k1.deriv(), 1),
            K1pp = truncate(j.k1.deriv().deriv(), 1);
  const Jet K2 = truncate(j.k2, 1), K2p = truncate(j.k2.deriv(), 1);
  const Jet K3 = truncate(j.k3, 1);
  const double e = branch >= 0 ? 1.0 : -1.0;
  SigmaJet out;
  Jet mix = K1p * (2.0 * (K1p * K2) + K1 * K2p);
  Jet k12 = K1 * K2;
  Jet arg, first;
  double sgn_root = 0;
  switch (j.frame.case_tag) {
    case CurveCase::Case1:
      arg = k12 * k12 - K1p * K1p;
      first = k12 * (K1pp + K1 * K2 * K2) - mix;
      sgn_root = -e;
      break;
    case CurveCase::Case2:
      arg = K1p * K1p - k12 * k12;
      first = k12 * (K1pp + K1 * K2 * K2) - mix;
      sgn_root = e;
      break;
    case CurveCase::Case3:
      arg = k12 * k12 + K1p * K1p;
      first = k12 * (K1pp - K1 * K2 * K2) - mix;
      sgn_root = -e;
      break;
  }
  const double tiny = 1e-300;
  out.defined = arg.value() > tiny;
  Jet root = out.defined ? sqrt(arg) : Jet(0.0, 1);
  out.sigma = first + sgn_root * (k12 * K3 * root);
  out.scale = 1.0 + std::abs(k12.value() * K1pp.value()) +
              std::abs(k12.value() * K1.value() * K2.value() * K2.value()) +
              std::abs(mix.value()) + std::abs(k12.value() * K3.value() * root.value());
  return out;
}

CurveInvariants invariants_from_jets(const CurveJetsAdS4& j, double theta) {
  const double K1 = j.k1.d(0), K1p = j.k1.d(1), K1pp = j.k1.d(2);
  const double K2 = j.k2.d(0), K2p = j.k2.d(1), K3 = j.k3.d(0);
  const double c = std::cos(theta), s = std::sin(theta);
  CurveInvariants inv;
  inv.case_tag = j.frame.case_tag;
  inv.theta = theta;
  const double k12 = K1 * K2, mix = 2 * K1p * K2 + K1 * K2p;
  switch (inv.case_tag) {
    case CurveCase::Case1:
      inv.rho = K1p - c * k12;
      inv.eta = mix * c - K1pp - K1 * K2 * K2 + k12 * K3 * s;
      inv.branch = s >= 0 ? 1 : -1;
      break;
    case CurveCase::Case2:
      inv.rho = K1p * c - k12;
      inv.eta = (K1pp + K1 * K2 * K2) * c - mix + k12 * K3 * s;
      inv.branch = s * c >= 0 ? 1 : -1;
      break;
    case CurveCase::Case3:
      inv.rho = K1p * c + k12 * s;
      inv.eta = mix * s + (K1pp - K1 * K2 * K2) * c - k12 * K3;
      inv.branch = c >= 0 ? 1 : -1;
      break;
  }
  inv.rho_scale = 1.0 + std::abs(K1p) + std::abs(k12);
  inv.eta_scale = 1.0 + std::abs(mix) + std::abs(K1pp) + std::abs(K1 * K2 * K2) +
                  std::abs(k12 * K3);
  SigmaJet plus = sigma_jet_ads4(j, 1), minus = sigma_jet_ads4(j, -1);
  inv.sigma_defined = plus.defined;
  inv.sigma_branches = {plus.sigma.value(), minus.sigma.value()};
  const SigmaJet& sel = inv.branch > 0 ? plus : minus;
  inv.sigma = sel.sigma.value();
  inv.sigma_prime = sel.sigma.d(1);
  inv.sigma_scale = sel.scale;
  return inv;
}

CurveInvariants curve_invariants_ads4(const CurveSource& c, double s, double theta,
                                      const ToleranceConfig& cfg) {
  auto j = curve_jets_ads4(c, s, cfg);
  auto inv = invariants_from_jets(j, theta);
  if (!inv.sigma_defined) {
    // the root argument may sit on zero within tolerance: accept that
    const double K1 = j.k1.d(0), K1p = j.k1.d(1), K2 = j.k2.d(0);
    double arg = inv.case_tag == CurveCase::Case1 ? K1 * K1 * K2 * K2 - K1p * K1p
                                                  : K1p * K1p - K1 * K1 * K2 * K2;
    double scale = std::max(1.0, K1 * K1 * K2 * K2 + K1p * K1p);
    if (arg < -cfg.zero_detect_tol * scale)
      throw SigmaUndefinedError(std::string("sigma has no real value at s: ") +
                                to_string(inv.case_tag) + " root argument " + std::to_string(arg));
  }
  return inv;
}

bool rho_root_on_branch(const CurveJetsAdS4& j, int branch, double& theta) {
  const double K1 = j.k1.d(0), K1p = j.k1.d(1), K2 = j.k2.d(0);
  const double k12 = K1 * K2, e = branch >= 0 ? 1.0 : -1.0;
  switch (j.frame.case_tag) {
    case CurveCase::Case1: {
      double c0 = K1p / k12;
      if (std::abs(c0) > 1.0) return false;
      theta = e * std::acos(c0);
      return true;
    }
    case CurveCase::Case2: {
      if (K1p == 0.0) return false;
      double c0 = k12 / K1p;
      if (std::abs(c0) > 1.0) return false;
      theta = e * (c0 >= 0 ? 1.0 : -1.0) * std::acos(c0);
      return true;
    }
    case CurveCase::Case3:
      theta = std::atan2(-e * K1p, e * k12);
      return true;
  }
  return false;
}

std::vector<double> rho_roots(const CurveJetsAdS4& j) {
  std::vector<double> out;
  for (int b : {1, -1}) {
    double th;
    if (rho_root_on_branch(j, b, th)) out.push_back(th);
  }
  return out;
}

double gram_residual(const FrameAdS3& f) {
  Eigen::MatrixXd G = gram({f.gamma, f.t, f.n, f.b});
  Eigen::MatrixXd want = Eigen::MatrixXd::Zero(4, 4);
  want.diagonal() << -1, 1, f.delta, -f.delta;
  return (G - want).cwiseAbs().maxCoeff();
}

double gram_residual(const FrameAdS4& f) {
  Eigen::MatrixXd G = gram({f.gamma, f.t, f.n1, f.n2, f.n3});
  Eigen::MatrixXd want = Eigen::MatrixXd::Zero(5, 5);
  want.diagonal() << -1, 1, f.delta1, f.delta2, f.delta3;
  return (G - want).cwiseAbs().maxCoeff();
}

double frenet_residual(const CurveSource& c, double s, Space space, const ToleranceConfig& cfg) {
  const double h = cfg.fd_step;
  if (!(h > 0)) throw DomainError("fd_step must be positive");
  auto fd = [h](const AVec& p, const AVec& m) { return (p - m) / (2 * h); };
  double worst = 0;
  if (space == Space::AdS3) {
    FrameAdS3 f = frame_ads3(c, s, cfg), fp = frame_ads3(c, s + h, cfg),
              fm = frame_ads3(c, s - h, cfg);
    const double k = f.kappa_g, tau = f.tau_g, d = f.delta;
    std::vector<AVec> lhs = {fd(fp.gamma, fm.gamma), fd(fp.t, fm.t), fd(fp.n, fm.n),
                             fd(fp.b, fm.b)};
    std::vector<AVec> rhs = {f.t, f.gamma + k * f.n, d * (-k * f.t + tau * f.b),
                             d * tau * f.n};
    for (std::size_t i = 0; i < lhs.size(); ++i) worst = std::max(worst, (lhs[i] - rhs[i]).max_abs());
    return worst / std::max({1.0, k, std::abs(tau)});
  }
  FrameAdS4 f = frame_ads4(c, s, cfg), fp = frame_ads4(c, s + h, cfg),
            fm = frame_ads4(c, s - h, cfg);
  const double k1 = f.kappa1, k2 = f.kappa2, k3 = f.kappa3;
  std::vector<AVec> lhs = {fd(fp.gamma, fm.gamma), fd(fp.t, fm.t), fd(fp.n1, fm.n1),
                           fd(fp.n2, fm.n2), fd(fp.n3, fm.n3)};
  std::vector<AVec> rhs = {f.t, f.gamma + k1 * f.n1, -f.delta1 * k1 * f.t + k2 * f.n2,
                           f.delta3 * k2 * f.n1 + k3 * f.n3, f.delta1 * k3 * f.n2};
  for (std::size_t i = 0; i < lhs.size(); ++i) worst = std::max(worst, (lhs[i] - rhs[i]).max_abs());
  return worst / std::max({1.0, k1, k2, std::abs(k3)});
}

}  // namespace ads
