#include "adsgeo/lightlike_sheets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <functional>
#include <sstream>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

namespace ads {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

AVec ng_curve_ads4(const FrameAdS4& f, double theta) {
  return f.nT() + std::cos(theta) * f.b1() + std::sin(theta) * f.b2();
}

AVec ng_curve_ads3(const FrameAdS3& f, int sign) {
  return f.n + static_cast<double>(sign * f.delta) * f.b;
}

AVec ng_surface(const SurfaceFrame& f, int sign) { return f.nT + static_cast<double>(sign) * f.nS; }

namespace {

int fiber_sign(double fiber) {
  if (fiber == 1.0) return 1;
  if (fiber == -1.0) return -1;
  throw InputError("fiber must be +1 or -1 for this object");
}

// derivatives of n1, n2, n3 from the Frenet equations
std::array<AVec, 3> normal_derivs(const FrameAdS4& f) {
  const double k1 = f.kappa1, k2 = f.kappa2, k3 = f.kappa3;
  return {-f.delta1 * k1 * f.t + k2 * f.n2, f.delta3 * k2 * f.n1 + k3 * f.n3,
          f.delta1 * k3 * f.n2};
}

struct Relabeled {
  AVec nT, b1, b2;
};

Relabeled relabel(const FrameAdS4& f, const std::array<AVec, 3>& d) {
  switch (f.case_tag) {
    case CurveCase::Case1: return {d[0], d[1], d[2]};
    case CurveCase::Case2: return {d[1], d[0], d[2]};
    default: return {d[2], d[0], d[1]};
  }
}

AVec surface_ng_checked(const ParamSurface& s, double a, double b, int sign, const AVec& ref_nT,
                        const ToleranceConfig& cfg) {
  SurfaceFrame q = normal_frame(s, a, b, cfg);
  if (pseudo_inner(q.nT, ref_nT) > 0) throw FrameContinuityError("timelike normal flipped");
  return ng_surface(q, sign);
}

double bisect(const std::function<double(double)>& f, double a, double b, double fa,
              const ToleranceConfig& cfg) {
  for (int it = 0; it < 200 && b - a > cfg.bisection_tol * std::max(1.0, std::abs(a)); ++it) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0) return m;
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

void require_axis(const Axis& a, const char* name) {
  if (a.n < 2) throw GridError(std::string("axis ") + name + " needs at least 2 points");
}

std::vector<double> fibers_of(const Geometry& g, const GridSpec& spec) {
  std::vector<double> out;
  if (object_kind(g) == ObjectKind::CurveAdS4) {
    require_axis(spec.theta, "theta");
    for (int i = 0; i < spec.theta.n; ++i) out.push_back(spec.theta.at(i));
  } else {
    if (spec.signs.empty()) throw GridError("no fiber signs requested");
    for (int sg : spec.signs) out.push_back(sg);
  }
  return out;
}

std::vector<BaseParams> bases_of(const Geometry& g, const GridSpec& spec) {
  require_axis(spec.u, "u");
  std::vector<BaseParams> out;
  if (g.is_curve()) {
    for (int i = 0; i < spec.u.n; ++i) out.push_back({spec.u.at(i), 0.0});
  } else {
    require_axis(spec.v, "v");
    for (int i = 0; i < spec.u.n; ++i)
      for (int j = 0; j < spec.v.n; ++j) out.push_back({spec.u.at(i), spec.v.at(j)});
  }
  return out;
}

}  // namespace

GridSpec default_grid(const Geometry& g, int n_base, int n_theta, int n_mu) {
  GridSpec s;
  if (g.is_curve()) {
    auto d = g.curve->domain();
    s.u = {d.first, d.second, n_base};
  } else {
    auto du = g.surface->domain_u(), dv = g.surface->domain_v();
    s.u = {du.first, du.second, n_base};
    s.v = {dv.first, dv.second, n_base};
  }
  s.theta = {0.0, 2 * std::numbers::pi * (n_theta - 1) / n_theta, n_theta};
  s.mu = {-2.0, 2.0, n_mu};
  return s;
}

GridSpec parse_grid(const Geometry& g, const std::string& text) {
  GridSpec s = default_grid(g);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("grid entry needs name=value: " + item);
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "sign") {
      if (val == "both") s.signs = {1, -1};
      else if (val == "+1" || val == "1") s.signs = {1};
      else if (val == "-1") s.signs = {-1};
      else throw InputError("sign must be +1, -1 or both");
      continue;
    }
    Axis a;
    char c1 = 0, c2 = 0;
    std::stringstream vs(val);
    if (!(vs >> a.lo >> c1 >> a.hi >> c2 >> a.n) || c1 != ':' || c2 != ':' || !vs.eof())
      throw InputError("axis must read lo:hi:count, got " + item);
    if (key == "s" || key == "u") s.u = a;
    else if (key == "v") s.v = a;
    else if (key == "theta") s.theta = a;
    else if (key == "mu") s.mu = a;
    else throw InputError("unknown grid axis " + key);
  }
  return s;
}

AVec nullcone_gauss(const Geometry& g, const BaseParams& u, double fiber,
                    const ToleranceConfig& cfg) {
  switch (object_kind(g)) {
    case ObjectKind::CurveAdS3: return ng_curve_ads3(frame_ads3(*g.curve, u[0], cfg), fiber_sign(fiber));
    case ObjectKind::CurveAdS4: return ng_curve_ads4(frame_ads4(*g.curve, u[0], cfg), fiber);
    default: return ng_surface(normal_frame(*g.surface, u[0], u[1], cfg), fiber_sign(fiber));
  }
}

std::vector<AVec> ng_derivatives(const Geometry& g, const BaseParams& u, double fiber,
                                 const ToleranceConfig& cfg) {
  switch (object_kind(g)) {
    case ObjectKind::CurveAdS3: {
      FrameAdS3 f = frame_ads3(*g.curve, u[0], cfg);
      const double d = f.delta, beta = fiber_sign(fiber);
      return {-d * f.kappa_g * f.t + d * f.tau_g * f.b + beta * f.tau_g * f.n};
    }
    case ObjectKind::CurveAdS4: {
      FrameAdS4 f = frame_ads4(*g.curve, u[0], cfg);
      Relabeled r = relabel(f, normal_derivs(f));
      const double c = std::cos(fiber), s = std::sin(fiber);
      return {r.nT + c * r.b1 + s * r.b2, -s * f.b1() + c * f.b2()};
    }
    default: {
      const int sg = fiber_sign(fiber);
      const double h = cfg.fd_step;
      const ParamSurface& surf = *g.surface;
      SurfaceFrame f = normal_frame(surf, u[0], u[1], cfg);
      std::vector<AVec> out;
      for (int k = 0; k < 2; ++k) {
        double du = k == 0 ? 1 : 0, dv = k == 1 ? 1 : 0;
        Stencil st = fd_stencil_2d(surf, u[0], u[1], du, dv, h);
        AVec d(f.X.dim);
        for (int i = 0; i < st.size; ++i)
          d += st.weight[i] *
               surface_ng_checked(surf, u[0] + st.offset[i] * du, u[1] + st.offset[i] * dv, sg, f.nT, cfg);
        out.push_back(d);
      }
      return out;
    }
  }
}

std::vector<AVec> sheet_tangents(const Geometry& g, const BaseParams& u, double fiber, double mu,
                                 const ToleranceConfig& cfg) {
  auto dng = ng_derivatives(g, u, fiber, cfg);
  auto dx = base_derivatives(g, u, 1);
  std::vector<AVec> out;
  const int nb = base_dim(g);
  for (int k = 0; k < nb; ++k) out.push_back(dx[1 + k] + mu * dng[k]);
  if (object_kind(g) == ObjectKind::CurveAdS4) out.push_back(mu * dng[1]);
  out.push_back(nullcone_gauss(g, u, fiber, cfg));
  return out;
}

SheetPoint lh_eval(const Geometry& g, const BaseParams& u, double fiber, double mu,
                   const ToleranceConfig& cfg) {
  SheetPoint p;
  p.base = u;
  p.fiber = fiber;
  p.mu = mu;
  p.position = base_point(g, u) + mu * nullcone_gauss(g, u, fiber, cfg);
  return p;
}

SheetGrid sheet_grid(const Geometry& g, const GridSpec& spec, const ToleranceConfig& cfg) {
  auto bases = bases_of(g, spec);
  auto fibers = fibers_of(g, spec);
  require_axis(spec.mu, "mu");
  SheetGrid out;
  out.shape = {spec.u.n};
  if (!g.is_curve()) out.shape.push_back(spec.v.n);
  out.shape.push_back(static_cast<int>(fibers.size()));
  out.shape.push_back(spec.mu.n);
  out.regular_rank = g.is_curve() ? (g.curve->dim() - 2) : 3;
  for (const auto& b : bases) {
    const AVec X = base_point(g, b);
    for (double fb : fibers) {
      AVec ng = nullcone_gauss(g, b, fb, cfg);
      double scale = spec.unit_ng ? 1.0 / std::sqrt(ng.sum_sq()) : 1.0;
      for (int k = 0; k < spec.mu.n; ++k) {
        double mu = spec.mu.at(k) * scale;
        out.points.push_back({b, fb, mu, X + mu * ng});
        if (spec.with_rank) {
          auto tv = sheet_tangents(g, b, fb, mu, cfg);
          Eigen::MatrixXd J(tv[0].dim, tv.size());
          for (std::size_t c = 0; c < tv.size(); ++c)
            for (int r = 0; r < tv[c].dim; ++r) J(r, c) = tv[c][r];
          out.rank.push_back(numeric_rank(J).rank);
        }
      }
    }
  }
  return out;
}

std::vector<FocalRoot> focal_mu(const Geometry& g, const BaseParams& u, double fiber,
                                const ToleranceConfig& cfg) {
  std::vector<FocalRoot> out;
  switch (object_kind(g)) {
    case ObjectKind::CurveAdS3: {
      FrameAdS3 f = frame_ads3(*g.curve, u[0], cfg);
      fiber_sign(fiber);
      if (std::abs(f.kappa_g) > cfg.zero_detect_tol) out.push_back({1.0 / (f.delta * f.kappa_g), 0});
      break;
    }
    case ObjectKind::CurveAdS4: {
      FrameAdS4 f = frame_ads4(*g.curve, u[0], cfg);
      // h'' = <gamma'', gamma> + mu <gamma'', NG> = -1 + mu a1
      const AVec g2 = f.gamma + f.kappa1 * f.n1;
      const double a1 = pseudo_inner(g2, ng_curve_ads4(f, fiber));
      if (std::abs(a1) > cfg.zero_detect_tol * std::max(1.0, f.kappa1)) out.push_back({1.0 / a1, 0});
      break;
    }
    default: {
      auto pd = principal_curvatures(*g.surface, u[0], u[1], fiber_sign(fiber), cfg);
      const double m = std::max({1.0, std::abs(pd.kappas[0]), std::abs(pd.kappas[1])});
      for (int i = 0; i < 2; ++i)
        if (std::abs(pd.kappas[i]) > cfg.zero_detect_tol * m) out.push_back({1.0 / pd.kappas[i], i});
    }
  }
  return out;
}

FocalPoint focal_eval(const Geometry& g, const BaseParams& u, double fiber, int branch_index,
                      const ToleranceConfig& cfg) {
  for (const auto& r : focal_mu(g, u, fiber, cfg)) {
    if (r.branch_index != branch_index) continue;
    FocalPoint p;
    p.base = u;
    p.fiber = fiber;
    p.mu_star = r.mu_star;
    p.branch_index = branch_index;
    p.position = base_point(g, u) + r.mu_star * nullcone_gauss(g, u, fiber, cfg);
    return p;
  }
  throw NoFocalPointError("no focal point on branch " + std::to_string(branch_index));
}

double ridge_indicator(const ParamSurface& s, double u1, double u2, int sign, int branch,
                       const Eigen::Vector2d& align, Eigen::Vector2d* dir,
                       const ToleranceConfig& cfg) {
  auto pd = principal_curvatures(s, u1, u2, sign, cfg);
  if (pd.umbilic) throw CorankError("umbilic point: principal direction undefined");
  Eigen::Vector2d e = pd.directions[branch].normalized();
  if (align.squaredNorm() > 0 && e.dot(align) < 0) e = -e;
  if (dir) *dir = e;
  const SurfaceFrame f0 = normal_frame(s, u1, u2, cfg);
  // focal map F = X + NG / kappa moves along NG in the principal direction;
  // its NG-component vanishes exactly on ridges
  auto focal = [&](double a, double b) {
    SurfaceFrame q = normal_frame(s, a, b, cfg);
    if (pseudo_inner(q.nT, f0.nT) > 0) throw FrameContinuityError("timelike normal flipped");
    double k = principal_from_forms(second_form(s, q, sign), q.g, sign, cfg).kappas[branch];
    if (std::abs(k) < cfg.zero_detect_tol) throw NoFocalPointError("principal curvature vanishes");
    return q.X + (1.0 / k) * ng_surface(q, sign);
  };
  Stencil st = fd_stencil_2d(s, u1, u2, e(0), e(1), cfg.fd_step);
  AVec dF(f0.X.dim);
  for (int k = 0; k < st.size; ++k) dF += st.weight[k] * focal(u1 + st.offset[k] * e(0), u2 + st.offset[k] * e(1));
  return -pseudo_inner(dF, f0.nT);
}

bool ridge_crossing(const ParamSurface& s, const BaseParams& p0, const BaseParams& p1, int sign,
                    int branch, BaseParams& root, const ToleranceConfig& cfg) {
  Eigen::Vector2d e0;
  double f0 = ridge_indicator(s, p0[0], p0[1], sign, branch, Eigen::Vector2d::Zero(), &e0, cfg);
  double f1 = ridge_indicator(s, p1[0], p1[1], sign, branch, e0, nullptr, cfg);
  if (f0 == 0) {
    root = p0;
    return true;
  }
  if (f1 == 0 || (f0 > 0) == (f1 > 0)) return false;
  auto along = [&](double t) {
    return ridge_indicator(s, p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1]), sign,
                           branch, e0, nullptr, cfg);
  };
  double t = bisect(along, 0.0, 1.0, f0, cfg);
  root = {p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1])};
  return true;
}

DiscriminantSet discriminant_samples(const Geometry& g, int order, const GridSpec& spec,
                                     const ToleranceConfig& cfg) {
  if (order < 1 || order > 3) throw InputError("discriminant order must be 1, 2 or 3");
  DiscriminantSet out;
  if (order == 1) {
    for (auto& p : sheet_grid(g, spec, cfg).points) out.points.push_back(p.position);
    return out;
  }
  auto bases = bases_of(g, spec);
  auto fibers = fibers_of(g, spec);
  if (order == 2) {
    for (const auto& b : bases)
      for (double fb : fibers)
        for (const auto& r : focal_mu(g, b, fb, cfg))
          out.points.push_back(focal_eval(g, b, fb, r.branch_index, cfg).position);
    return out;
  }
  const auto kind = object_kind(g);
  if (kind == ObjectKind::CurveAdS4) {
    // the focal surface is singular exactly where rho vanishes
    for (const auto& b : bases) {
      auto j = curve_jets_ads4(*g.curve, b[0], cfg);
      for (double th : rho_roots(j)) {
        try {
          out.points.push_back(focal_eval(g, b, th, 0, cfg).position);
        } catch (const NoFocalPointError&) {
        }
      }
    }
    return out;
  }
  if (kind == ObjectKind::CurveAdS3) {
    // the evolute velocity is proportional to sigma
    for (int sg : spec.signs) {
      auto sig = [&](double s) {
        auto j = curve_jets_ads3(*g.curve, s, cfg);
        return sg > 0 ? j.sigma_plus.value() : j.sigma_minus.value();
      };
      std::vector<double> vals;
      double scale = 0, peak = 0;
      for (const auto& b : bases) {
        auto j = curve_jets_ads3(*g.curve, b[0], cfg);
        vals.push_back(sg > 0 ? j.sigma_plus.value() : j.sigma_minus.value());
        scale = std::max({scale, std::abs(j.kappa.d(1)), std::abs(j.kappa.value() * j.tau.value())});
        peak = std::max(peak, std::abs(vals.back()));
      }
      if (peak <= cfg.zero_detect_tol * std::max(1.0, scale)) {
        out.degenerate = true;
        out.note = "sigma identically 0 (degenerate family): every evolute point is singular";
        for (const auto& b : bases) out.points.push_back(focal_eval(g, b, sg, 0, cfg).position);
        continue;
      }
      for (std::size_t i = 0; i + 1 < bases.size(); ++i) {
        double a = bases[i][0], c = bases[i + 1][0];
        if (vals[i] == 0) {
          out.points.push_back(focal_eval(g, {a, 0}, sg, 0, cfg).position);
          continue;
        }
        if ((vals[i] > 0) == (vals[i + 1] > 0) || vals[i + 1] == 0) continue;
        double r = bisect(sig, a, c, vals[i], cfg);
        out.points.push_back(focal_eval(g, {r, 0}, sg, 0, cfg).position);
      }
    }
    return out;
  }
  // surfaces: ridge crossings along grid edges
  const ParamSurface& surf = *g.surface;
  for (int sg : spec.signs) {
    for (int br = 0; br < 2; ++br) {
      auto cross = [&](BaseParams p0, BaseParams p1) {
        BaseParams q;
        try {
          if (ridge_crossing(surf, p0, p1, sg, br, q, cfg))
            out.points.push_back(focal_eval(g, q, sg, br, cfg).position);
        } catch (const AdsError&) {
          // umbilics and vanishing curvature: no ridge decision on this edge
        }
      };
      for (int i = 0; i < spec.u.n; ++i)
        for (int jv = 0; jv < spec.v.n; ++jv) {
          BaseParams p{spec.u.at(i), spec.v.at(jv)};
          if (i + 1 < spec.u.n) cross(p, {spec.u.at(i + 1), spec.v.at(jv)});
          if (jv + 1 < spec.v.n) cross(p, {spec.u.at(i), spec.v.at(jv + 1)});
        }
    }
  }
  return out;
}

FiberShape fiber_shape_eigenvalue(const CurveSource& c, double s, double theta,
                                  const ToleranceConfig& cfg) {
  FrameAdS4 f = frame_ads4(c, s, cfg);
  Relabeled r = relabel(f, normal_derivs(f));
  const double ct = std::cos(theta), st = std::sin(theta);
  const AVec ng_s = r.nT + ct * r.b1 + st * r.b2;
  const AVec w = -st * f.b1() + ct * f.b2();  // d xi / d theta
  // tangent space of the unit normal bundle: horizontal t, vertical w
  Eigen::Matrix2d G;
  G << pseudo_inner(f.t, f.t), pseudo_inner(f.t, w), pseudo_inner(w, f.t), pseudo_inner(w, w);
  auto coords = [&](const AVec& v) {
    return Eigen::Vector2d(G.inverse() * Eigen::Vector2d(pseudo_inner(v, f.t), pseudo_inner(v, w)));
  };
  Eigen::Matrix2d S;
  S.col(0) = -coords(ng_s);
  S.col(1) = -coords(w);
  Eigen::EigenSolver<Eigen::Matrix2d> es(S);
  FiberShape out;
  int fib = std::abs(es.eigenvectors()(1, 0)) > std::abs(es.eigenvectors()(1, 1)) ? 0 : 1;
  out.fiber = es.eigenvalues()(fib).real();
  out.tangential = es.eigenvalues()(1 - fib).real();
  return out;
}

double directed_distance(const std::vector<AVec>& from, const std::vector<AVec>& to) {
  using P = bg::model::point<double, kMaxDim, bg::cs::cartesian>;
  auto to_p = [](const AVec& v) {
    P p;
    bg::set<0>(p, v[0]); bg::set<1>(p, v[1]); bg::set<2>(p, v[2]);
    bg::set<3>(p, v[3]); bg::set<4>(p, v[4]); bg::set<5>(p, v[5]);
    return p;
  };
  if (from.empty()) return 0.0;
  if (to.empty()) return INFINITY;
  std::vector<P> pts;
  pts.reserve(to.size());
  for (const auto& v : to) pts.push_back(to_p(v));
  bgi::rtree<P, bgi::quadratic<16>> tree(pts.begin(), pts.end());
  double worst = 0;
  for (const auto& v : from) {
    std::vector<P> nn;
    P q = to_p(v);
    tree.query(bgi::nearest(q, 1), std::back_inserter(nn));
    worst = std::max(worst, bg::distance(q, nn.front()));
  }
  return worst;
}

double compare_point_sets(const std::vector<AVec>& a, const std::vector<AVec>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty() ? 0.0 : INFINITY;
  return std::max(directed_distance(a, b), directed_distance(b, a));
}

double compare_sheets(const SheetGrid& a, const SheetGrid& b) {
  std::vector<AVec> pa, pb;
  for (const auto& p : a.points) pa.push_back(p.position);
  for (const auto& p : b.points) pb.push_back(p.position);
  if (!pa.empty() && !pb.empty() && pa.front().dim != pb.front().dim)
    throw DimensionError("sheets live in different ambient spaces");
  return compare_point_sets(pa, pb);
}

}  // namespace ads
