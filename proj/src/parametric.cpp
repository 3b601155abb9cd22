#include "adsgeo/parametric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "adsgeo/jet.hpp"

namespace ads {

namespace {
constexpr int kTableOrder = 6;
constexpr double kDomainSlack = 1e-9;
}  // namespace

void CurveSource::check_param(double s) const {
  auto [a, b] = domain();
  double slack = kDomainSlack * std::max(1.0, std::abs(b - a));
  if (!std::isfinite(s) || s < a - slack || s > b + slack)
    throw DomainError("parameter " + std::to_string(s) + " outside [" + std::to_string(a) +
                      ", " + std::to_string(b) + "]");
}

std::vector<AVec> CurveSource::derivatives(double s, int max_order) const {
  if (max_order < 0 || max_order > kMaxCurveOrder)
    throw OrderError("curve derivative order must be 0..5");
  check_param(s);
  return raw_derivatives(s, max_order);
}

AVec CurveSource::eval_derivative(double s, int order) const {
  return derivatives(s, order)[order];
}

ParamCurve::ParamCurve(std::vector<TermSum> coords, Interval domain, std::string name)
    : coords_(std::move(coords)), domain_(domain), name_(std::move(name)) {
  if (coords_.size() < 4 || coords_.size() > kMaxDim)
    throw DimensionError("curve needs 4..6 coordinate functions");
  if (!(domain_.second > domain_.first)) throw DomainError("empty curve domain");
  table_.resize(kTableOrder + 1);
  table_[0] = coords_;
  for (auto& t : table_[0]) t = simplify(t);
  for (int k = 1; k <= kTableOrder; ++k)
    for (const auto& t : table_[k - 1]) table_[k].push_back(diff_u(t));
}

std::vector<AVec> ParamCurve::raw_derivatives(double s, int max_order) const {
  if (max_order > kTableOrder) throw OrderError("derivative table exhausted");
  std::vector<AVec> out;
  for (int k = 0; k <= max_order; ++k) {
    AVec v(dim());
    for (int i = 0; i < dim(); ++i) v[i] = eval(table_[k][i], s);
    out.push_back(v);
  }
  return out;
}

ArcLengthCurve::ArcLengthCurve(std::shared_ptr<const ParamCurve> base, int panels,
                               std::string name)
    : base_(std::move(base)), name_(std::move(name)) {
  auto [a, b] = base_->domain();
  knots_t_.resize(panels + 1);
  knots_s_.resize(panels + 1);
  knots_t_[0] = a;
  knots_s_[0] = 0.0;
  for (int i = 1; i <= panels; ++i) {
    knots_t_[i] = a + (b - a) * i / panels;
    knots_s_[i] = knots_s_[i - 1] + arc(knots_t_[i - 1], knots_t_[i]);
  }
  length_ = knots_s_.back();
}

double ArcLengthCurve::speed(double t) const {
  AVec d = base_->raw_derivatives(t, 1)[1];
  double q = pseudo_inner(d, d);
  if (!(q > 0.0)) throw FrameUndefinedError("base curve is not spacelike at t=" + std::to_string(t));
  return std::sqrt(q);
}

double ArcLengthCurve::arc(double t0, double t1) const {
  return boost::math::quadrature::gauss<double, 20>::integrate(
      [this](double t) { return speed(t); }, t0, t1);
}

double ArcLengthCurve::base_parameter(double s) const {
  auto it = std::upper_bound(knots_s_.begin(), knots_s_.end(), s);
  std::size_t i = it == knots_s_.begin() ? 0 : static_cast<std::size_t>(it - knots_s_.begin()) - 1;
  i = std::min(i, knots_s_.size() - 2);
  const double t0 = knots_t_[i];
  double t = t0 + (s - knots_s_[i]) / (knots_s_[i + 1] - knots_s_[i]) * (knots_t_[i + 1] - t0);
  for (int it_n = 0; it_n < 30; ++it_n) {
    double f = knots_s_[i] + arc(t0, t) - s;
    double step = f / speed(t);
    t -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(t))) break;
  }
  return t;
}

std::vector<AVec> ArcLengthCurve::raw_derivatives(double s, int n) const {
  const double t = base_parameter(s);
  if (n == 0) return {base_->raw_derivatives(t, 0)[0]};
  VecJet c = VecJet::from_derivs(base_->raw_derivatives(t, n), n);
  Jet speed_sq = dot(c.deriv(), c.deriv());
  Jet sp = sqrt(speed_sq);  // order n-1
  Jet arc(0.0, n);          // s(t) - s
  for (int k = 1; k <= n; ++k) arc.a[k] = sp.a[k - 1] / k;
  Jet dt = revert(arc);  // t(s) - t
  dt.a[0] = t;
  VecJet g = compose(c, dt);
  std::vector<AVec> out;
  for (int k = 0; k <= n; ++k) out.push_back(g.d(k));
  return out;
}

ParamSurface::ParamSurface(std::vector<TermSum> coords, Interval du, Interval dv,
                           std::string name)
    : coords_(std::move(coords)), du_(du), dv_(dv), name_(std::move(name)) {
  if (coords_.size() != 5) throw DimensionError("surfaces live in R^5_2 (five coordinates)");
  if (!(du_.second > du_.first) || !(dv_.second > dv_.first))
    throw DomainError("empty surface domain");
  constexpr int K = kMaxSurfaceOrder;
  table_.assign((K + 1) * (K + 1), {});
  table_[0] = coords_;
  for (auto& t : table_[0]) t = simplify(t);
  for (int i = 0; i <= K; ++i)
    for (int j = 0; j + i <= K; ++j) {
      if (i == 0 && j == 0) continue;
      const auto& src = j > 0 ? table_[i * (K + 1) + j - 1] : table_[(i - 1) * (K + 1)];
      auto& dst = table_[i * (K + 1) + j];
      for (const auto& t : src) dst.push_back(j > 0 ? diff_v(t) : diff_u(t));
    }
  reference_ = AVec::basis(5, 0);
}

void ParamSurface::set_reference(const AVec& r) {
  if (r.dim != 5) throw DimensionError("reference vector must be 5-dimensional");
  reference_ = r;
}

void ParamSurface::check_param(double u, double v) const {
  auto inside = [](double x, Interval d) {
    double slack = kDomainSlack * std::max(1.0, d.second - d.first);
    return std::isfinite(x) && x >= d.first - slack && x <= d.second + slack;
  };
  if (!inside(u, du_) || !inside(v, dv_))
    throw DomainError("surface parameter (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") outside domain");
}

AVec ParamSurface::partial(double u, double v, int i, int j) const {
  if (i < 0 || j < 0 || i + j > kMaxSurfaceOrder)
    throw OrderError("surface partial order must be <= 5");
  const auto& row = table_[i * (kMaxSurfaceOrder + 1) + j];
  AVec r(5);
  for (int k = 0; k < 5; ++k) r[k] = ads::eval(row[k], u, v);
  return r;
}

ValidationReport validate(const CurveSource& c, int n, const ToleranceConfig& cfg) {
  if (n < 2) throw GridError("validate needs at least two samples");
  ValidationReport rep;
  auto [a, b] = c.domain();
  for (int i = 0; i < n; ++i) {
    double s = a + (b - a) * i / (n - 1);
    auto d = c.derivatives(s, 1);
    double ra = std::abs(ads_residual(d[0]));
    double rs = std::abs(pseudo_inner(d[1], d[1]) - 1.0);
    rep.max_ads_residual = std::max(rep.max_ads_residual, ra);
    rep.max_unit_speed_residual = std::max(rep.max_unit_speed_residual, rs);
    if (!(ra < cfg.algebraic_tol) || !(rs < cfg.algebraic_tol)) rep.failing_samples.push_back({s});
  }
  rep.ok = rep.failing_samples.empty();
  return rep;
}

ValidationReport validate(const ParamSurface& sf, int n, const ToleranceConfig& cfg) {
  if (n < 2) throw GridError("validate needs at least two samples");
  ValidationReport rep;
  auto [u0, u1] = sf.domain_u();
  auto [v0, v1] = sf.domain_v();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double u = u0 + (u1 - u0) * i / (n - 1), v = v0 + (v1 - v0) * j / (n - 1);
      AVec X = sf.eval(u, v), Xu = sf.partial(u, v, 1, 0), Xv = sf.partial(u, v, 0, 1);
      double ra = std::abs(ads_residual(X));
      double g11 = pseudo_inner(Xu, Xu), g12 = pseudo_inner(Xu, Xv), g22 = pseudo_inner(Xv, Xv);
      double tr = g11 + g22, det = g11 * g22 - g12 * g12;
      double lmin = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4 * det)));
      double bad = lmin > cfg.algebraic_tol ? 0.0 : cfg.algebraic_tol - lmin;
      rep.max_ads_residual = std::max(rep.max_ads_residual, ra);
      rep.max_unit_speed_residual = std::max(rep.max_unit_speed_residual, bad);
      if (!(ra < cfg.algebraic_tol) || bad > 0.0) rep.failing_samples.push_back({u, v});
    }
  rep.ok = rep.failing_samples.empty();
  return rep;
}

// ---------------------------------------------------------------- presets

namespace {

using std::numbers::pi;

double take(Params& p, const std::string& key, double dflt) {
  auto it = p.find(key);
  if (it == p.end()) return dflt;
  double v = it->second;
  p.erase(it);
  return v;
}

void no_leftovers(const Params& p, const std::string& preset_name) {
  if (!p.empty())
    throw PresetConstraintError("unknown parameter '" + p.begin()->first + "' for preset " +
                                preset_name);
}

TermSum konst(double c) { return poly1(c, 0); }

Geometry curve_geom(std::shared_ptr<const CurveSource> c) {
  Geometry g;
  g.name = c->name();
  g.curve = std::move(c);
  return g;
}

Geometry surface_geom(std::shared_ptr<const ParamSurface> s) {
  Geometry g;
  g.name = s->name();
  g.surface = std::move(s);
  return g;
}

Geometry ads3_circle(Params p) {
  double r = take(p, "r", 1.0);
  no_leftovers(p, "ads3-circle");
  if (!(r > 0)) throw PresetConstraintError("ads3-circle needs r > 0");
  std::vector<TermSum> c = {konst(std::sqrt(1 + r * r)), {}, cos1(r, 1 / r), sin1(r, 1 / r)};
  return curve_geom(std::make_shared<ParamCurve>(c, Interval{0.0, 2 * pi * r}, "ads3-circle"));
}

// (A cos ps, A sin ps, B cos qs, B sin qs, ...) with A^2 = 1 + B^2 and -A^2 p^2 + B^2 q^2 = 1
double helix_q(double B, double p) {
  if (!(B > 0)) throw PresetConstraintError("helix needs B > 0");
  double q2 = (1 + (1 + B * B) * p * p) / (B * B);
  return std::sqrt(q2);
}

Geometry helix(Params p, int dim, const std::string& name) {
  double B = take(p, "B", 1.0);
  double pp = take(p, "p", dim == 4 ? 0.5 : 1.0);
  double q = helix_q(B, pp);
  if (p.count("q")) {
    double qq = take(p, "q", q);
    if (std::abs(qq - q) > 1e-12 * std::max(1.0, q))
      throw PresetConstraintError("q inconsistent with unit speed; expected " + std::to_string(q));
  }
  double smax = take(p, "smax", 2 * pi);
  no_leftovers(p, name);
  double A = std::sqrt(1 + B * B);
  std::vector<TermSum> c = {cos1(A, pp), sin1(A, pp), cos1(B, q), sin1(B, q)};
  if (dim == 5) c.push_back({});
  return curve_geom(std::make_shared<ParamCurve>(c, Interval{0.0, smax}, name));
}

// SL(2,R) curve R(pt) U(a + eps cos qt) R(rt), reparametrized by arc length
Geometry ads3_generic(Params p) {
  double a = take(p, "a", 2.0), eps = take(p, "eps", 0.5), q = take(p, "q", 3.0);
  double pl = take(p, "p", -0.9), pr = take(p, "r", 1.1), tmax = take(p, "tmax", 2 * pi);
  no_leftovers(p, "ads3-generic-curve");
  const double phi = pl + pr, psi = pr - pl;
  TermSum half_x = konst(a / 2) + cos1(eps / 2, q);
  std::vector<TermSum> c = {cos1(1, phi) + half_x * sin1(1, phi),
                            sin1(-1, phi) + half_x * cos1(1, phi), half_x * sin1(1, psi),
                            half_x * cos1(1, psi)};
  auto base = std::make_shared<ParamCurve>(c, Interval{0.0, tmax}, "ads3-generic-base");
  for (int i = 0; i <= 400; ++i) {
    double t = tmax * i / 400;
    AVec d = base->raw_derivatives(t, 1)[1];
    if (!(pseudo_inner(d, d) > 1e-6))
      throw PresetConstraintError("ads3-generic-curve parameters give a non-spacelike base curve");
  }
  return curve_geom(std::make_shared<ArcLengthCurve>(base, 512, "ads3-generic-curve"));
}

// Curve on the flat leaf c + alpha e1 + beta e2 + chi e0 + zeta (e_{-1} + e3) with
// zeta = (alpha^2 + beta^2 - chi^2)/2; unit speed because the hodograph
// (cos ws - T sin ws, sin ws + T cos ws, T) is unit in Minkowski 3-space.
// T = offset + slope s + amp sin(nu s + phase). A single window cannot cross
// causal cases (that needs kappa1 = 0 or a null normal), so "family" picks
// parameters whose whole domain is Case 1, 2 or 3.
Geometry ads4_generic(Params p) {
  struct Family {
    double omega, offset, slope, amp, nu, phase, half;
  };
  static const Family fam[3] = {{0.797, -0.017, -1.5, 0.048, 4.055, -0.2433, 0.76},
                                {0.38, -0.655, 0.536, 1.107, 1.677, 0.8385, 1.30},
                                {0.5834, 1.1133, -0.9373, 0.0238, 1.6498, 1.8630, 0.9}};
  int which = static_cast<int>(take(p, "family", 1.0));
  if (which < 1 || which > 3) throw PresetConstraintError("family must be 1, 2 or 3");
  const Family& f = fam[which - 1];
  double w = take(p, "omega", f.omega), T0 = take(p, "offset", f.offset);
  double slope = take(p, "slope", f.slope), amp = take(p, "amp", f.amp);
  double nu = take(p, "nu", f.nu), phase = take(p, "phase", f.phase);
  double smin = take(p, "smin", -f.half), smax = take(p, "smax", f.half);
  no_leftovers(p, "ads4-generic-curve");
  if (w == 0.0 || nu == 0.0) throw PresetConstraintError("omega and nu must be non-zero");
  TermSum T = konst(T0) + poly1(slope, 1) + sin1(amp * std::cos(phase), nu) +
              cos1(amp * std::sin(phase), nu);
  TermSum da = cos1(1, w) - T * sin1(1, w);
  TermSum db = sin1(1, w) + T * cos1(1, w);
  TermSum alpha = integrate_u(da), beta = integrate_u(db), chi = integrate_u(T);
  TermSum zeta = 0.5 * (alpha * alpha + beta * beta - chi * chi);
  std::vector<TermSum> c = {konst(1.0) + zeta, chi, alpha, beta, zeta};
  return curve_geom(
      std::make_shared<ParamCurve>(c, Interval{smin, smax}, "ads4-generic-curve"));
}

Geometry lightcone_sphere(Params p) {
  double r = take(p, "r", 1.0);
  no_leftovers(p, "ads4-lightcone-sphere");
  if (!(r > 0)) throw PresetConstraintError("lightcone sphere needs r > 0");
  // r cos u cos v = r/2 (cos(u-v) + cos(u+v)) and so on
  std::vector<TermSum> c = {konst(1.0), konst(r), cos2(r / 2, 1, -1) + cos2(r / 2, 1, 1),
                            sin2(-r / 2, 1, -1) + sin2(r / 2, 1, 1), sin2(r, 1, 0)};
  auto s = std::make_shared<ParamSurface>(c, Interval{-1.2, 1.2}, Interval{0.0, 2 * pi},
                                          "ads4-lightcone-sphere");
  // e_0 projects to a null normal when r = 1; e_{-1} - e_0 stays timelike for every r
  AVec ref(5);
  ref[0] = 1.0;
  ref[1] = -1.0;
  s->set_reference(ref);
  return surface_geom(s);
}

// torus of revolution inside the hyperbolic slice x_0 = 0
Geometry product_torus(Params p) {
  double R = take(p, "R", 2.0), m = take(p, "m", 0.5);
  no_leftovers(p, "ads4-product-torus");
  if (!(R > 0) || !(m > 0)) throw PresetConstraintError("torus needs R > 0 and m > 0");
  double r = m * std::sqrt((1 + R * R + m * m) / (1 + m * m));
  double A = std::sqrt(1 + R * R + m * m);
  double B = R * r / A;
  std::vector<TermSum> c = {konst(A) + cos2(B, 0, 1), {},
                            cos2(R, 1, 0) + cos2(r / 2, 1, 1) + cos2(r / 2, 1, -1),
                            sin2(R, 1, 0) + sin2(r / 2, 1, 1) + sin2(r / 2, 1, -1), sin2(m, 0, 1)};
  return surface_geom(std::make_shared<ParamSurface>(c, Interval{0.0, 2 * pi},
                                                     Interval{0.0, 2 * pi}, "ads4-product-torus"));
}

// graph over the flat leaf: alpha = u, beta = v, chi = a cos u cos v + b sin(2u + v)
Geometry generic_surface(Params p) {
  double a = take(p, "a", 0.3), b = take(p, "b", 0.1);
  no_leftovers(p, "ads4-generic-surface");
  if (std::abs(a) + 3 * std::abs(b) >= 0.9)
    throw PresetConstraintError("generic surface needs |a| + 3|b| < 0.9 to stay spacelike");
  TermSum alpha = poly2(1, 1, 0), beta = poly2(1, 0, 1);
  TermSum chi = cos2(a / 2, 1, 1) + cos2(a / 2, 1, -1) + sin2(b, 2, 1);
  TermSum zeta = 0.5 * (alpha * alpha + beta * beta - chi * chi);
  std::vector<TermSum> c = {konst(1.0) + zeta, chi, alpha, beta, zeta};
  return surface_geom(std::make_shared<ParamSurface>(c, Interval{-1.5, 1.5}, Interval{-1.5, 1.5},
                                                     "ads4-generic-surface"));
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"ads3-circle",         "ads3-helix",          "ads3-generic-curve",
          "ads4-helix",          "ads4-generic-curve",  "ads4-lightcone-sphere",
          "ads4-product-torus",  "ads4-generic-surface"};
}

Geometry preset(const std::string& name, const Params& params) {
  if (name == "ads3-circle") return ads3_circle(params);
  if (name == "ads3-helix") return helix(params, 4, name);
  if (name == "ads3-generic-curve") return ads3_generic(params);
  if (name == "ads4-helix") return helix(params, 5, name);
  if (name == "ads4-generic-curve") return ads4_generic(params);
  if (name == "ads4-lightcone-sphere") return lightcone_sphere(params);
  if (name == "ads4-product-torus") return product_torus(params);
  if (name == "ads4-generic-surface") return generic_surface(params);
  throw PresetConstraintError("unknown preset '" + name + "'");
}

}  // namespace ads

namespace ads {

ObjectKind object_kind(const Geometry& g) {
  if (g.is_curve()) {
    if (g.curve->dim() == 4) return ObjectKind::CurveAdS3;
    if (g.curve->dim() == 5) return ObjectKind::CurveAdS4;
    throw DimensionError("curves must live in R^4_2 or R^5_2");
  }
  if (!g.surface) throw InputError("empty geometry");
  if (g.surface->dim() != 5) throw DimensionError("surfaces must live in R^5_2");
  return ObjectKind::Surface;
}

int base_dim(const Geometry& g) { return g.is_curve() ? 1 : 2; }

AVec base_point(const Geometry& g, const BaseParams& u) {
  if (g.is_curve()) return g.curve->derivatives(u[0], 0)[0];
  g.surface->check_param(u[0], u[1]);
  return g.surface->eval(u[0], u[1]);
}

std::vector<AVec> base_derivatives(const Geometry& g, const BaseParams& u, int order) {
  if (g.is_curve()) return g.curve->derivatives(u[0], order);
  if (order > kMaxSurfaceOrder) throw OrderError("surface partials are available to order 5");
  g.surface->check_param(u[0], u[1]);
  std::vector<AVec> out;
  for (int k = 0; k <= order; ++k)
    for (int j = 0; j <= k; ++j) out.push_back(g.surface->partial(u[0], u[1], k - j, j));
  return out;
}

}  // namespace ads
