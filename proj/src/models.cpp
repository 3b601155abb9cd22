#include "adsgeo/models.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "adsgeo/lightlike_sheets.hpp"

namespace ads {

namespace {

// forward-mode value with up to three partials
struct Dual {
  double v = 0;
  std::array<double, 3> d{};
  Dual() = default;
  Dual(double x) : v(x) {}
  static Dual var(double x, int k) {
    Dual r(x);
    r.d[k] = 1;
    return r;
  }
};
Dual operator+(Dual a, const Dual& b) {
  a.v += b.v;
  for (int i = 0; i < 3; ++i) a.d[i] += b.d[i];
  return a;
}
Dual operator-(Dual a, const Dual& b) {
  a.v -= b.v;
  for (int i = 0; i < 3; ++i) a.d[i] -= b.d[i];
  return a;
}
Dual operator*(const Dual& a, const Dual& b) {
  Dual r(a.v * b.v);
  for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
Dual operator*(double s, Dual a) {
  a.v *= s;
  for (auto& x : a.d) x *= s;
  return a;
}
Dual dcosh(const Dual& a) {
  Dual r(std::cosh(a.v));
  for (int i = 0; i < 3; ++i) r.d[i] = std::sinh(a.v) * a.d[i];
  return r;
}
Dual dsinh(const Dual& a) {
  Dual r(std::sinh(a.v));
  for (int i = 0; i < 3; ++i) r.d[i] = std::cosh(a.v) * a.d[i];
  return r;
}

std::array<Dual, 4> normal_form(SingularityLabel l, const Dual& u1, const Dual& u2, const Dual& u3) {
  auto sq = [](const Dual& x) { return x * x; };
  auto cube = [](const Dual& x) { return x * x * x; };
  switch (l) {
    case SingularityLabel::A1_Regular: return {u1, u2, u3, Dual(0.0)};
    case SingularityLabel::A2_CuspidalEdge: return {3 * sq(u1), 2 * cube(u1), u2, u3};
    case SingularityLabel::A3_Swallowtail:
      return {4 * cube(u1) + 2 * u1 * u2, 3 * sq(sq(u1)) + u2 * sq(u1), u2, u3};
    case SingularityLabel::A4_Butterfly:
      return {5 * sq(sq(u1)) + 3 * u2 * sq(u1) + 2 * u1 * u3,
              4 * sq(sq(u1)) * u1 + 2 * u2 * cube(u1) + u3 * sq(u1), u2, u3};
    case SingularityLabel::D4_Plus:
      return {2 * (cube(u1) + cube(u2)) + u1 * u2 * u3, 3 * sq(u1) + u2 * u3, 3 * sq(u2) + u1 * u3, u3};
    case SingularityLabel::D4_Minus:
      return {(1.0 / 3.0) * cube(u1) - u1 * sq(u2) + (sq(u1) + sq(u2)) * u3,
              sq(u2) - sq(u1) - 2 * u1 * u3, 2 * (u1 * u2 - u2 * u3), u3};
    default: throw InputError("no normal form for a degenerate label");
  }
}

void check_arity(const std::vector<double>& u, std::size_t n, const char* what) {
  if (u.size() != n)
    throw ArityError(std::string(what) + " expects " + std::to_string(n) + " parameters");
}

}  // namespace

const char* to_string(SingularityLabel l) {
  switch (l) {
    case SingularityLabel::A1_Regular: return "A1_Regular";
    case SingularityLabel::A2_CuspidalEdge: return "A2_CuspidalEdge";
    case SingularityLabel::A3_Swallowtail: return "A3_Swallowtail";
    case SingularityLabel::A4_Butterfly: return "A4_Butterfly";
    case SingularityLabel::D4_Plus: return "D4_Plus";
    case SingularityLabel::D4_Minus: return "D4_Minus";
    default: return "Degenerate";
  }
}

SingularityLabel label_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(SingularityLabel::Degenerate); ++i) {
    auto l = static_cast<SingularityLabel>(i);
    std::string full = to_string(l);
    if (s == full || s == full.substr(0, full.find('_'))) return l;
  }
  if (s == "D4+") return SingularityLabel::D4_Plus;
  if (s == "D4-") return SingularityLabel::D4_Minus;
  throw InputError("unknown singularity label " + s);
}

int ak_index(SingularityLabel l) {
  int i = static_cast<int>(l);
  return i <= 3 ? i + 1 : -1;
}

SingularityLabel label_for_ak(int k) {
  if (k >= 1 && k <= 4) return static_cast<SingularityLabel>(k - 1);
  return SingularityLabel::Degenerate;
}

std::vector<double> eval_normal_form(SingularityLabel l, const std::vector<double>& u) {
  check_arity(u, 3, "normal forms");
  auto f = normal_form(l, u[0], u[1], u[2]);
  return {f[0].v, f[1].v, f[2].v, f[3].v};
}

Eigen::MatrixXd normal_form_jacobian(SingularityLabel l, const std::vector<double>& u) {
  check_arity(u, 3, "normal forms");
  auto f = normal_form(l, Dual::var(u[0], 0), Dual::var(u[1], 1), Dual::var(u[2], 2));
  Eigen::MatrixXd J(4, 3);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 3; ++c) J(r, c) = f[r].d[c];
  return J;
}

const char* to_string(ModelSet m) {
  switch (m) {
    case ModelSet::C23: return "C23";
    case ModelSet::SW: return "SW";
    case ModelSet::BF: return "BF";
    case ModelSet::C234: return "C234";
    case ModelSet::C2345: return "C2345";
    case ModelSet::CBF: return "CBF";
    case ModelSet::SigmaPU: return "SigmaPU";
    default: return "SigmaPY";
  }
}

ModelSet model_set_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ModelSet::SigmaPY); ++i)
    if (s == to_string(static_cast<ModelSet>(i))) return static_cast<ModelSet>(i);
  throw InputError("unknown model set " + s);
}

int model_set_arity(ModelSet m) {
  switch (m) {
    case ModelSet::C23:
    case ModelSet::C234:
    case ModelSet::C2345:
    case ModelSet::SigmaPU: return 1;
    case ModelSet::SW:
    case ModelSet::CBF:
    case ModelSet::SigmaPY: return 2;
    default: return 3;
  }
}

std::vector<double> eval_model_singular_set(ModelSet m, const std::vector<double>& t) {
  check_arity(t, static_cast<std::size_t>(model_set_arity(m)), to_string(m));
  switch (m) {
    case ModelSet::C23: return {t[0] * t[0], t[0] * t[0] * t[0]};
    case ModelSet::C234: {
      double u = t[0];
      return {u * u, u * u * u, u * u * u * u};
    }
    case ModelSet::C2345: {
      double u = t[0];
      return {u * u, u * u * u, u * u * u * u, u * u * u * u * u};
    }
    case ModelSet::SW: {
      double u = t[0], v = t[1];
      return {3 * u * u + u * u * v, 4 * u * u * u + 2 * u * v, v};
    }
    case ModelSet::BF: {
      double u = t[0], v = t[1], w = t[2];
      double u2 = u * u;
      return {5 * u2 * u2 + 3 * v * u2 + 2 * w * u, 4 * u2 * u2 * u + 2 * v * u2 * u + w * u2, u, v};
    }
    case ModelSet::CBF: {
      double a = t[0], b = t[1];
      double a2 = a * a, a3 = a2 * a;
      return {10 * a3 + 3 * b * a, 5 * a2 * a2 + b * a2, 6 * a3 * a2 + b * a3, b};
    }
    case ModelSet::SigmaPU: {
      double u = t[0];
      return {5 * u * u * u / 108, u * u / 4, u * u / 4, u};
    }
    default: {
      int br = static_cast<int>(std::lround(t[0]));
      double u = t[1];
      if (br < 0 || br > 2 || std::abs(t[0] - br) > 0) throw InputError("SigmaPY branch must be 0, 1 or 2");
      if (br == 0) return {4 * u * u * u / 3, -3 * u * u, 0, u};
      double s = br == 1 ? -1.0 : 1.0;
      return {4 * u * u * u / 3, 1.5 * u * u, s * 1.5 * std::sqrt(3.0) * u * u, u};
    }
  }
}

JacobianMap normal_form_map(SingularityLabel l) {
  return [l](const std::vector<double>& u, std::vector<double>& value, Eigen::MatrixXd& jac) {
    auto f = normal_form(l, Dual::var(u[0], 0), Dual::var(u[1], 1), Dual::var(u[2], 2));
    value.assign(4, 0);
    jac.resize(4, 3);
    for (int r = 0; r < 4; ++r) {
      value[r] = f[r].v;
      for (int c = 0; c < 3; ++c) jac(r, c) = f[r].d[c];
    }
  };
}

JacobianMap purse_map(int nappe) {
  const double s = nappe >= 0 ? 1.0 : -1.0;
  return [s](const std::vector<double>& p, std::vector<double>& value, Eigen::MatrixXd& jac) {
    Dual phi = Dual::var(p[0], 0), u3 = Dual::var(p[1], 1);
    Dual a = (1.0 / 3.0) * u3 * (s * dcosh(phi));  // u1 + u2
    Dual b = (1.0 / 3.0) * u3 * dsinh(phi);        // u1 - u2
    Dual u1 = 0.5 * (a + b), u2 = 0.5 * (a - b);
    auto f = normal_form(SingularityLabel::D4_Plus, u1, u2, u3);
    value.assign(4, 0);
    jac.resize(4, 2);
    for (int r = 0; r < 4; ++r) {
      value[r] = f[r].v;
      for (int c = 0; c < 2; ++c) jac(r, c) = f[r].d[c];
    }
  };
}

std::vector<CriticalSample> brute_force_critical_set(const JacobianMap& f, const BruteGrid& grid,
                                                     const ToleranceConfig& cfg, unsigned seed) {
  const int m = static_cast<int>(grid.lo.size());
  if (m < 1 || grid.hi.size() != grid.lo.size()) throw GridError("grid box needs matching lo/hi");
  if (!(grid.pitch > 0)) throw GridError("grid pitch must be positive");
  std::vector<int> n(m);
  std::size_t total = 1;
  for (int k = 0; k < m; ++k) {
    if (!(grid.hi[k] > grid.lo[k])) throw GridError("empty grid axis");
    n[k] = static_cast<int>(std::floor((grid.hi[k] - grid.lo[k]) / grid.pitch + 1e-9)) + 1;
    if (n[k] < 2) throw GridError("grid too coarse (< 2 points per axis)");
    total *= static_cast<std::size_t>(n[k]);
  }
  std::vector<double> val;
  Eigen::MatrixXd J;
  f(grid.lo, val, J);
  const int out = static_cast<int>(J.rows());
  if (J.cols() != m || out < m) throw GridError("map must go from the grid space to a larger space");

  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  Eigen::MatrixXd P(m, out);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < out; ++j) P(i, j) = nd(rng);

  auto indicator = [&](const std::vector<double>& u) {
    f(u, val, J);
    return (P * J).determinant();
  };
  auto node = [&](std::size_t idx) {
    std::vector<double> u(m);
    for (int k = m - 1; k >= 0; --k) {
      u[k] = grid.lo[k] + grid.pitch * static_cast<double>(idx % n[k]);
      idx /= n[k];
    }
    return u;
  };
  std::vector<double> ind(total);
  for (std::size_t i = 0; i < total; ++i) ind[i] = indicator(node(i));

  std::vector<CriticalSample> outpts;
  auto accept = [&](const std::vector<double>& u) {
    f(u, val, J);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
    auto sv = svd.singularValues();
    if (sv(0) > 0 && sv(m - 1) / sv(0) < 1e-6) outpts.push_back({u, val});
  };
  std::vector<std::size_t> stride(m, 1);
  for (int k = m - 2; k >= 0; --k) stride[k] = stride[k + 1] * n[k + 1];
  for (std::size_t i = 0; i < total; ++i) {
    if (ind[i] == 0) {
      accept(node(i));
      continue;
    }
    const auto u0 = node(i);
    for (int k = 0; k < m; ++k) {
      if (static_cast<int>((i / stride[k]) % n[k]) + 1 >= n[k]) continue;
      double f0 = ind[i], f1 = ind[i + stride[k]];
      if (f1 == 0 || (f0 > 0) == (f1 > 0)) continue;
      double a = 0, b = grid.pitch;
      std::vector<double> u = u0;
      while (b - a > cfg.bisection_tol) {
        double mid = 0.5 * (a + b);
        u[k] = u0[k] + mid;
        double fm = indicator(u);
        if (fm == 0) {
          a = b = mid;
          break;
        }
        if ((fm > 0) == (f0 > 0)) a = mid;
        else b = mid;
      }
      u[k] = u0[k] + 0.5 * (a + b);
      accept(u);
    }
  }
  return outpts;
}

std::vector<CriticalSample> brute_force_critical_set(SingularityLabel l, const BruteGrid& grid,
                                                     const ToleranceConfig& cfg, unsigned seed) {
  if (grid.lo.size() != 3) throw GridError("normal forms need a 3-dimensional grid box");
  return brute_force_critical_set(normal_form_map(l), grid, cfg, seed);
}

namespace {
std::vector<AVec> as_points(const std::vector<std::vector<double>>& s) {
  std::vector<AVec> out;
  for (const auto& p : s) {
    if (p.size() > static_cast<std::size_t>(kMaxDim)) throw DimensionError("point dimension above 6");
    AVec v(static_cast<int>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) v[static_cast<int>(i)] = p[i];
    out.push_back(v);
  }
  return out;
}
}  // namespace

double hausdorff(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
  return compare_point_sets(as_points(a), as_points(b));
}

double directed_hausdorff(const std::vector<std::vector<double>>& from,
                          const std::vector<std::vector<double>>& to) {
  return directed_distance(as_points(from), as_points(to));
}

}  // namespace ads
