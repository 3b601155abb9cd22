#include "adsgeo/semi_euclidean.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace ads {

AVec::AVec(std::initializer_list<double> xs) {
  if (xs.size() > kMaxDim) throw DimensionError("vector longer than 6 coordinates");
  dim = static_cast<int>(xs.size());
  std::copy(xs.begin(), xs.end(), c.begin());
}

AVec AVec::basis(int d, int label) {
  if (label < -1 || label > d - 2) throw DimensionError("basis label out of range");
  AVec e(d);
  e.c[label + 1] = 1.0;
  return e;
}

static void same_dim(const AVec& a, const AVec& b) {
  if (a.dim != b.dim)
    throw DimensionError("dimension mismatch " + std::to_string(a.dim) + " vs " +
                         std::to_string(b.dim));
}

AVec& AVec::operator+=(const AVec& o) {
  same_dim(*this, o);
  for (int i = 0; i < dim; ++i) c[i] += o.c[i];
  return *this;
}
AVec& AVec::operator-=(const AVec& o) {
  same_dim(*this, o);
  for (int i = 0; i < dim; ++i) c[i] -= o.c[i];
  return *this;
}
AVec& AVec::operator*=(double s) {
  for (int i = 0; i < dim; ++i) c[i] *= s;
  return *this;
}
double AVec::max_abs() const {
  double m = 0;
  for (int i = 0; i < dim; ++i) m = std::max(m, std::abs(c[i]));
  return m;
}
double AVec::sum_sq() const {
  double m = 0;
  for (int i = 0; i < dim; ++i) m += c[i] * c[i];
  return m;
}
bool AVec::finite() const {
  for (int i = 0; i < dim; ++i)
    if (!std::isfinite(c[i])) return false;
  return true;
}

AVec operator+(AVec a, const AVec& b) { return a += b; }
AVec operator-(AVec a, const AVec& b) { return a -= b; }
AVec operator-(AVec a) { return a *= -1.0; }
AVec operator*(double s, AVec a) { return a *= s; }
AVec operator*(AVec a, double s) { return a *= s; }
AVec operator/(AVec a, double s) { return a *= 1.0 / s; }

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Null: return "null";
    case CausalClass::Timelike: return "timelike";
  }
  return "?";
}

void ToleranceConfig::check() const {
  if (!(algebraic_tol > 0 && zero_detect_tol > 0 && fd_step > 0 && bisection_tol > 0))
    throw InputError("tolerances must be strictly positive");
}

ToleranceConfig ToleranceConfig::from_string(const std::string& spec) {
  ToleranceConfig cfg;
  if (spec.empty()) return cfg;
  if (spec.find('=') == std::string::npos) {
    cfg.zero_detect_tol = std::stod(spec);
    cfg.check();
    return cfg;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("bad tolerance item '" + item + "'");
    std::string key = item.substr(0, eq);
    double val = std::stod(item.substr(eq + 1));
    if (key == "algebraic") cfg.algebraic_tol = val;
    else if (key == "zero") cfg.zero_detect_tol = val;
    else if (key == "fd") cfg.fd_step = val;
    else if (key == "bisection") cfg.bisection_tol = val;
    else throw InputError("unknown tolerance key '" + key + "'");
  }
  cfg.check();
  return cfg;
}

ToleranceConfig ToleranceConfig::from_env() {
  const char* v = std::getenv("ADS_TOL");
  return v ? from_string(v) : ToleranceConfig{};
}

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

double pseudo_inner(const AVec& x, const AVec& y) {
  same_dim(x, y);
  double s = -x.c[0] * y.c[0] - x.c[1] * y.c[1];
  for (int i = 2; i < x.dim; ++i) s += x.c[i] * y.c[i];
  return s;
}

CausalClass causal_class(const AVec& x, const ToleranceConfig& cfg) {
  if (x.max_abs() <= cfg.algebraic_tol) throw ZeroVectorError("causal class of zero vector");
  double q = pseudo_inner(x, x);
  double scale = std::max(1.0, x.sum_sq());
  if (q > cfg.algebraic_tol * scale) return CausalClass::Spacelike;
  if (q < -cfg.algebraic_tol * scale) return CausalClass::Timelike;
  return CausalClass::Null;
}

double pseudo_norm(const AVec& x) { return std::sqrt(std::abs(pseudo_inner(x, x))); }

double det_rows(const std::vector<AVec>& rows) {
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    if (rows[i].dim != n) throw DimensionError("determinant needs a square array");
    for (int j = 0; j < n; ++j) m(i, j) = rows[i].c[j];
  }
  return m.partialPivLu().determinant();
}

// w_j = eps_j (-1)^j M_{0j}, eps = -1 on the two timelike slots, so <x,w> = det(x, v...)
AVec wedge(const std::vector<AVec>& vs) {
  if (vs.empty()) throw ArityError("wedge of nothing");
  const int d = vs[0].dim;
  if (static_cast<int>(vs.size()) != d - 1)
    throw ArityError("wedge in dim " + std::to_string(d) + " takes " + std::to_string(d - 1) +
                     " vectors, got " + std::to_string(vs.size()));
  for (const auto& v : vs)
    if (v.dim != d) throw DimensionError("wedge arguments differ in dimension");
  AVec w(d);
  Eigen::MatrixXd minor(d - 1, d - 1);
  for (int j = 0; j < d; ++j) {
    for (int r = 0; r < d - 1; ++r)
      for (int k = 0, col = 0; k < d; ++k)
        if (k != j) minor(r, col++) = vs[r].c[k];
    double m = minor.partialPivLu().determinant();
    double eps = j < 2 ? -1.0 : 1.0;
    w.c[j] = eps * ((j % 2) ? -m : m);
  }
  return w;
}

double ads_residual(const AVec& x) { return pseudo_inner(x, x) + 1.0; }

double nullcone_residual(const AVec& x, const AVec& a) {
  AVec d = x - a;
  return pseudo_inner(d, d);
}

Eigen::MatrixXd gram(const std::vector<AVec>& vs) {
  const int n = static_cast<int>(vs.size());
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = pseudo_inner(vs[i], vs[j]);
  return g;
}

EigenResult generalized_eigen(const Eigen::MatrixXd& h, const Eigen::MatrixXd& g, double tol) {
  if (h.rows() != h.cols() || g.rows() != g.cols() || h.rows() != g.rows())
    throw DimensionError("generalized_eigen needs matching square matrices");
  if (h.rows() == 0 || h.rows() > 3) throw DimensionError("generalized_eigen supports size 1..3");
  for (int k = 1; k <= g.rows(); ++k)
    if (!(g.topLeftCorner(k, k).determinant() > tol))
      throw MetricDegenerateError("metric is not positive definite");
  Eigen::MatrixXd hs = 0.5 * (h + h.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(hs, g);
  if (es.info() != Eigen::Success) throw MetricDegenerateError("generalized eigensolver failed");
  EigenResult r;
  for (int i = 0; i < hs.rows(); ++i) {
    r.values.push_back(es.eigenvalues()(i));
    r.vectors.push_back(es.eigenvectors().col(i));
  }
  return r;
}

RankReport numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  RankReport r;
  r.rows = static_cast<int>(m.rows());
  r.cols = static_cast<int>(m.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv(0) : 0.0;
  for (int i = 0; i < sv.size(); ++i) {
    r.singular_values.push_back(sv(i));
    if (smax > 0 && sv(i) > rel_tol * smax) ++r.rank;
  }
  return r;
}

}  // namespace ads
