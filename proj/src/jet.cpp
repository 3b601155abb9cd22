#include "adsgeo/jet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ads {

namespace {
double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}
void check_order(int ord) {
  if (ord < 0 || ord >= kJetCap) throw OrderError("jet order out of range");
}
}  // namespace

Jet Jet::variable(double v, int order) {
  Jet j(v, order);
  if (order >= 1) j.a[1] = 1.0;
  return j;
}

Jet Jet::from_derivs(const std::vector<double>& dv, int order) {
  check_order(order);
  if (static_cast<int>(dv.size()) <= order) throw OrderError("not enough derivatives for jet");
  Jet j;
  j.ord = order;
  for (int k = 0; k <= order; ++k) j.a[k] = dv[k] / factorial(k);
  return j;
}

double Jet::d(int k) const {
  if (k > ord || k < 0) throw OrderError("jet derivative beyond truncation order");
  return a[k] * factorial(k);
}

Jet Jet::deriv() const {
  if (ord < 1) throw OrderError("jet exhausted");
  Jet r;
  r.ord = ord - 1;
  for (int k = 0; k <= r.ord; ++k) r.a[k] = (k + 1) * a[k + 1];
  return r;
}

Jet operator+(const Jet& x, const Jet& y) {
  Jet r;
  r.ord = std::min(x.ord, y.ord);
  for (int k = 0; k <= r.ord; ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}
Jet operator-(const Jet& x, const Jet& y) {
  Jet r;
  r.ord = std::min(x.ord, y.ord);
  for (int k = 0; k <= r.ord; ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}
Jet operator-(const Jet& x) { return -1.0 * x; }
Jet operator*(double s, const Jet& x) {
  Jet r = x;
  for (int k = 0; k <= r.ord; ++k) r.a[k] *= s;
  return r;
}
Jet operator+(double s, const Jet& x) {
  Jet r = x;
  r.a[0] += s;
  return r;
}
Jet operator*(const Jet& x, const Jet& y) {
  Jet r;
  r.ord = std::min(x.ord, y.ord);
  for (int k = 0; k <= r.ord; ++k) {
    double s = 0;
    for (int i = 0; i <= k; ++i) s += x.a[i] * y.a[k - i];
    r.a[k] = s;
  }
  return r;
}
Jet operator/(const Jet& x, const Jet& y) {
  if (y.a[0] == 0.0) throw DomainError("jet division by zero");
  Jet r;
  r.ord = std::min(x.ord, y.ord);
  for (int k = 0; k <= r.ord; ++k) {
    double s = x.a[k];
    for (int i = 1; i <= k; ++i) s -= y.a[i] * r.a[k - i];
    r.a[k] = s / y.a[0];
  }
  return r;
}
Jet sqrt(const Jet& x) {
  if (!(x.a[0] > 0.0)) throw DomainError("jet sqrt at non-positive value");
  Jet r;
  r.ord = x.ord;
  r.a[0] = std::sqrt(x.a[0]);
  for (int k = 1; k <= r.ord; ++k) {
    double s = x.a[k];
    for (int i = 1; i < k; ++i) s -= r.a[i] * r.a[k - i];
    r.a[k] = s / (2.0 * r.a[0]);
  }
  return r;
}
Jet abs(const Jet& x) { return x.a[0] < 0 ? -x : x; }

Jet truncate(const Jet& x, int order) {
  Jet r = x;
  r.ord = std::min(x.ord, order);
  for (int k = r.ord + 1; k < kJetCap; ++k) r.a[k] = 0;
  return r;
}

Jet compose(const Jet& f, const Jet& g) {
  Jet delta = g;
  delta.a[0] = 0.0;
  const int ord = std::min(f.ord, g.ord);
  Jet r(f.a[ord], ord);
  // Horner in delta
  for (int k = ord - 1; k >= 0; --k) r = f.a[k] + r * delta;
  return r;
}

Jet revert(const Jet& f) {
  if (std::abs(f.a[0]) > 0.0) throw DomainError("series reversion needs f(0) = 0");
  if (f.ord < 1 || f.a[1] == 0.0) throw DomainError("series reversion needs f'(0) != 0");
  Jet g(0.0, f.ord);
  g.a[1] = 1.0 / f.a[1];
  for (int k = 2; k <= f.ord; ++k) {
    Jet fg = compose(f, g);
    g.a[k] = -fg.a[k] / f.a[1];
  }
  return g;
}

VecJet::VecJet(int d, int order) : dim(d) {
  for (int i = 0; i < d; ++i) x[i] = Jet(0.0, order);
}

VecJet VecJet::from_derivs(const std::vector<AVec>& derivs, int order) {
  check_order(order);
  if (static_cast<int>(derivs.size()) <= order) throw OrderError("not enough derivatives for jet");
  VecJet v(derivs[0].dim, order);
  for (int k = 0; k <= order; ++k) {
    double f = factorial(k);
    for (int i = 0; i < v.dim; ++i) v.x[i].a[k] = derivs[k][i] / f;
  }
  return v;
}

int VecJet::ord() const {
  int o = kJetCap;
  for (int i = 0; i < dim; ++i) o = std::min(o, x[i].ord);
  return o;
}
AVec VecJet::value() const { return d(0); }
AVec VecJet::d(int k) const {
  AVec r(dim);
  for (int i = 0; i < dim; ++i) r[i] = x[i].d(k);
  return r;
}
VecJet VecJet::deriv() const {
  VecJet r;
  r.dim = dim;
  for (int i = 0; i < dim; ++i) r.x[i] = x[i].deriv();
  return r;
}

VecJet operator+(const VecJet& u, const VecJet& v) {
  if (u.dim != v.dim) throw DimensionError("vector jet dims differ");
  VecJet r;
  r.dim = u.dim;
  for (int i = 0; i < u.dim; ++i) r.x[i] = u.x[i] + v.x[i];
  return r;
}
VecJet operator-(const VecJet& u, const VecJet& v) {
  if (u.dim != v.dim) throw DimensionError("vector jet dims differ");
  VecJet r;
  r.dim = u.dim;
  for (int i = 0; i < u.dim; ++i) r.x[i] = u.x[i] - v.x[i];
  return r;
}
VecJet operator*(const Jet& s, const VecJet& v) {
  VecJet r;
  r.dim = v.dim;
  for (int i = 0; i < v.dim; ++i) r.x[i] = s * v.x[i];
  return r;
}
VecJet operator*(double s, const VecJet& v) {
  VecJet r;
  r.dim = v.dim;
  for (int i = 0; i < v.dim; ++i) r.x[i] = s * v.x[i];
  return r;
}
VecJet operator/(const VecJet& v, const Jet& s) {
  Jet inv = Jet(1.0, s.ord) / s;
  return inv * v;
}

Jet dot(const VecJet& u, const VecJet& v) {
  if (u.dim != v.dim) throw DimensionError("vector jet dims differ");
  Jet s = -(u.x[0] * v.x[0]) - u.x[1] * v.x[1];
  for (int i = 2; i < u.dim; ++i) s = s + u.x[i] * v.x[i];
  return s;
}

namespace {
// Leibniz expansion; fine for the 3x3 and 4x4 minors we meet
Jet det_jets(const std::vector<std::vector<const Jet*>>& m, int ord) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Jet total(0.0, ord);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    Jet term(1.0, ord);
    for (int i = 0; i < n; ++i) term = term * *m[i][p[i]];
    total = (inv % 2) ? total - term : total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}
}  // namespace

VecJet wedge(const std::vector<VecJet>& vs) {
  if (vs.empty()) throw ArityError("wedge of nothing");
  const int d = vs[0].dim;
  if (static_cast<int>(vs.size()) != d - 1) throw ArityError("jet wedge takes dim-1 vectors");
  int ord = kJetCap;
  for (const auto& v : vs) ord = std::min(ord, v.ord());
  VecJet w(d, ord);
  for (int j = 0; j < d; ++j) {
    std::vector<std::vector<const Jet*>> minor(d - 1);
    for (int r = 0; r < d - 1; ++r)
      for (int k = 0; k < d; ++k)
        if (k != j) minor[r].push_back(&vs[r].x[k]);
    Jet m = det_jets(minor, ord);
    double eps = (j < 2 ? -1.0 : 1.0) * ((j % 2) ? -1.0 : 1.0);
    w.x[j] = eps * m;
  }
  return w;
}

VecJet compose(const VecJet& f, const Jet& g) {
  VecJet r;
  r.dim = f.dim;
  for (int i = 0; i < f.dim; ++i) r.x[i] = compose(f.x[i], g);
  return r;
}

}  // namespace ads
