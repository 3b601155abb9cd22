#include "adsgeo/terms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "adsgeo/errors.hpp"

namespace ads {

TermSum poly1(double c, int p) { return {{TrigKind::None, c, p, 0, 0.0, 0.0}}; }
TermSum cos1(double c, double w, int p) { return simplify({{TrigKind::Cos, c, p, 0, w, 0.0}}); }
TermSum sin1(double c, double w, int p) { return simplify({{TrigKind::Sin, c, p, 0, w, 0.0}}); }
TermSum poly2(double c, int pu, int pv) { return {{TrigKind::None, c, pu, pv, 0.0, 0.0}}; }
TermSum cos2(double c, double wu, double wv) {
  return simplify({{TrigKind::Cos, c, 0, 0, wu, wv}});
}
TermSum sin2(double c, double wu, double wv) {
  return simplify({{TrigKind::Sin, c, 0, 0, wu, wv}});
}

namespace {

Term canonical(Term t) {
  if (t.kind == TrigKind::None) {
    t.wu = t.wv = 0.0;
    return t;
  }
  if (t.wu == 0.0 && t.wv == 0.0) {
    if (t.kind == TrigKind::Sin) t.coeff = 0.0;
    t.kind = TrigKind::None;
    return t;
  }
  // first nonzero frequency positive
  bool flip = t.wu < 0.0 || (t.wu == 0.0 && t.wv < 0.0);
  if (flip) {
    t.wu = -t.wu;
    t.wv = -t.wv;
    if (t.kind == TrigKind::Sin) t.coeff = -t.coeff;
  }
  return t;
}

using Key = std::tuple<int, int, int, double, double>;

}  // namespace

TermSum simplify(const TermSum& ts) {
  std::map<Key, double> acc;
  for (const auto& raw : ts) {
    Term t = canonical(raw);
    if (t.coeff == 0.0) continue;
    acc[{static_cast<int>(t.kind), t.pu, t.pv, t.wu, t.wv}] += t.coeff;
  }
  TermSum out;
  for (const auto& [k, c] : acc) {
    if (c == 0.0) continue;
    out.push_back({static_cast<TrigKind>(std::get<0>(k)), c, std::get<1>(k), std::get<2>(k),
                   std::get<3>(k), std::get<4>(k)});
  }
  return out;
}

TermSum operator+(const TermSum& a, const TermSum& b) {
  TermSum r = a;
  r.insert(r.end(), b.begin(), b.end());
  return simplify(r);
}
TermSum operator*(double s, const TermSum& a) {
  TermSum r = a;
  for (auto& t : r) t.coeff *= s;
  return simplify(r);
}
TermSum operator-(const TermSum& a, const TermSum& b) { return a + (-1.0) * b; }

TermSum operator*(const TermSum& a, const TermSum& b) {
  TermSum r;
  for (const auto& x : a)
    for (const auto& y : b) {
      const double c = x.coeff * y.coeff;
      const int pu = x.pu + y.pu, pv = x.pv + y.pv;
      const double su = x.wu + y.wu, sv = x.wv + y.wv;
      const double du = x.wu - y.wu, dv = x.wv - y.wv;
      using K = TrigKind;
      if (x.kind == K::None) {
        r.push_back({y.kind, c, pu, pv, y.wu, y.wv});
      } else if (y.kind == K::None) {
        r.push_back({x.kind, c, pu, pv, x.wu, x.wv});
      } else if (x.kind == K::Cos && y.kind == K::Cos) {
        r.push_back({K::Cos, c / 2, pu, pv, du, dv});
        r.push_back({K::Cos, c / 2, pu, pv, su, sv});
      } else if (x.kind == K::Sin && y.kind == K::Sin) {
        r.push_back({K::Cos, c / 2, pu, pv, du, dv});
        r.push_back({K::Cos, -c / 2, pu, pv, su, sv});
      } else if (x.kind == K::Sin) {  // sin x cos y
        r.push_back({K::Sin, c / 2, pu, pv, su, sv});
        r.push_back({K::Sin, c / 2, pu, pv, du, dv});
      } else {  // cos x sin y
        r.push_back({K::Sin, c / 2, pu, pv, su, sv});
        r.push_back({K::Sin, -c / 2, pu, pv, du, dv});
      }
    }
  return simplify(r);
}

static TermSum diff_slot(const TermSum& ts, bool in_u) {
  TermSum r;
  for (const auto& t : ts) {
    int p = in_u ? t.pu : t.pv;
    double w = in_u ? t.wu : t.wv;
    if (p > 0) {
      Term d = t;
      d.coeff *= p;
      (in_u ? d.pu : d.pv) -= 1;
      r.push_back(d);
    }
    if (t.kind != TrigKind::None && w != 0.0) {
      Term d = t;
      if (t.kind == TrigKind::Cos) {
        d.kind = TrigKind::Sin;
        d.coeff = -t.coeff * w;
      } else {
        d.kind = TrigKind::Cos;
        d.coeff = t.coeff * w;
      }
      r.push_back(d);
    }
  }
  return simplify(r);
}

TermSum diff_u(const TermSum& t) { return diff_slot(t, true); }
TermSum diff_v(const TermSum& t) { return diff_slot(t, false); }

static TermSum integrate_term(const Term& t) {
  if (t.pv != 0 || t.wv != 0.0) throw InputError("integrate_u only handles one-variable terms");
  if (t.kind == TrigKind::None) return poly1(t.coeff / (t.pu + 1), t.pu + 1);
  const double w = t.wu;
  const int p = t.pu;
  // integration by parts, recursing on the power
  if (t.kind == TrigKind::Cos) {
    TermSum r = sin1(t.coeff / w, w, p);
    if (p > 0) r = r - integrate_u(sin1(t.coeff * p / w, w, p - 1));
    return r;
  }
  TermSum r = cos1(-t.coeff / w, w, p);
  if (p > 0) r = r + integrate_u(cos1(t.coeff * p / w, w, p - 1));
  return r;
}

TermSum integrate_u(const TermSum& ts) {
  TermSum r;
  for (const auto& t : ts) r = r + integrate_term(t);
  return r;
}

static double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

double eval(const TermSum& ts, double u, double v) {
  double s = 0.0;
  for (const auto& t : ts) {
    double f = t.coeff * ipow(u, t.pu) * ipow(v, t.pv);
    if (t.kind == TrigKind::Cos) f *= std::cos(t.wu * u + t.wv * v);
    else if (t.kind == TrigKind::Sin) f *= std::sin(t.wu * u + t.wv * v);
    s += f;
  }
  return s;
}

std::string describe(const Term& t) {
  std::ostringstream os;
  os << t.coeff;
  if (t.pu) os << "*u^" << t.pu;
  if (t.pv) os << "*v^" << t.pv;
  if (t.kind != TrigKind::None)
    os << (t.kind == TrigKind::Cos ? "*cos(" : "*sin(") << t.wu << "u+" << t.wv << "v)";
  return os.str();
}

}  // namespace ads
