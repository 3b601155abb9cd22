#pragma once
#include <array>
#include <vector>

#include "adsgeo/semi_euclidean.hpp"

namespace ads {

constexpr int kJetCap = 9;  // coefficients of orders 0..8

// truncated Taylor series, a[k] = f^(k)/k!, valid through order ord
struct Jet {
  std::array<double, kJetCap> a{};
  int ord = 0;

  Jet() = default;
  Jet(double v, int order) : ord(order) { a[0] = v; }
  static Jet variable(double v, int order);  // s itself
  static Jet from_derivs(const std::vector<double>& d, int order);

  double value() const { return a[0]; }
  double d(int k) const;  // k-th derivative
  Jet deriv() const;
};

Jet operator+(const Jet& x, const Jet& y);
Jet operator-(const Jet& x, const Jet& y);
Jet operator-(const Jet& x);
Jet operator*(const Jet& x, const Jet& y);
Jet operator/(const Jet& x, const Jet& y);
Jet operator*(double s, const Jet& x);
Jet operator+(double s, const Jet& x);
Jet sqrt(const Jet& x);
Jet abs(const Jet& x);  // sign frozen at the base point
Jet truncate(const Jet& x, int order);
// f is expanded about g.value(); result is f(g(s))
Jet compose(const Jet& f, const Jet& g);
// inverse series of f, which must have f.value() == 0 and f'(0) != 0
Jet revert(const Jet& f);

struct VecJet {
  std::array<Jet, kMaxDim> x{};
  int dim = 0;

  VecJet() = default;
  VecJet(int d, int order);
  static VecJet from_derivs(const std::vector<AVec>& derivs, int order);

  int ord() const;
  AVec value() const;
  AVec d(int k) const;
  VecJet deriv() const;
};

VecJet operator+(const VecJet& u, const VecJet& v);
VecJet operator-(const VecJet& u, const VecJet& v);
VecJet operator*(const Jet& s, const VecJet& v);
VecJet operator*(double s, const VecJet& v);
VecJet operator/(const VecJet& v, const Jet& s);
Jet dot(const VecJet& u, const VecJet& v);
VecJet wedge(const std::vector<VecJet>& vs);
VecJet compose(const VecJet& f, const Jet& g);

}  // namespace ads
