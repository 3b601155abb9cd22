#pragma once
#include <string>
#include <vector>

namespace ads {

enum class TrigKind { None, Cos, Sin };

// coeff * u^pu * v^pv * trig(wu*u + wv*v); curves only use the u slot
struct Term {
  TrigKind kind = TrigKind::None;
  double coeff = 0.0;
  int pu = 0, pv = 0;
  double wu = 0.0, wv = 0.0;
};

using TermSum = std::vector<Term>;

TermSum poly1(double coeff, int power);
TermSum cos1(double coeff, double freq, int power = 0);
TermSum sin1(double coeff, double freq, int power = 0);
TermSum poly2(double coeff, int pu, int pv);
TermSum cos2(double coeff, double wu, double wv);
TermSum sin2(double coeff, double wu, double wv);

// merges like terms, drops zeros, canonicalizes frequency signs
TermSum simplify(const TermSum& t);
TermSum operator+(const TermSum& a, const TermSum& b);
TermSum operator-(const TermSum& a, const TermSum& b);
TermSum operator*(double s, const TermSum& a);
TermSum operator*(const TermSum& a, const TermSum& b);  // product-to-sum

TermSum diff_u(const TermSum& t);
TermSum diff_v(const TermSum& t);
// antiderivative in u, zero constant term (surface terms must have pv == 0, wv == 0)
TermSum integrate_u(const TermSum& t);

double eval(const TermSum& t, double u, double v = 0.0);
std::string describe(const Term& t);

}  // namespace ads
