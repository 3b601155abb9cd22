#include <cmath>
#include <random>

#include "adsgeo/jet.hpp"
#include "adsgeo/semi_euclidean.hpp"
#include "adsgeo/terms.hpp"
#include "doctest.h"

using namespace ads;

namespace {
AVec e(int d, int l) { return AVec::basis(d, l); }
}  // namespace

TEST_CASE("pseudo inner product signature") {
  CHECK(pseudo_inner(e(4, -1), e(4, -1)) == -1);
  CHECK(pseudo_inner(e(4, 0), e(4, 0)) == -1);
  CHECK(pseudo_inner(e(4, 1), e(4, 1)) == 1);
  AVec ones{1, 1, 1, 1};
  CHECK(pseudo_inner(ones, ones) == 0);
  CHECK_THROWS_AS(pseudo_inner(ones, e(5, 1)), DimensionError);
}

TEST_CASE("causal classes and pseudo norm") {
  CHECK(causal_class(AVec{1, 0, 0, 0}) == CausalClass::Timelike);
  CHECK(causal_class(AVec{0, 0, 1, 0}) == CausalClass::Spacelike);
  CHECK(causal_class(AVec{1, 0, 1, 0}) == CausalClass::Null);
  CHECK_THROWS_AS(causal_class(AVec{0, 0, 0, 0}), ZeroVectorError);
  CHECK(pseudo_norm(AVec{1, 0, 0, 0}) == doctest::Approx(1));
  CHECK(pseudo_norm(AVec{1, 0, 1, 0}) == doctest::Approx(0));
  CHECK(pseudo_norm(AVec{0, 0, 3, 4}) == doctest::Approx(5));
}

TEST_CASE("wedge on basis vectors") {
  AVec w = wedge({e(4, 0), e(4, 1), e(4, 2)});
  CHECK(w[0] == doctest::Approx(-1));
  CHECK(std::abs(w[1]) + std::abs(w[2]) + std::abs(w[3]) == doctest::Approx(0));
  AVec w2 = wedge({e(4, -1), e(4, 1), e(4, 2)});
  CHECK(w2[1] == doctest::Approx(1));
  CHECK(std::abs(w2[0]) + std::abs(w2[2]) + std::abs(w2[3]) == doctest::Approx(0));
  CHECK(pseudo_inner(e(4, 0), w2) == doctest::Approx(det_rows({e(4, 0), e(4, -1), e(4, 1), e(4, 2)})));
  CHECK_THROWS_AS(wedge({e(4, 0), e(4, 1)}), ArityError);
}

TEST_CASE("wedge is pseudo-orthogonal and reproduces the determinant") {
  std::mt19937 rng(11);
  std::normal_distribution<double> N;
  for (int dim : {4, 5})
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<AVec> vs(dim - 1, AVec(dim));
      AVec x(dim);
      for (auto& v : vs)
        for (int k = 0; k < dim; ++k) v[k] = N(rng);
      for (int k = 0; k < dim; ++k) x[k] = N(rng);
      AVec w = wedge(vs);
      for (const auto& v : vs) CHECK(std::abs(pseudo_inner(v, w)) < 1e-10);
      std::vector<AVec> rows{x};
      rows.insert(rows.end(), vs.begin(), vs.end());
      CHECK(pseudo_inner(x, w) == doctest::Approx(det_rows(rows)).epsilon(1e-10));
    }
}

TEST_CASE("model-space residuals") {
  CHECK(ads_residual(AVec{1, 0, 0, 0}) == 0);
  CHECK(ads_residual(AVec{0, 0, 1, 0}) == 2);
  CHECK(std::abs(ads_residual(AVec{std::sqrt(2.0), 0, 1, 0, 0})) < 1e-15);
  AVec a{1, 0, 0, 0};
  CHECK(nullcone_residual(a, a) == 0);
  CHECK(nullcone_residual(a + AVec{1, 0, 1, 0}, a) == 0);
  CHECK(nullcone_residual(a + AVec{0, 0, 1, 0}, a) == 1);
  CHECK_THROWS_AS(nullcone_residual(a, e(5, 0)), DimensionError);
}

TEST_CASE("generalized eigenproblem") {
  auto r = generalized_eigen(Eigen::Matrix2d::Identity(), Eigen::Matrix2d::Identity());
  CHECK(r.values[0] == doctest::Approx(1));
  CHECK(r.values[1] == doctest::Approx(1));
  Eigen::Matrix2d h = Eigen::Vector2d(2, 6).asDiagonal(), g = Eigen::Vector2d(1, 2).asDiagonal();
  auto r2 = generalized_eigen(h, g);
  CHECK(r2.values[0] == doctest::Approx(2));
  CHECK(r2.values[1] == doctest::Approx(3));
  Eigen::Matrix2d bad;
  bad << 1, 0, 0, -1;
  CHECK_THROWS_AS(generalized_eigen(h, bad), MetricDegenerateError);

  // oracle: roots of det(h - k g) = 0 as a quadratic in k
  std::mt19937 rng(3);
  std::normal_distribution<double> N;
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::Matrix2d A, L;
    A << N(rng), N(rng), N(rng), N(rng);
    L << 1 + std::abs(N(rng)), 0, N(rng), 1 + std::abs(N(rng));
    Eigen::Matrix2d hs = A + A.transpose(), gs = L.transpose() * L;
    double a = gs.determinant();
    double b = -(hs(0, 0) * gs(1, 1) + hs(1, 1) * gs(0, 0) - 2 * hs(0, 1) * gs(0, 1));
    double c = hs.determinant();
    double disc = std::sqrt(b * b - 4 * a * c);
    double k1 = (-b - disc) / (2 * a), k2 = (-b + disc) / (2 * a);
    auto res = generalized_eigen(hs, gs);
    CHECK(res.values[0] == doctest::Approx(k1).epsilon(1e-9));
    CHECK(res.values[1] == doctest::Approx(k2).epsilon(1e-9));
  }
}

TEST_CASE("numeric rank") {
  Eigen::MatrixXd m(3, 2);
  m << 1, 2, 2, 4, 3, 6;
  CHECK(numeric_rank(m).rank == 1);
  m(2, 1) = 7;
  CHECK(numeric_rank(m).rank == 2);
}

TEST_CASE("tolerance strings") {
  auto c = ToleranceConfig::from_string("1e-6");
  CHECK(c.zero_detect_tol == 1e-6);
  auto d = ToleranceConfig::from_string("zero=1e-5,fd=1e-4");
  CHECK(d.zero_detect_tol == 1e-5);
  CHECK(d.fd_step == 1e-4);
  CHECK_THROWS(ToleranceConfig::from_string("fd=0"));
  CHECK_THROWS_AS(ToleranceConfig::from_string("nope=1"), InputError);
}

TEST_CASE("jets agree with closed forms") {
  // exp-free checks: sqrt(1+s) and 1/(1-s) about s = 0.3
  const double s0 = 0.3;
  Jet s = Jet::variable(s0, 5);
  Jet r = sqrt(1.0 + s);
  CHECK(r.value() == doctest::Approx(std::sqrt(1 + s0)));
  CHECK(r.d(1) == doctest::Approx(0.5 / std::sqrt(1 + s0)));
  CHECK(r.d(2) == doctest::Approx(-0.25 * std::pow(1 + s0, -1.5)));
  CHECK(r.d(3) == doctest::Approx(0.375 * std::pow(1 + s0, -2.5)));
  Jet q = Jet(1.0, 5) / (1.0 + -1.0 * s);
  for (int k = 0; k <= 5; ++k) CHECK(q.d(k) == doctest::Approx(std::tgamma(k + 1) / std::pow(1 - s0, k + 1)));
  // revert(f) o f = identity for f(t) = t + t^2
  Jet t = Jet::variable(0.0, 5);
  Jet f = t + t * t;
  Jet inv = revert(f);
  Jet id = compose(inv, f);
  CHECK(id.d(1) == doctest::Approx(1));
  for (int k = 2; k <= 5; ++k) CHECK(std::abs(id.d(k)) < 1e-12);
}

TEST_CASE("trig-polynomial terms") {
  TermSum c = cos1(2.0, 3.0);
  TermSum dc = diff_u(c);
  CHECK(eval(dc, 0.4) == doctest::Approx(-6.0 * std::sin(1.2)));
  TermSum prod = cos1(1.0, 1.0) * sin1(1.0, 2.0);
  for (double u : {0.0, 0.7, 2.1}) CHECK(eval(prod, u) == doctest::Approx(std::cos(u) * std::sin(2 * u)));
  TermSum p = poly1(3.0, 2) + cos1(1.0, 1.0, 1);  // 3u^2 + u cos u
  double h = 1e-5, u0 = 0.8;
  double fd = (eval(p, u0 + h) - eval(p, u0 - h)) / (2 * h);
  CHECK(eval(diff_u(p), u0) == doctest::Approx(fd).epsilon(1e-8));
  TermSum ip = integrate_u(sin1(1.0, 2.0));
  CHECK(eval(diff_u(ip), 0.9) == doctest::Approx(std::sin(1.8)));
  CHECK(simplify(c - c).empty());
}
