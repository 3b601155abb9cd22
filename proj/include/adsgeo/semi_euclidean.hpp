#pragma once
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adsgeo/errors.hpp"

namespace ads {

constexpr int kMaxDim = 6;

// Point of R^{n+2}_2. Storage slot 0 is x_{-1}, slot 1 is x_0, slot k+1 is x_k.
struct AVec {
  std::array<double, kMaxDim> c{};
  int dim = 0;

  AVec() = default;
  explicit AVec(int d) : dim(d) {}
  AVec(std::initializer_list<double> xs);
  static AVec basis(int d, int label);  // label in -1..d-2

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }

  AVec& operator+=(const AVec& o);
  AVec& operator-=(const AVec& o);
  AVec& operator*=(double s);
  double max_abs() const;
  double sum_sq() const;
  bool finite() const;
};

AVec operator+(AVec a, const AVec& b);
AVec operator-(AVec a, const AVec& b);
AVec operator-(AVec a);
AVec operator*(double s, AVec a);
AVec operator*(AVec a, double s);
AVec operator/(AVec a, double s);

enum class CausalClass { Spacelike, Null, Timelike };
const char* to_string(CausalClass c);

struct ToleranceConfig {
  double algebraic_tol = 1e-9;
  double zero_detect_tol = 1e-7;
  double fd_step = 1e-5;
  double bisection_tol = 1e-12;

  void check() const;
  // ADS_TOL is either a bare number (zero_detect_tol) or "key=val,key=val"
  static ToleranceConfig from_string(const std::string& spec);
  static ToleranceConfig from_env();
};

int sign_of(double x);

double pseudo_inner(const AVec& x, const AVec& y);
CausalClass causal_class(const AVec& x, const ToleranceConfig& cfg = {});
double pseudo_norm(const AVec& x);
AVec wedge(const std::vector<AVec>& vs);
double ads_residual(const AVec& x);
double nullcone_residual(const AVec& x, const AVec& a);

// determinant of the square matrix whose rows are the given vectors
double det_rows(const std::vector<AVec>& rows);
Eigen::MatrixXd gram(const std::vector<AVec>& vs);

struct EigenResult {
  std::vector<double> values;
  std::vector<Eigen::VectorXd> vectors;
};
// h v = k g v, g symmetric positive definite
EigenResult generalized_eigen(const Eigen::MatrixXd& h, const Eigen::MatrixXd& g,
                              double tol = 1e-12);

struct RankReport {
  int rows = 0, cols = 0;
  std::vector<double> singular_values;
  int rank = 0;
};
RankReport numeric_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8);

}  // namespace ads
