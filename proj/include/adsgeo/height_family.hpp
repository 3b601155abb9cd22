#pragma once
#include <vector>

#include <Eigen/Dense>

#include "adsgeo/parametric.hpp"

namespace ads {

struct HeightJet {
  double value = 0;
  std::vector<double> derivatives;  // h', h'', ... for curves
  double s = 0;
  AVec lambda;
};

struct AkReport {
  int k = 0;  // 0 not critical, 1..4 detected, -1 beyond A4
  std::vector<double> normalized_derivatives;  // orders 0..5
};

struct SurfaceHeight {
  Eigen::Vector2d gradient;
  Eigen::Matrix2d hessian;
  int corank = 0;
};

// H(u, lambda) = <X(u), lambda> + 1; lambda must lie on AdS
double height(const Geometry& g, const BaseParams& u, const AVec& lambda,
              const ToleranceConfig& cfg = {});
void require_on_ads(const AVec& lambda, const ToleranceConfig& cfg);

HeightJet height_jet_curve(const CurveSource& c, double s, const AVec& lambda, int max_order,
                           const ToleranceConfig& cfg = {});
// decision from a list h, h', ..., h^(5)
AkReport detect_Ak(const std::vector<double>& h, const ToleranceConfig& cfg = {});
AkReport detect_Ak_curve(const CurveSource& c, double s, const AVec& lambda,
                         const ToleranceConfig& cfg = {});

SurfaceHeight hessian_surface(const ParamSurface& s, double u1, double u2, const AVec& lambda,
                              const ToleranceConfig& cfg = {});

// Jacobian of (H, dH/du_1, ..., dH/du_s) in the chart lambda_{-1} > 0. With
// allow_isometry, points outside the chart are moved by (x_{-1}, x_0) -> -(x_{-1}, x_0).
RankReport morse_family_rank(const Geometry& g, const BaseParams& u, const AVec& lambda,
                             bool allow_isometry = false, const ToleranceConfig& cfg = {});

Eigen::MatrixXd versality_matrix(const CurveSource& c, double s);
RankReport versality_rank_ads4(const CurveSource& c, double s);

struct LegendrianLift {
  AVec lambda;
  std::vector<double> raw;          // [X_{-1}l_0 - X_0 l_{-1} : X_i l_{-1} - X_{-1} l_i]
  std::vector<double> homogeneous;  // unit Euclidean norm, first nonzero entry positive
};
LegendrianLift legendrian_lift(const Geometry& g, const BaseParams& u, const AVec& lambda);
std::vector<double> normalize_homogeneous(const std::vector<double>& raw);

}  // namespace ads
