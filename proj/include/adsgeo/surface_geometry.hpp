#pragma once
#include <optional>

#include <Eigen/Dense>

#include "adsgeo/parametric.hpp"

namespace ads {

struct SurfaceFrame {
  AVec X, X_u1, X_u2;
  AVec nT, nS;
  Eigen::Matrix2d g;
  double u1 = 0, u2 = 0;
};

struct PrincipalData {
  int sign = 1;
  Eigen::Matrix2d h;
  std::array<double, 2> kappas{};
  std::array<Eigen::Vector2d, 2> directions;
  double K_N = 0;
  bool umbilic = false;
};

// timelike normal from the surface's reference vector unless nT_override is given
SurfaceFrame normal_frame(const ParamSurface& s, double u1, double u2,
                          const ToleranceConfig& cfg = {},
                          const std::optional<AVec>& nT_override = std::nullopt);

// adopted orientation: det(X, nT, e1, e2, e3)
double adopted_determinant(const AVec& X, const AVec& nT);

std::pair<Eigen::Matrix2d, Eigen::Matrix2d> fundamental_forms(const ParamSurface& s, double u1,
                                                              double u2, int sign,
                                                              const ToleranceConfig& cfg = {});
Eigen::Matrix2d second_form(const ParamSurface& s, const SurfaceFrame& f, int sign);

PrincipalData principal_curvatures(const ParamSurface& s, double u1, double u2, int sign,
                                   const ToleranceConfig& cfg = {});
PrincipalData principal_from_forms(const Eigen::Matrix2d& h, const Eigen::Matrix2d& g, int sign,
                                   const ToleranceConfig& cfg = {});

// second-order first-derivative stencil that stays inside [lo, hi]
struct Stencil {
  std::array<double, 3> offset{};
  std::array<double, 3> weight{};
  int size = 0;
};
Stencil fd_stencil(double x, double lo, double hi, double h);
// stencil for the direction (du, dv) of unit step h at (u1, u2)
Stencil fd_stencil_2d(const ParamSurface& s, double u1, double u2, double du, double dv, double h);

double weingarten_residual(const ParamSurface& s, double u1, double u2, int sign,
                           const ToleranceConfig& cfg = {});

}  // namespace ads
