#pragma once
#include <string>
#include <vector>

#include "adsgeo/curve_frames.hpp"
#include "adsgeo/surface_geometry.hpp"

namespace ads {

// fiber: theta for AdS^4 curves, sign +-1 for AdS^3 curves and surfaces
struct SheetPoint {
  BaseParams base{};
  double fiber = 0;
  double mu = 0;
  AVec position;
};

struct FocalPoint {
  BaseParams base{};
  double fiber = 0;
  double mu_star = 0;
  AVec position;
  int branch_index = 0;
};

struct Axis {
  double lo = 0, hi = 0;
  int n = 0;
  double at(int i) const { return n > 1 ? lo + (hi - lo) * i / (n - 1) : lo; }
};

struct GridSpec {
  Axis u;      // s for curves
  Axis v;      // surfaces only
  Axis theta;  // AdS^4 curves only
  Axis mu;
  std::vector<int> signs{1, -1};  // codimension-two objects
  bool unit_ng = false;           // rescale NG to unit Euclidean length
  bool with_rank = false;         // fill SheetGrid::rank
};

GridSpec default_grid(const Geometry& g, int n_base = 40, int n_theta = 16, int n_mu = 11);
// parses "s=0:6.28:200,theta=0:6.28:100,mu=-2:2:50" on top of the defaults
GridSpec parse_grid(const Geometry& g, const std::string& text);

struct SheetGrid {
  std::vector<SheetPoint> points;
  std::vector<int> shape;  // base axes, fiber, mu
  std::vector<int> rank;   // Jacobian rank per point when requested
  int regular_rank = 0;
};

AVec ng_curve_ads4(const FrameAdS4& f, double theta);
AVec ng_curve_ads3(const FrameAdS3& f, int sign);
AVec ng_surface(const SurfaceFrame& f, int sign);

AVec nullcone_gauss(const Geometry& g, const BaseParams& u, double fiber,
                    const ToleranceConfig& cfg = {});
// derivatives of NG along the base parameters, then along theta for AdS^4 curves
std::vector<AVec> ng_derivatives(const Geometry& g, const BaseParams& u, double fiber,
                                 const ToleranceConfig& cfg = {});
// tangent vectors of the sheet map at (u, fiber, mu): base directions, theta, mu
std::vector<AVec> sheet_tangents(const Geometry& g, const BaseParams& u, double fiber, double mu,
                                 const ToleranceConfig& cfg = {});

SheetPoint lh_eval(const Geometry& g, const BaseParams& u, double fiber, double mu,
                   const ToleranceConfig& cfg = {});
SheetGrid sheet_grid(const Geometry& g, const GridSpec& spec, const ToleranceConfig& cfg = {});

struct FocalRoot {
  double mu_star = 0;
  int branch_index = 0;
};
std::vector<FocalRoot> focal_mu(const Geometry& g, const BaseParams& u, double fiber,
                                const ToleranceConfig& cfg = {});
FocalPoint focal_eval(const Geometry& g, const BaseParams& u, double fiber, int branch_index,
                      const ToleranceConfig& cfg = {});

struct DiscriminantSet {
  std::vector<AVec> points;
  bool degenerate = false;  // whole family singular
  std::string note;
};
DiscriminantSet discriminant_samples(const Geometry& g, int order, const GridSpec& spec,
                                     const ToleranceConfig& cfg = {});

// ridge indicator: NG-component of the focal map's derivative along the principal direction
double ridge_indicator(const ParamSurface& s, double u1, double u2, int sign, int branch,
                       const Eigen::Vector2d& align, Eigen::Vector2d* dir = nullptr,
                       const ToleranceConfig& cfg = {});

// ridge crossing on the segment p0 -> p1, directions aligned to the one at p0
bool ridge_crossing(const ParamSurface& s, const BaseParams& p0, const BaseParams& p1, int sign,
                    int branch, BaseParams& root, const ToleranceConfig& cfg = {});

struct FiberShape {
  double fiber = 0;       // eigenvalue on d/dtheta
  double tangential = 0;  // eigenvalue on d/ds
};
FiberShape fiber_shape_eigenvalue(const CurveSource& c, double s, double theta,
                                  const ToleranceConfig& cfg = {});

// symmetric nearest-neighbour distance between the two sampled images
double compare_sheets(const SheetGrid& a, const SheetGrid& b);
// max over `from` of the distance to the nearest point of `to`
double directed_distance(const std::vector<AVec>& from, const std::vector<AVec>& to);
double compare_point_sets(const std::vector<AVec>& a, const std::vector<AVec>& b);

}  // namespace ads
