#pragma once
#include <string>
#include <vector>

#include "adsgeo/height_family.hpp"
#include "adsgeo/lightlike_sheets.hpp"
#include "adsgeo/models.hpp"

namespace ads {

struct CriteriaReport {
  SingularityLabel label = SingularityLabel::Degenerate;
  double rho = 0, eta = 0, sigma = 0, sigma_prime = 0;
  int corank = 0;
  int ak_order = 0;  // from the height function at the focal point
  int ridge_order = -1;
  double mu_star = 0;
  double cubic_discriminant = 0;
  std::string case_tag;
  AVec focal;
  std::vector<std::string> advisory_notes;
  // label agrees with the height-function order
  bool consistent() const { return ak_index(label) == ak_order; }
};

CriteriaReport classify_evolute_point_ads3(const CurveSource& c, double s, int branch,
                                           const ToleranceConfig& cfg = {});
CriteriaReport classify_focal_point_ads4_curve(const CurveSource& c, double s, double theta,
                                               const ToleranceConfig& cfg = {});
// decision ladder on given invariants, for synthetic inputs
SingularityLabel ladder(double rho, double rho_scale, double sigma, double sigma_scale,
                        double sigma_prime, double sigma_prime_scale, const ToleranceConfig& cfg);

// Delta = b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd for a x^3 + b x^2 y + c x y^2 + d y^3
double cubic_discriminant(double a, double b, double c, double d);
SingularityLabel classify_binary_cubic(double a, double b, double c, double d,
                                       const ToleranceConfig& cfg = {});

CriteriaReport classify_surface_focal_point(const ParamSurface& s, double u1, double u2, int sign,
                                            int branch = 0, const ToleranceConfig& cfg = {});
int ridge_order(const ParamSurface& s, double u1, double u2, int sign, int branch = 0,
                const ToleranceConfig& cfg = {});

std::string report_json(const CriteriaReport& r);

}  // namespace ads
