#pragma once
#include <string>
#include <vector>

#include "adsgeo/classifier.hpp"

namespace ads {

struct ScanPoint {
  BaseParams base{};
  double fiber = 0;
  int branch = 0;
  std::string origin;  // generic, rho-root, sigma-root, ridge
  CriteriaReport report;
};

struct ScanResult {
  std::vector<ScanPoint> points;
  std::vector<std::string> notes;
  bool degenerate_family = false;
};

// sign changes of f on the samples xs, refined by bisection
std::vector<double> bracket_roots(const std::function<double(double)>& f, const std::vector<double>& xs,
                                  const ToleranceConfig& cfg = {});

// generic fiber angles are drawn from a seeded generator
ScanResult scan_ads4_curve(const CurveSource& c, int n_s, int n_generic, unsigned seed = 1,
                           const ToleranceConfig& cfg = {});
ScanResult scan_ads3_curve(const CurveSource& c, int n_s, const ToleranceConfig& cfg = {});
ScanResult scan_surface(const ParamSurface& s, int n, const ToleranceConfig& cfg = {});

}  // namespace ads
