#pragma once
#include <array>

#include "adsgeo/jet.hpp"
#include "adsgeo/parametric.hpp"

namespace ads {

struct FrameAdS3 {
  AVec gamma, t, n, b;
  double kappa_g = 0, tau_g = 0;
  int delta = 1;
};

enum class CurveCase { Case1 = 1, Case2 = 2, Case3 = 3 };
const char* to_string(CurveCase c);

struct FrameAdS4 {
  AVec gamma, t, n1, n2, n3;
  double kappa1 = 0, kappa2 = 0, kappa3 = 0;
  int delta1 = 1, delta2 = 1, delta3 = 1;
  CurveCase case_tag = CurveCase::Case2;

  // case relabeling: the timelike normal and the two spacelike ones
  const AVec& nT() const;
  const AVec& b1() const;
  const AVec& b2() const;
};

// frame plus exact curvature derivatives
struct CurveJetsAdS3 {
  FrameAdS3 frame;
  Jet kappa;       // order 3
  Jet tau;         // order 2
  Jet sigma_plus;  // kappa' - kappa tau, order 2
  Jet sigma_minus; // kappa' + kappa tau
};

struct CurveJetsAdS4 {
  FrameAdS4 frame;
  Jet k1;  // order 3
  Jet k2;  // order 2
  Jet k3;  // order 1
};

struct SigmaPM {
  double sigma_plus = 0, sigma_minus = 0;
  double dsigma_plus = 0, dsigma_minus = 0;
};

struct CurveInvariants {
  double rho = 0, eta = 0, sigma = 0;
  double sigma_prime = 0;
  CurveCase case_tag = CurveCase::Case2;
  double theta = 0;
  int branch = 1;  // sign fixing the sigma branch selected by theta
  bool sigma_defined = true;
  std::array<double, 2> sigma_branches{};  // branch +1, branch -1
  double rho_scale = 1, eta_scale = 1, sigma_scale = 1;
};

enum class Space { AdS3, AdS4 };

FrameAdS3 frame_ads3(const CurveSource& c, double s, const ToleranceConfig& cfg = {});
CurveJetsAdS3 curve_jets_ads3(const CurveSource& c, double s, const ToleranceConfig& cfg = {});
SigmaPM sigma_pm_ads3(const CurveSource& c, double s, const ToleranceConfig& cfg = {});

FrameAdS4 frame_ads4(const CurveSource& c, double s, const ToleranceConfig& cfg = {});
CurveJetsAdS4 curve_jets_ads4(const CurveSource& c, double s, const ToleranceConfig& cfg = {});

// rho, eta and the sigma branch selected by theta; never throws on an undefined sigma
CurveInvariants invariants_from_jets(const CurveJetsAdS4& j, double theta);
// same, throwing SigmaUndefinedError when the sigma square root has no real value
CurveInvariants curve_invariants_ads4(const CurveSource& c, double s, double theta,
                                      const ToleranceConfig& cfg = {});
// sigma(s) on a fixed branch as a jet (value and first derivative); nullopt-like via defined flag
struct SigmaJet {
  Jet sigma;
  bool defined = false;
  double scale = 1;
};
SigmaJet sigma_jet_ads4(const CurveJetsAdS4& j, int branch);
// closed-form theta roots of rho(s, .) = 0
std::vector<double> rho_roots(const CurveJetsAdS4& j);
// theta root on a given branch (the one whose sigma is sigma_jet_ads4(j, branch)), if any
bool rho_root_on_branch(const CurveJetsAdS4& j, int branch, double& theta);

double frenet_residual(const CurveSource& c, double s, Space space,
                       const ToleranceConfig& cfg = {});
double gram_residual(const FrameAdS3& f);
double gram_residual(const FrameAdS4& f);

}  // namespace ads
