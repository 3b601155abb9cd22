#pragma once
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adsgeo/semi_euclidean.hpp"

namespace ads {

enum class SingularityLabel {
  A1_Regular,
  A2_CuspidalEdge,
  A3_Swallowtail,
  A4_Butterfly,
  D4_Plus,
  D4_Minus,
  Degenerate
};
const char* to_string(SingularityLabel l);
SingularityLabel label_from_string(const std::string& s);
// A_k index (1..4), -1 otherwise
int ak_index(SingularityLabel l);
SingularityLabel label_for_ak(int k);

// map germs R^3 -> R^4 of the lightlike hypersurface normal forms
std::vector<double> eval_normal_form(SingularityLabel l, const std::vector<double>& u);
Eigen::MatrixXd normal_form_jacobian(SingularityLabel l, const std::vector<double>& u);

enum class ModelSet { C23, SW, BF, C234, C2345, CBF, SigmaPU, SigmaPY };
const char* to_string(ModelSet m);
ModelSet model_set_from_string(const std::string& s);
int model_set_arity(ModelSet m);
// SigmaPY takes (branch 0|1|2, u)
std::vector<double> eval_model_singular_set(ModelSet m, const std::vector<double>& t);

// value and Jacobian of a polynomial-type map
using JacobianMap = std::function<void(const std::vector<double>& u, std::vector<double>& value,
                                       Eigen::MatrixXd& jac)>;
JacobianMap normal_form_map(SingularityLabel l);
// D4+ critical value set on the cone u3^2 = 36 u1 u2, in the coordinates
// u1 + u2 = nappe (u3/3) cosh phi, u1 - u2 = (u3/3) sinh phi; arguments (phi, u3)
JacobianMap purse_map(int nappe);

struct BruteGrid {
  std::vector<double> lo, hi;
  double pitch = 1e-3;
};
struct CriticalSample {
  std::vector<double> domain;
  std::vector<double> image;
};
// rank-drop locus of f on the grid: sign changes of det(P J) along grid edges,
// refined by bisection and kept when sigma_min / sigma_max < 1e-6
std::vector<CriticalSample> brute_force_critical_set(const JacobianMap& f, const BruteGrid& grid,
                                                     const ToleranceConfig& cfg = {},
                                                     unsigned seed = 7);
std::vector<CriticalSample> brute_force_critical_set(SingularityLabel l, const BruteGrid& grid,
                                                     const ToleranceConfig& cfg = {},
                                                     unsigned seed = 7);

// symmetric nearest-neighbour distance between point clouds of equal dimension (<= 6)
double hausdorff(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b);
double directed_hausdorff(const std::vector<std::vector<double>>& from,
                          const std::vector<std::vector<double>>& to);

}  // namespace ads
