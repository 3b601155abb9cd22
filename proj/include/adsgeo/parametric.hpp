#pragma once
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "adsgeo/semi_euclidean.hpp"
#include "adsgeo/terms.hpp"

namespace ads {

constexpr int kMaxCurveOrder = 5;
constexpr int kMaxSurfaceOrder = 5;

using Interval = std::pair<double, double>;

// anything that hands out exact derivatives of a unit-speed curve
class CurveSource {
 public:
  virtual ~CurveSource() = default;
  virtual int dim() const = 0;
  virtual Interval domain() const = 0;
  virtual std::string name() const = 0;
  // derivatives of orders 0..max_order at s (no domain check)
  virtual std::vector<AVec> raw_derivatives(double s, int max_order) const = 0;

  std::vector<AVec> derivatives(double s, int max_order) const;  // checked
  AVec eval_derivative(double s, int order) const;
  void check_param(double s) const;
};

class ParamCurve : public CurveSource {
 public:
  ParamCurve(std::vector<TermSum> coords, Interval domain, std::string name = "curve");

  int dim() const override { return static_cast<int>(coords_.size()); }
  Interval domain() const override { return domain_; }
  std::string name() const override { return name_; }
  std::vector<AVec> raw_derivatives(double s, int max_order) const override;

  const std::vector<TermSum>& coords() const { return coords_; }

 private:
  std::vector<TermSum> coords_;
  std::vector<std::vector<TermSum>> table_;  // table_[order][coord]
  Interval domain_;
  std::string name_;
};

// Arc-length reparametrization of a regular spacelike curve. The jets in s are
// exact up to the accuracy of the arc-length inversion.
class ArcLengthCurve : public CurveSource {
 public:
  ArcLengthCurve(std::shared_ptr<const ParamCurve> base, int panels = 512,
                 std::string name = "arclength-curve");

  int dim() const override { return base_->dim(); }
  Interval domain() const override { return {0.0, length_}; }
  std::string name() const override { return name_; }
  std::vector<AVec> raw_derivatives(double s, int max_order) const override;

  double base_parameter(double s) const;
  const ParamCurve& base() const { return *base_; }

 private:
  double speed(double t) const;
  double arc(double t0, double t1) const;

  std::shared_ptr<const ParamCurve> base_;
  std::vector<double> knots_t_, knots_s_;
  double length_ = 0.0;
  std::string name_;
};

class ParamSurface {
 public:
  ParamSurface(std::vector<TermSum> coords, Interval du, Interval dv,
               std::string name = "surface");

  int dim() const { return static_cast<int>(coords_.size()); }
  Interval domain_u() const { return du_; }
  Interval domain_v() const { return dv_; }
  const std::string& name() const { return name_; }
  const std::vector<TermSum>& coords() const { return coords_; }

  // partial derivative d^i/du^i d^j/dv^j, i + j <= 5
  AVec partial(double u, double v, int i, int j) const;
  AVec eval(double u, double v) const { return partial(u, v, 0, 0); }
  void check_param(double u, double v) const;

  // vector projected onto the normal plane to build the timelike normal
  AVec reference() const { return reference_; }
  void set_reference(const AVec& r);

 private:
  std::vector<TermSum> coords_;
  std::vector<std::vector<TermSum>> table_;  // index i*(K+1)+j
  Interval du_, dv_;
  std::string name_;
  AVec reference_;
};

struct ValidationReport {
  bool ok = true;
  double max_ads_residual = 0.0;
  double max_unit_speed_residual = 0.0;  // for surfaces: worst metric failure (0 when PD)
  std::vector<std::vector<double>> failing_samples;
};

ValidationReport validate(const CurveSource& c, int n_samples, const ToleranceConfig& cfg = {});
ValidationReport validate(const ParamSurface& s, int n_samples, const ToleranceConfig& cfg = {});

struct Geometry {
  std::shared_ptr<const CurveSource> curve;
  std::shared_ptr<const ParamSurface> surface;
  std::string name;
  bool is_curve() const { return static_cast<bool>(curve); }
};

using Params = std::map<std::string, double>;
// curves in AdS^3, curves in AdS^4, surfaces in AdS^4
enum class ObjectKind { CurveAdS3, CurveAdS4, Surface };
ObjectKind object_kind(const Geometry& g);
int base_dim(const Geometry& g);
using BaseParams = std::array<double, 2>;  // (s, unused) for curves
AVec base_point(const Geometry& g, const BaseParams& u);
// X and its partials: curves give the s-derivatives 0..order, surfaces the
// mixed partials d^i/du d^j/dv with i + j <= order, ordered by (i+j, j)
std::vector<AVec> base_derivatives(const Geometry& g, const BaseParams& u, int order);

Geometry preset(const std::string& name, const Params& params = {});
std::vector<std::string> preset_names();

}  // namespace ads
