#pragma once
#include <stdexcept>
#include <string>

namespace ads {

// every library failure derives from AdsError so the CLI can map it to exit code 1
struct AdsError : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "AdsError"; }
};

#define ADS_ERROR(Name)                                                   \
  struct Name : AdsError {                                                \
    using AdsError::AdsError;                                             \
    const char* kind() const noexcept override { return #Name; }          \
  };

ADS_ERROR(DimensionError)
ADS_ERROR(ZeroVectorError)
ADS_ERROR(ArityError)
ADS_ERROR(MetricDegenerateError)
ADS_ERROR(OrderError)
ADS_ERROR(DomainError)
ADS_ERROR(PresetConstraintError)
ADS_ERROR(FrameUndefinedError)
ADS_ERROR(CausalDegeneracyError)
ADS_ERROR(SigmaUndefinedError)
ADS_ERROR(ChartError)
ADS_ERROR(FrameContinuityError)
ADS_ERROR(NoFocalPointError)
ADS_ERROR(GridError)
ADS_ERROR(ModelSpaceError)
ADS_ERROR(LiftDegenerateError)
ADS_ERROR(CorankError)
ADS_ERROR(ProjectionError)
ADS_ERROR(InputError)

#undef ADS_ERROR

}  // namespace ads
