#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace bte {

using Complex = std::complex<double>;

// One exception type per failure mode so callers can react selectively
// (the zero finder jitters on BoundaryTooClose, the scan aggregates the rest).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BTE_DEFINE_ERROR(Name) \
  class Name : public Error {  \
   public:                     \
    using Error::Error;        \
  }

BTE_DEFINE_ERROR(OverflowDomain);
BTE_DEFINE_ERROR(BranchDomain);
BTE_DEFINE_ERROR(DomainViolation);
BTE_DEFINE_ERROR(QuadratureFailure);
BTE_DEFINE_ERROR(BoundaryTooClose);
BTE_DEFINE_ERROR(NoConvergence);
BTE_DEFINE_ERROR(PoleHit);
BTE_DEFINE_ERROR(TruncationInsufficient);
BTE_DEFINE_ERROR(EmptyReport);
BTE_DEFINE_ERROR(ConfigError);

#undef BTE_DEFINE_ERROR

}  // namespace bte
