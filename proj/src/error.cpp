#include "bandinv/error.hpp"

namespace bandinv {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::MixedDimension: return "MixedDimension";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::LeadingZero: return "LeadingZero";
    case Errc::NonContiguousPositiveRun: return "NonContiguousPositiveRun";
    case Errc::NegativeConstrainedEntry: return "NegativeConstrainedEntry";
    case Errc::ZeroPivot: return "ZeroPivot";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::MembershipViolation: return "MembershipViolation";
    case Errc::ZeroJump: return "ZeroJump";
    case Errc::DeadComponent: return "DeadComponent";
    case Errc::RankSumMismatch: return "RankSumMismatch";
    case Errc::IterationCapExceeded: return "IterationCapExceeded";
    case Errc::AmbiguousNorm: return "AmbiguousNorm";
    case Errc::BandViolation: return "BandViolation";
    case Errc::NotTriangular: return "NotTriangular";
    case Errc::ProfileMismatch: return "ProfileMismatch";
    case Errc::NonPositiveMass: return "NonPositiveMass";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

ErrorClass classify(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::MixedDimension:
    case Errc::DimensionMismatch:
    case Errc::IndexOutOfRange:
      return ErrorClass::Usage;
    case Errc::NoConvergence:
    case Errc::IterationCapExceeded:
    case Errc::AmbiguousNorm:
      return ErrorClass::Numerical;
    default:
      return ErrorClass::Validation;
  }
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace bandinv
