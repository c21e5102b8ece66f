#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bandinv {

enum class Errc {
  InvalidArgument,
  MixedDimension,
  DimensionMismatch,
  // Band class membership.
  LeadingZero,
  NonContiguousPositiveRun,
  NegativeConstrainedEntry,
  ZeroPivot,
  // Eigensolver.
  NotSymmetric,
  NoConvergence,
  // Spectral functions.
  MembershipViolation,
  ZeroJump,
  DeadComponent,
  RankSumMismatch,
  // Reconstruction.
  IterationCapExceeded,
  AmbiguousNorm,
  BandViolation,
  NotTriangular,
  ProfileMismatch,
  // Spring chains.
  NonPositiveMass,
  IndexOutOfRange,
  DivisionByZero,
};

/// Coarse grouping used by the command line front end to pick exit codes.
enum class ErrorClass { Usage, Validation, Numerical };

std::string_view to_string(Errc code) noexcept;
ErrorClass classify(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  ErrorClass error_class() const noexcept { return classify(code_); }

 private:
  Errc code_;
};

}  // namespace bandinv
