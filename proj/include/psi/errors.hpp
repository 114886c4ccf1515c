#pragma once

#include <stdexcept>
#include <string>

namespace psi {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define PSI_ERROR_TYPE(Name)                                  \
  struct Name : Error {                                       \
    explicit Name(const std::string& msg) : Error(msg) {}     \
  }

PSI_ERROR_TYPE(NotAPrimePower);
PSI_ERROR_TYPE(UnsupportedOrder);
PSI_ERROR_TYPE(ZeroInverse);
PSI_ERROR_TYPE(OddOrder);
PSI_ERROR_TYPE(EvenOrder);
PSI_ERROR_TYPE(NotPerfectMatching);
PSI_ERROR_TYPE(NotMaximumMatching);
PSI_ERROR_TYPE(ParityMismatch);
PSI_ERROR_TYPE(PaletteSizeMismatch);
PSI_ERROR_TYPE(SpecialEdgeOutsideHost);
PSI_ERROR_TYPE(SpecialVertexInsideHost);
PSI_ERROR_TYPE(SameVertex);
PSI_ERROR_TYPE(TooSmall);
PSI_ERROR_TYPE(PartialColoringError);
PSI_ERROR_TYPE(InternalConstructionFailure);
PSI_ERROR_TYPE(ParseError);

#undef PSI_ERROR_TYPE

}  // namespace psi
