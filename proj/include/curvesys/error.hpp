#pragma once

#include <stdexcept>
#include <string>

namespace curvesys {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CURVESYS_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

CURVESYS_DEFINE_ERROR(InvalidShape);
CURVESYS_DEFINE_ERROR(IndexError);
CURVESYS_DEFINE_ERROR(InvalidPermutation);
CURVESYS_DEFINE_ERROR(DomainError);
CURVESYS_DEFINE_ERROR(NotInvertible);
CURVESYS_DEFINE_ERROR(InvalidModuli);
CURVESYS_DEFINE_ERROR(PreconditionViolated);
CURVESYS_DEFINE_ERROR(ConstraintViolation);
CURVESYS_DEFINE_ERROR(InvalidMatrix);
CURVESYS_DEFINE_ERROR(IoError);
CURVESYS_DEFINE_ERROR(ParseError);
// Raised when a theorem-level invariant is contradicted at runtime.
CURVESYS_DEFINE_ERROR(InternalFault);

#undef CURVESYS_DEFINE_ERROR

}  // namespace curvesys
