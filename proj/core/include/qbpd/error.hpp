#pragma once

#include <stdexcept>
#include <string>

namespace qbpd {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QBPD_DEFINE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

QBPD_DEFINE_ERROR(NotABijection);
QBPD_DEFINE_ERROR(OutOfRange);
QBPD_DEFINE_ERROR(IdentityPermutation);
QBPD_DEFINE_ERROR(ParseError);
QBPD_DEFINE_ERROR(AmbientMismatch);
// Raised when a divided difference leaves a remainder. Never expected; it
// signals an arithmetic bug.
QBPD_DEFINE_ERROR(InexactDivision);
QBPD_DEFINE_ERROR(SizeMismatch);
QBPD_DEFINE_ERROR(TracingStuck);
QBPD_DEFINE_ERROR(InvalidDiagram);
QBPD_DEFINE_ERROR(HasDominoes);
QBPD_DEFINE_ERROR(NotRestrictable);
QBPD_DEFINE_ERROR(SizeLimit);

#undef QBPD_DEFINE_ERROR

}  // namespace qbpd
