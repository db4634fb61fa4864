#pragma once

#include <stdexcept>
#include <string>

namespace perron {

/// Error taxonomy shared by all modules. Each condition named in an
/// operation contract maps to one subclass so callers (and the CLI exit-code
/// logic) can branch on type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define PERRON_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& msg = #Name) : Error(msg) {}   \
  }

PERRON_DEFINE_ERROR(DimensionMismatch);
PERRON_DEFINE_ERROR(ZeroDivision);
PERRON_DEFINE_ERROR(ZeroMatrix);
PERRON_DEFINE_ERROR(TruncationExceeded);
PERRON_DEFINE_ERROR(SingularLeadingTerm);
PERRON_DEFINE_ERROR(NotIrreducible);
PERRON_DEFINE_ERROR(ConvergenceFailure);
PERRON_DEFINE_ERROR(NotStronglyConnected);
PERRON_DEFINE_ERROR(UnknownNode);
PERRON_DEFINE_ERROR(BadE);
PERRON_DEFINE_ERROR(DeltaTooLarge);
PERRON_DEFINE_ERROR(NotFlatSlanted);
PERRON_DEFINE_ERROR(NotSubtractionFree);
PERRON_DEFINE_ERROR(ResidualNotInImage);
PERRON_DEFINE_ERROR(PencilEmpty);
PERRON_DEFINE_ERROR(GammaSingular);
PERRON_DEFINE_ERROR(SingularInput);
PERRON_DEFINE_ERROR(DegenerateDominance);
PERRON_DEFINE_ERROR(NotSingular);
PERRON_DEFINE_ERROR(NotDepthZero);
PERRON_DEFINE_ERROR(ParseError);

#undef PERRON_DEFINE_ERROR

/// Raised by the driver when the genericness condition fails; carries the
/// singularity report rendered as text.
class GenericnessViolation : public Error {
 public:
  explicit GenericnessViolation(const std::string& report)
      : Error("GenericnessViolation: " + report) {}
};

}  // namespace perron
