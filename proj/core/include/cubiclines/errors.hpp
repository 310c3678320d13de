#pragma once

#include <stdexcept>
#include <string>

namespace cubiclines {

// Base class of all library errors. The CLI maps concrete types to exit codes.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CUBICLINES_DEFINE_ERROR(Name)                       \
  class Name : public Error {                               \
  public:                                                   \
    explicit Name(const std::string& what) : Error(what) {} \
  }

CUBICLINES_DEFINE_ERROR(ParseError);            // malformed input (text, JSON, bracket)
CUBICLINES_DEFINE_ERROR(UnknownNameError);      // unknown builtin surface / group name
CUBICLINES_DEFINE_ERROR(DependentSpanError);    // span points are projectively equal
CUBICLINES_DEFINE_ERROR(NoChartContainsLineError);
CUBICLINES_DEFINE_ERROR(DegenerateSurfaceError);   // line count != 27 or a non-simple zero
CUBICLINES_DEFINE_ERROR(BudgetExhaustedError);     // resampling budget ran out
CUBICLINES_DEFINE_ERROR(PointsNotClosedError);     // set not closed under the group action
CUBICLINES_DEFINE_ERROR(AmbientMismatchError);     // Burnside arithmetic across ambient groups
CUBICLINES_DEFINE_ERROR(NoSolutionError);          // no nonnegative element realizes a character
CUBICLINES_DEFINE_ERROR(TableMismatchError);       // direct vs. restricted orbit answers differ
CUBICLINES_DEFINE_ERROR(NotRealLineError);
CUBICLINES_DEFINE_ERROR(DegenerateInvolutionError);  // branch-point discriminant within noise of 0
CUBICLINES_DEFINE_ERROR(SegreViolationError);        // hyperbolic - elliptic != 3

#undef CUBICLINES_DEFINE_ERROR

}  // namespace cubiclines
