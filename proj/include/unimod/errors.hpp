#pragma once

#include <stdexcept>
#include <string>

namespace unimod {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define UNIMOD_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

UNIMOD_DEFINE_ERROR(InvalidArgument);
UNIMOD_DEFINE_ERROR(ParseError);
UNIMOD_DEFINE_ERROR(CardinalityTooLarge);
UNIMOD_DEFINE_ERROR(NonIntegerResult);
UNIMOD_DEFINE_ERROR(TorsionMismatch);
UNIMOD_DEFINE_ERROR(NoSolution);
UNIMOD_DEFINE_ERROR(BudgetExceeded);
UNIMOD_DEFINE_ERROR(NotOdd);
UNIMOD_DEFINE_ERROR(DimensionNotDivisibleBy4);
UNIMOD_DEFINE_ERROR(NotSelfDual);
UNIMOD_DEFINE_ERROR(NotDoublyEven);
UNIMOD_DEFINE_ERROR(CompletionFailed);
UNIMOD_DEFINE_ERROR(UnknownName);
UNIMOD_DEFINE_ERROR(SolveFailed);
UNIMOD_DEFINE_ERROR(AlphaOutOfRange);
UNIMOD_DEFINE_ERROR(ConstraintViolated);
UNIMOD_DEFINE_ERROR(Overflow);

#undef UNIMOD_DEFINE_ERROR

// Raised when a constrained solve leaves free parameters.
class NonUnique : public Error {
 public:
  NonUnique(const std::string& what, int dimension)
      : Error(what), dimension_(dimension) {}
  int dimension() const { return dimension_; }

 private:
  int dimension_;
};

}  // namespace unimod
