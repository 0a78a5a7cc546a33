#ifndef TVG_ERRORS_HPP
#define TVG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tvg {

// Base class of every error raised by the library. Precondition failures on
// user-supplied groups and internal consistency failures both land here; the
// subclass names say which.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TVG_DECLARE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// core
TVG_DECLARE_ERROR(IndexOutOfRange);
TVG_DECLARE_ERROR(AmbiguousPower);
// constructions
TVG_DECLARE_ERROR(InvalidChain);
TVG_DECLARE_ERROR(NotAutomorphism);
TVG_DECLARE_ERROR(NotInvolutive);
// structure
TVG_DECLARE_ERROR(NotInvolutiveCommutative);
TVG_DECLARE_ERROR(ClosureViolation);
TVG_DECLARE_ERROR(NotSubgroup);
TVG_DECLARE_ERROR(InconsistentSystem);
TVG_DECLARE_ERROR(NotOrderTwo);
// cocycle
TVG_DECLARE_ERROR(PreconditionViolated);
TVG_DECLARE_ERROR(InvalidCocycle);
// classify
TVG_DECLARE_ERROR(NonUniquePair);
TVG_DECLARE_ERROR(NotAssociative);
TVG_DECLARE_ERROR(NotAbelian);
TVG_DECLARE_ERROR(BudgetExceeded);
// formal
TVG_DECLARE_ERROR(NearDegenerate);
// group files
TVG_DECLARE_ERROR(ParseError);
TVG_DECLARE_ERROR(NonSquareTable);

#undef TVG_DECLARE_ERROR

}  // namespace tvg

#endif  // TVG_ERRORS_HPP
