#pragma once

#include <stdexcept>
#include <string>

namespace ellfib {

// Base class for all domain-level failures.  The CLI maps these to exit
// code 1 and prints name() so scripts can dispatch on the error kind.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define ELLFIB_ERROR(CLASS)                                    \
  class CLASS : public DomainError {                           \
   public:                                                     \
    explicit CLASS(const std::string& what)                    \
        : DomainError(#CLASS, what) {}                         \
  }

ELLFIB_ERROR(NonMinimalError);
ELLFIB_ERROR(InconsistentOrdersError);
ELLFIB_ERROR(UnrecognizedClassError);
ELLFIB_ERROR(OverflowError);
ELLFIB_ERROR(IncompatibleJFamiliesError);
ELLFIB_ERROR(MissingMultiplicityError);
ELLFIB_ERROR(NotGoodError);
ELLFIB_ERROR(UnknownClassError);
ELLFIB_ERROR(NotExceptionalError);
ELLFIB_ERROR(InvalidMultiplicityError);
ELLFIB_ERROR(ZeroPolynomialError);
ELLFIB_ERROR(DegenerateFibrationError);
ELLFIB_ERROR(BudgetExhaustedError);
ELLFIB_ERROR(UnsupportedCenterError);
ELLFIB_ERROR(ParseError);
ELLFIB_ERROR(InvalidFiberTypeError);

#undef ELLFIB_ERROR

}  // namespace ellfib
