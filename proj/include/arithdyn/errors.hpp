#pragma once

#include <stdexcept>
#include <string>

namespace arithdyn {

/// Broad failure class; the CLI maps it onto its exit code.
enum class ErrorKind { Parse, Computation, Budget };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(name) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

#define ARITHDYN_DEFINE_ERROR(Name, Kind)                 \
  class Name : public Error {                             \
   public:                                                \
    explicit Name(const std::string& what)                \
        : Error(ErrorKind::Kind, #Name, what) {}          \
  };

ARITHDYN_DEFINE_ERROR(SyntaxError, Parse)
ARITHDYN_DEFINE_ERROR(InhomogeneousError, Parse)
ARITHDYN_DEFINE_ERROR(UnknownVariable, Parse)
ARITHDYN_DEFINE_ERROR(ZeroFormError, Parse)

ARITHDYN_DEFINE_ERROR(RingMismatch, Computation)
ARITHDYN_DEFINE_ERROR(ArityMismatch, Computation)
ARITHDYN_DEFINE_ERROR(DegreeMismatch, Computation)
ARITHDYN_DEFINE_ERROR(NotDivisible, Computation)
ARITHDYN_DEFINE_ERROR(AllZero, Computation)
ARITHDYN_DEFINE_ERROR(ZeroInput, Computation)
ARITHDYN_DEFINE_ERROR(NotPrime, Computation)
ARITHDYN_DEFINE_ERROR(OnDivisor, Computation)
ARITHDYN_DEFINE_ERROR(NotCertified, Computation)
ARITHDYN_DEFINE_ERROR(CommonFactor, Computation)
ARITHDYN_DEFINE_ERROR(UnverifiedComponent, Computation)
ARITHDYN_DEFINE_ERROR(UnverifiedIrreducibility, Computation)
ARITHDYN_DEFINE_ERROR(DeltaNotGreaterThanOne, Computation)
ARITHDYN_DEFINE_ERROR(InvalidArgument, Computation)

ARITHDYN_DEFINE_ERROR(OverflowGuard, Budget)
ARITHDYN_DEFINE_ERROR(SizeBudgetExceeded, Budget)

#undef ARITHDYN_DEFINE_ERROR

}  // namespace arithdyn
