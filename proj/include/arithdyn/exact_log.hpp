#pragma once

#include <compare>
#include <string>

#include "arithdyn/numbers.hpp"

namespace arithdyn {

/// Policy for deciding log A <=> log B.
///
/// Exact when the cross powers stay under exact_bit_cap bits; otherwise
/// directed-rounding MPFR bounds starting at start_precision bits and
/// doubling up to max_precision.
struct ComparePolicy {
  std::size_t exact_bit_cap = 10'000'000;
  long start_precision = 256;
  long max_precision = 1 << 20;
};

/// The real number log(argument) / root, with argument a positive rational.
///
/// Sums multiply arguments; rational scaling raises the argument to the
/// numerator and multiplies the root by the denominator. Nothing is ever
/// rounded.
class ExactLog {
 public:
  ExactLog() = default;
  explicit ExactLog(Rational argument, unsigned long root = 1);
  static ExactLog of(const Integer& n) { return ExactLog(Rational(n)); }

  const Rational& argument() const { return argument_; }
  unsigned long root() const { return root_; }
  bool is_zero() const { return argument_ == 1; }

  ExactLog operator+(const ExactLog& rhs) const;
  ExactLog operator-(const ExactLog& rhs) const;
  ExactLog& operator+=(const ExactLog& rhs) { return *this = *this + rhs; }
  ExactLog& operator-=(const ExactLog& rhs) { return *this = *this - rhs; }
  ExactLog operator-() const;
  /// t * value for rational t.
  ExactLog scaled(const Rational& t) const;

  /// Nearest double; for display only.
  double approx() const;

 private:
  void normalize();

  Rational argument_ = 1;
  unsigned long root_ = 1;
};

std::strong_ordering compare(const ExactLog& a, const ExactLog& b, const ComparePolicy& policy = {});

inline bool operator==(const ExactLog& a, const ExactLog& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const ExactLog& a, const ExactLog& b) { return compare(a, b); }

std::string to_string(const ExactLog& v);

}  // namespace arithdyn
