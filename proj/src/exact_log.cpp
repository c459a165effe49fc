#include "arithdyn/exact_log.hpp"

#include <mpfr.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "arithdyn/errors.hpp"

namespace arithdyn {

ExactLog::ExactLog(Rational argument, unsigned long root) : argument_(std::move(argument)), root_(root) {
  argument_.canonicalize();
  if (argument_ <= 0) throw InvalidArgument("logarithm of a nonpositive number");
  if (root_ == 0) throw InvalidArgument("zero root");
  normalize();
}

void ExactLog::normalize() {
  if (argument_ == 1) {
    root_ = 1;
    return;
  }
  if (root_ == 1) return;
  // Pull out the largest k | root with argument a perfect k-th power.
  for (unsigned long k = root_; k > 1; --k) {
    if (root_ % k) continue;
    Integer num, den;
    if (mpz_root(num.get_mpz_t(), argument_.get_num_mpz_t(), k) &&
        mpz_root(den.get_mpz_t(), argument_.get_den_mpz_t(), k)) {
      argument_ = Rational(num, den);
      root_ /= k;
      return;
    }
  }
}

ExactLog ExactLog::operator+(const ExactLog& rhs) const {
  const unsigned long l = std::lcm(root_, rhs.root_);
  Rational a = pow(argument_, static_cast<long>(l / root_)) * pow(rhs.argument_, static_cast<long>(l / rhs.root_));
  return ExactLog(std::move(a), l);
}

ExactLog ExactLog::operator-() const { return ExactLog(1 / argument_, root_); }

ExactLog ExactLog::operator-(const ExactLog& rhs) const { return *this + (-rhs); }

ExactLog ExactLog::scaled(const Rational& t) const {
  Rational q = t;
  q.canonicalize();
  if (q == 0 || argument_ == 1) return ExactLog();
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_ulong_p())
    throw SizeBudgetExceeded("scaling factor too large");
  const long num = q.get_num().get_si();
  const unsigned long den = q.get_den().get_ui();
  return ExactLog(pow(argument_, num), root_ * den);
}

double ExactLog::approx() const {
  // log(n/d) = log n - log d, each via mantissa/exponent to avoid overflow.
  auto log_of = [](const Integer& n) {
    long exp = 0;
    const double m = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(m) + static_cast<double>(exp) * std::log(2.0);
  };
  return (log_of(argument_.get_num()) - log_of(argument_.get_den())) / static_cast<double>(root_);
}

namespace {

// Bounds on log(argument)/root at the given precision.
void log_bounds(const ExactLog& v, long prec, mpfr_t lo, mpfr_t hi) {
  mpfr_t a, b;
  mpfr_inits2(prec, a, b, static_cast<mpfr_ptr>(nullptr));
  // lo = log(num)_down - log(den)_up
  mpfr_set_z(a, v.argument().get_num_mpz_t(), MPFR_RNDD);
  mpfr_log(a, a, MPFR_RNDD);
  mpfr_set_z(b, v.argument().get_den_mpz_t(), MPFR_RNDU);
  mpfr_log(b, b, MPFR_RNDU);
  mpfr_sub(lo, a, b, MPFR_RNDD);
  mpfr_set_z(a, v.argument().get_num_mpz_t(), MPFR_RNDU);
  mpfr_log(a, a, MPFR_RNDU);
  mpfr_set_z(b, v.argument().get_den_mpz_t(), MPFR_RNDD);
  mpfr_log(b, b, MPFR_RNDD);
  mpfr_sub(hi, a, b, MPFR_RNDU);
  mpfr_div_ui(lo, lo, v.root(), MPFR_RNDD);
  mpfr_div_ui(hi, hi, v.root(), MPFR_RNDU);
  mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

std::strong_ordering compare(const ExactLog& a, const ExactLog& b, const ComparePolicy& policy) {
  if (a.root() == b.root() && a.argument() == b.argument()) return std::strong_ordering::equal;
  // log(A)/k vs log(B)/l  <=>  A^l vs B^k
  const auto bits = [](const Rational& r) {
    return bit_length(r.get_num()) + bit_length(r.get_den());
  };
  const double cost = static_cast<double>(bits(a.argument())) * static_cast<double>(b.root()) +
                      static_cast<double>(bits(b.argument())) * static_cast<double>(a.root());
  if (cost <= static_cast<double>(policy.exact_bit_cap)) {
    const Rational lhs = pow(a.argument(), static_cast<long>(b.root()));
    const Rational rhs = pow(b.argument(), static_cast<long>(a.root()));
    const int c = cmp(lhs, rhs);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  for (long prec = policy.start_precision; prec <= policy.max_precision; prec *= 2) {
    mpfr_t alo, ahi, blo, bhi;
    mpfr_inits2(prec, alo, ahi, blo, bhi, static_cast<mpfr_ptr>(nullptr));
    log_bounds(a, prec, alo, ahi);
    log_bounds(b, prec, blo, bhi);
    std::strong_ordering result = std::strong_ordering::equivalent;
    bool decided = false;
    if (mpfr_less_p(ahi, blo)) {
      result = std::strong_ordering::less;
      decided = true;
    } else if (mpfr_greater_p(alo, bhi)) {
      result = std::strong_ordering::greater;
      decided = true;
    }
    mpfr_clears(alo, ahi, blo, bhi, static_cast<mpfr_ptr>(nullptr));
    if (decided) return result;
  }
  throw SizeBudgetExceeded("logarithm comparison undecided within the precision budget");
}

std::string to_string(const ExactLog& v) {
  std::ostringstream os;
  os << "log(" << v.argument().get_str() << ")";
  if (v.root() != 1) os << "/" << v.root();
  return os.str();
}

}  // namespace arithdyn
