#include "arithdyn/heights.hpp"

#include "arithdyn/errors.hpp"

namespace arithdyn {

namespace {

// Value of the primitive part of f at x, with its degree.
std::pair<Integer, unsigned> primitive_value(const HomogeneousForm& f, const ProjPoint& x) {
  if (f.is_zero()) throw ZeroFormError("local height of the zero form");
  if (x.size() != f.ring()->num_vars()) throw ArityMismatch("point and form have different arity");
  const Integer content = f.poly().content();
  Integer value = evaluate(f, x.coords()) / content;
  if (value == 0) throw OnDivisor("point " + to_string(x) + " lies on (" + to_string(f) + ")");
  return {std::move(value), f.degree()};
}

ExactLog local_from_value(const Integer& value, unsigned degree, const ProjPoint& x, const Place& v) {
  if (v.is_infinite()) {
    Rational arg(pow(x.max_abs(), degree), abs(value));
    arg.canonicalize();
    return ExactLog(arg);
  }
  return ExactLog::of(pow(v.prime(), padic_valuation(value, v.prime())));
}

}  // namespace

ExactLog local_weil(const HomogeneousForm& f, const ProjPoint& x, const Place& v) {
  const auto [value, degree] = primitive_value(f, x);
  return local_from_value(value, degree, x, v);
}

ExactLog local_weil_divisor(const Divisor& d, const ProjPoint& x, const Place& v) {
  return proximity(d, x, PlaceSet{v});
}

ExactLog proximity(const Divisor& d, const ProjPoint& x, const PlaceSet& s) {
  ExactLog total;
  for (const auto& c : d.components()) {
    const auto [value, degree] = primitive_value(c.form, x);
    ExactLog part;
    for (const auto& v : s) part += local_from_value(value, degree, x, v);
    total += part.scaled(Rational(static_cast<long>(c.multiplicity)));
  }
  return total;
}

ExactLog counting(const Divisor& d, const ProjPoint& x, const PlaceSet& s) {
  return height_of_divisor_class(d, x) - proximity(d, x, s);
}

ExactLog height_of_divisor_class(const Divisor& d, const ProjPoint& x) {
  return ExactLog::of(pow(x.max_abs(), d.degree()));
}

bool on_support(const Divisor& d, const ProjPoint& x) {
  for (const auto& c : d.components())
    if (evaluate(c.form, x.coords()) == 0) return true;
  return false;
}

}  // namespace arithdyn
