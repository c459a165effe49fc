#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithdyn/divisor.hpp"
#include "arithdyn/exact_log.hpp"
#include "arithdyn/form.hpp"
#include "arithdyn/projective.hpp"
#include "arithdyn/selfmap.hpp"

namespace arithdyn {

/// A parsed problem file.
///
///   ring P2 vars x,y,z
///   map f = [y^4 + z^4, x^3(x+y+z), yz^3]
///   divisor D = (z)^1
///   basis = { x, x+y+z }
///   point x0 = [1 : 1 : 1]
///   places S = {inf, 2}
///   param n = 2
///
/// One declaration per line, '#' starts a comment. "divisor D = 0" declares
/// the empty divisor.
struct Problem {
  RingPtr ring;
  std::string map_name;
  std::optional<SelfMap> map;
  std::string divisor_name;
  std::optional<std::vector<std::pair<HomogeneousForm, unsigned long>>> divisor;
  std::vector<HomogeneousForm> basis;
  std::vector<std::pair<std::string, ProjPoint>> points;
  std::optional<PlaceSet> places;
  std::map<std::string, std::string> params;

  /// Divisor with user-declared components. Throws InvalidArgument when no
  /// divisor is declared or it is empty.
  Divisor user_divisor() const;
  FactorBasis factor_basis() const;
  const SelfMap& self_map() const;
  const ProjPoint& point() const;

  std::optional<std::string> param(const std::string& name) const;
  unsigned long param_uint(const std::string& name, unsigned long fallback) const;
  Rational param_rational(const std::string& name, const Rational& fallback) const;
  /// "log(r)" or a bare positive rational r, read as log r.
  std::optional<ExactLog> param_log(const std::string& name) const;
};

/// Throws SyntaxError (with the line number) and the form parser's errors.
Problem parse_problem(const std::string& text);

/// Throws SyntaxError when the file cannot be read.
Problem load_problem(const std::string& path);

/// "log(r)" or "r" with r a positive rational.
ExactLog parse_log(const std::string& text);

}  // namespace arithdyn
