#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arithdyn/numbers.hpp"

namespace arithdyn {

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with integer coefficients.
///
/// Terms are kept in a map ordered lexicographically descending on the
/// exponent vector (x_0 > x_1 > ...), so begin() is the lex-leading term.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Integer, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Integer& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial monomial(Exponents exps, const Integer& c);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  unsigned degree_in(std::size_t var) const;

  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const Integer& leading_coefficient() const { return terms_.begin()->second; }
  /// Constant coefficient (zero if absent).
  Integer constant_coefficient() const;

  void add_term(const Exponents& exps, const Integer& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Integer& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Multiply by a monomial x^shift.
  Polynomial shifted(const Exponents& shift) const;

  /// gcd of the integer coefficients (0 for the zero polynomial), positive.
  Integer content() const;
  /// Divides out the integer content and makes the leading coefficient positive.
  Polynomial primitive_part() const;
  /// Flips the sign so the lex-leading coefficient is positive.
  Polynomial sign_normalized() const;

  Integer evaluate(std::span<const Integer> point) const;
  /// Substitutes subs[i] for x_i. All subs share one variable count.
  Polynomial substitute(std::span<const Polynomial> subs) const;
  Polynomial derivative(std::size_t var) const;

  /// Coefficients c_k (polynomials free of `var`) with p = sum c_k var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  static Polynomial from_coefficients_in(std::size_t num_vars, std::size_t var,
                                         const std::vector<Polynomial>& coeffs);

 private:
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Quotient q with b*q == a over the integers, or nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor over Z[x]: integer content included, lex-leading
/// coefficient positive. gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Result of a squarefree decomposition: p = unit * prod factor^multiplicity.
struct SquarefreeFactors {
  Rational unit;
  /// Primitive, pairwise coprime, squarefree; multiplicities strictly increasing.
  std::vector<std::pair<Polynomial, unsigned>> factors;
};

SquarefreeFactors squarefree_decomposition(const Polynomial& p);

}  // namespace arithdyn
