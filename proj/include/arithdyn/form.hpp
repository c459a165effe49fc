#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arithdyn/polynomial.hpp"

namespace arithdyn {

/// Coordinate ring of P^N: N+1 named variables.
class Ring {
 public:
  explicit Ring(std::vector<std::string> var_names);

  std::size_t num_vars() const { return names_.size(); }
  /// Projective dimension N.
  std::size_t dimension() const { return names_.size() - 1; }
  const std::vector<std::string>& var_names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> var_names);

bool same_ring(const RingPtr& a, const RingPtr& b);

/// How sure we are that a divisor-defining form is irreducible over Q.
enum class Irreducibility {
  AssertedByUser,
  VerifiedLinear,
  /// Degree 2 or 3 with no linear factor over Q, hence irreducible.
  VerifiedNoLinearFactor,
  Unverified,
};

const char* to_string(Irreducibility s);

/// Homogeneous polynomial with integer coefficients over a Ring.
///
/// The zero form is representable (degree undefined) but is rejected wherever
/// a divisor-defining form is needed.
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  /// Throws InhomogeneousError when p mixes degrees.
  HomogeneousForm(RingPtr ring, Polynomial p);

  static HomogeneousForm variable(RingPtr ring, std::size_t index);
  static HomogeneousForm constant(RingPtr ring, const Integer& c);

  const RingPtr& ring() const { return ring_; }
  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  /// Throws ZeroFormError for the zero form.
  unsigned degree() const;

  /// Primitive integer content, lex-leading coefficient positive.
  HomogeneousForm canonical() const;
  bool is_canonical() const;

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.poly_ == b.poly_;
  }

 private:
  RingPtr ring_;
  Polynomial poly_;
};

/// Total order used for canonical listings: degree first, then the lex term
/// sequence (larger monomials first), then coefficients.
bool canonical_less(const HomogeneousForm& a, const HomogeneousForm& b);

HomogeneousForm multiply(const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm add(const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm power(const HomogeneousForm& a, unsigned exponent);

/// F(subs_0, ..., subs_N). subs must be nonzero forms of one common degree.
HomogeneousForm compose(const HomogeneousForm& f, std::span<const HomogeneousForm> subs);

std::optional<HomogeneousForm> try_divide(const HomogeneousForm& a, const HomogeneousForm& b);
/// Throws NotDivisible when b does not divide a over the integers.
HomogeneousForm exact_divide(const HomogeneousForm& a, const HomogeneousForm& b);

/// Primitive gcd with canonical sign.
HomogeneousForm gcd(const HomogeneousForm& a, const HomogeneousForm& b);

struct FormSquarefree {
  Rational unit;
  std::vector<std::pair<HomogeneousForm, unsigned>> factors;
};
FormSquarefree squarefree_decomposition(const HomogeneousForm& f);

/// True when the forms share no factor of positive degree. Tries restrictions
/// to a few lines first (a constant gcd there is a proof), then falls back to
/// the full multivariate gcd.
bool coprime(std::span<const HomogeneousForm> forms, std::uint64_t seed = 1);

Integer evaluate(const HomogeneousForm& f, std::span<const Integer> coords);

HomogeneousForm derivative(const HomogeneousForm& f, std::size_t var);

/// Canonical text: graded reverse lex order, `*` between factors, `^` for
/// powers, no spaces. parse_form inverts it.
std::string to_string(const HomogeneousForm& f);

/// Parses an expression over the ring's variables and expands it.
/// Juxtaposition multiplies ("yz^3", "x^3(x+y+z)").
HomogeneousForm parse_form(const std::string& text, const RingPtr& ring);

/// Parses without rejecting the zero form.
HomogeneousForm parse_form_allow_zero(const std::string& text, const RingPtr& ring);

}  // namespace arithdyn
