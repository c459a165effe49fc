#pragma once

#include <string>
#include <vector>

#include "arithdyn/form.hpp"
#include "arithdyn/intersect.hpp"
#include "arithdyn/selfmap.hpp"

namespace arithdyn {

struct DivisorComponent {
  HomogeneousForm form;  // canonical
  unsigned long multiplicity = 1;
  Irreducibility status = Irreducibility::Unverified;
};

/// Effective divisor sum m_i (F_i) on P^N with pairwise non-proportional
/// canonical components, kept in canonical order.
class Divisor {
 public:
  /// Canonicalizes forms, merges proportional ones, sorts. Throws
  /// ZeroFormError, RingMismatch, or DegreeMismatch when the degree is 0.
  Divisor(RingPtr ring, std::vector<DivisorComponent> components);

  const RingPtr& ring() const { return ring_; }
  const std::vector<DivisorComponent>& components() const { return components_; }
  /// sum m_i deg F_i; on P^N this is the mu with D ~ mu O(1).
  unsigned long degree() const;
  bool has_unverified() const;

  friend bool operator==(const Divisor& a, const Divisor& b);

 private:
  RingPtr ring_;
  std::vector<DivisorComponent> components_;
};

/// "(x)^3 + (x+y+z)^1 + (y)^3 + (z)^9"
std::string to_string(const Divisor& d);

/// prod F_i^{m_i}
HomogeneousForm defining_form(const Divisor& d);

/// Forms already known to occur as factors; consulted before any search.
class FactorBasis {
 public:
  struct Entry {
    HomogeneousForm form;
    Irreducibility status;
  };

  FactorBasis() = default;

  /// Canonicalizes; a duplicate keeps the stronger status.
  void add(const HomogeneousForm& form, Irreducibility status);
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
};

/// Factors g: division by basis forms, squarefree decomposition, linear
/// factor extraction. Leftover factors of degree 2 or 3 are irreducible when
/// the linear search was complete; anything else gets leftover_status.
std::vector<DivisorComponent> factor_form(const HomogeneousForm& g, const FactorBasis& basis,
                                          Irreducibility leftover_status = Irreducibility::Unverified);

/// Builds a divisor from user-declared forms and multiplicities, splitting
/// any form the factor pipeline can split. Unresolved factors are marked
/// asserted-by-user.
Divisor user_divisor(const RingPtr& ring, const std::vector<std::pair<HomogeneousForm, unsigned long>>& parts);

/// Adds user-declared basis forms, factored the same way.
void add_user_basis(FactorBasis& basis, const HomogeneousForm& form);

/// (f^(n))^* D via n single-step pullbacks; every factor found is added to
/// the basis. Throws NotCertified, or DegreeMismatch if degree(result) !=
/// d^n degree(D).
Divisor pullback(const SelfMap& f, const Divisor& d, unsigned n, FactorBasis& basis);

struct PiSelection {
  Divisor part;
  /// Maximum-cardinality properly intersecting subsets (component indices of
  /// the input), in enumeration order.
  std::vector<std::vector<std::size_t>> candidates;
  std::size_t chosen = 0;
  IntersectionReport report;
};

/// Reduced properly-intersecting part: the largest-cardinality subset of
/// distinct components that intersects properly, each with multiplicity one.
/// Ties go to the larger total degree, then to the canonical order.
/// Throws UnverifiedComponent.
PiSelection reduced_pi_part(const Divisor& d, const RandomConfig& rng = {});

}  // namespace arithdyn
