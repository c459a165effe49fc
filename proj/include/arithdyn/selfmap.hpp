#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arithdyn/form.hpp"
#include "arithdyn/intersect.hpp"
#include "arithdyn/projective.hpp"

namespace arithdyn {

/// Result of the regularity check for a self-map of P^N.
struct MorphismCertificate {
  bool certified = false;
  /// Macaulay degree at which surjectivity was (or was not) reached.
  long degree_bound = -1;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
};

/// f = [f_0 : ... : f_N], forms of one common degree without a common factor.
class SelfMap {
 public:
  /// Throws DegreeMismatch, RingMismatch, ArityMismatch or CommonFactor.
  explicit SelfMap(std::vector<HomogeneousForm> components);

  const RingPtr& ring() const { return components_.front().ring(); }
  const std::vector<HomogeneousForm>& components() const { return components_; }
  unsigned degree() const { return degree_; }

  const std::optional<MorphismCertificate>& certificate() const { return certificate_; }
  bool is_certified() const { return certificate_ && certificate_->certified; }

  /// Copy carrying the result of check_morphism.
  SelfMap with_certificate(MorphismCertificate cert) const;

 private:
  SelfMap() = default;
  std::vector<HomogeneousForm> components_;
  unsigned degree_ = 0;
  std::optional<MorphismCertificate> certificate_;
};

/// Certifies that the components have no common zero over the algebraic
/// closure (Macaulay test on N+1 forms, exact in both directions).
MorphismCertificate check_morphism(const SelfMap& f);

/// Convenience: f with its certificate attached.
SelfMap certify(const SelfMap& f);

/// f^(n) by substitution. Iterates of a certified map stay certified.
/// Throws OverflowGuard when a component could exceed term_budget terms.
SelfMap iterate_symbolic(const SelfMap& f, unsigned n, std::size_t term_budget = 1'000'000);

/// One pointwise step. Throws NotCertified if the image is all zero.
ProjPoint apply(const SelfMap& f, const ProjPoint& x);

struct Orbit {
  std::vector<ProjPoint> points;
  /// (first, repeat): points[repeat] == points[first], first repeat found.
  std::optional<std::pair<std::size_t, std::size_t>> cycle;
};

/// [x0, f(x0), ..., f^K(x0)], pointwise with renormalization.
/// Throws SizeBudgetExceeded when a coordinate passes bit_budget bits.
Orbit orbit(const SelfMap& f, const ProjPoint& x0, std::size_t steps, std::size_t bit_budget = 1u << 20);

struct DynamicalDegree {
  unsigned value = 0;
  /// Set when the degree is 1: the main theorem needs it > 1.
  bool warning = false;
};

/// On P^N, f^*O(1) = O(d), so the dynamical degree is the common degree.
/// Throws NotCertified.
DynamicalDegree dynamical_degree(const SelfMap& f);

}  // namespace arithdyn
