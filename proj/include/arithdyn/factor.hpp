#pragma once

#include <optional>
#include <vector>

#include "arithdyn/form.hpp"

namespace arithdyn {

/// Rational roots of sum_i coeffs[i] u^i (no multiplicities), ascending.
/// nullopt when the coefficient divisors cannot be enumerated in budget.
std::optional<std::vector<Rational>> rational_roots(const std::vector<Integer>& coeffs);

struct LinearExtraction {
  /// Canonical linear factors, repeated by multiplicity.
  std::vector<HomogeneousForm> linear_factors;
  /// Canonical cofactor with no linear factor found.
  HomogeneousForm remainder;
  /// True when the search provably found every linear factor over Q.
  bool complete = true;
};

/// Finds the linear factors of g over Q.
///
/// Coordinate factors are divided out first. A linear factor
/// x_k + sum_{j>k} c_j x_j restricts on the plane spanned by x_k, x_j to a
/// linear factor of a binary form, so each c_j is minus a rational root of
/// that restriction; all combinations are tried by exact division. For
/// N = 2 the restrictions never vanish after removing coordinate factors and
/// the search is complete; for N >= 3 a vanishing restriction marks it
/// incomplete.
LinearExtraction extract_linear_factors(const HomogeneousForm& g, std::size_t candidate_budget = 100'000);

}  // namespace arithdyn
