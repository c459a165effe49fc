#pragma once

#include "arithdyn/divisor.hpp"
#include "arithdyn/exact_log.hpp"
#include "arithdyn/projective.hpp"

namespace arithdyn {

// Local heights use the max-coordinate presentation. For a primitive form F
// of degree d and x in normalized coordinates:
//   lambda_inf(F, x) = log(max_j |x_j|^d / |F(x)|)
//   lambda_p(F, x)   = v_p(F(x)) log p
// so that the sum over all places is exactly d * height(x).

/// Throws OnDivisor when F(x) = 0. F is replaced by its primitive part.
ExactLog local_weil(const HomogeneousForm& f, const ProjPoint& x, const Place& v);

/// sum_i m_i lambda_v(F_i, x). Throws OnDivisor.
ExactLog local_weil_divisor(const Divisor& d, const ProjPoint& x, const Place& v);

/// m_S(D, x) = sum over v in S. Throws OnDivisor.
ExactLog proximity(const Divisor& d, const ProjPoint& x, const PlaceSet& s);

/// n_S(D, x) = degree(D) height(x) - m_S(D, x). No factoring involved.
/// Throws OnDivisor.
ExactLog counting(const Divisor& d, const ProjPoint& x, const PlaceSet& s);

/// degree(D) * height(x).
ExactLog height_of_divisor_class(const Divisor& d, const ProjPoint& x);

bool on_support(const Divisor& d, const ProjPoint& x);

}  // namespace arithdyn
