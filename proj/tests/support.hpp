// Helpers and independent oracles shared by the test programs.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "arithdyn/form.hpp"
#include "arithdyn/numbers.hpp"
#include "arithdyn/projective.hpp"

namespace testsupport {

using arithdyn::HomogeneousForm;
using arithdyn::Integer;
using arithdyn::Rational;
using arithdyn::RingPtr;

inline RingPtr p2() { return arithdyn::make_ring({"x", "y", "z"}); }

inline HomogeneousForm form(const std::string& text, const RingPtr& ring) { return arithdyn::parse_form(text, ring); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// All exponent vectors of total degree d in n variables.
inline std::vector<arithdyn::Exponents> monomials(std::size_t n, unsigned d) {
  std::vector<arithdyn::Exponents> out;
  arithdyn::Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Random nonzero form of degree d with coefficients in [-c, c].
inline HomogeneousForm random_form(std::mt19937_64& rng, const RingPtr& ring, unsigned d, long c,
                                   double density = 1.0) {
  for (;;) {
    arithdyn::Polynomial p(ring->num_vars());
    std::bernoulli_distribution keep(density);
    for (const auto& e : monomials(ring->num_vars(), d))
      if (keep(rng)) p += arithdyn::Polynomial::monomial(e, Integer(uniform(rng, -c, c)));
    if (!p.is_zero()) return HomogeneousForm(ring, p);
  }
}

inline arithdyn::ProjPoint random_point(std::mt19937_64& rng, std::size_t n, long bound) {
  for (;;) {
    std::vector<Integer> c;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      c.emplace_back(uniform(rng, -bound, bound));
      nonzero = nonzero || c.back() != 0;
    }
    if (nonzero) return arithdyn::ProjPoint(c);
  }
}

/// v_p(n) by repeated division.
inline unsigned long trial_valuation(Integer n, const Integer& p) {
  unsigned long e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

/// Prime factorization by trial division (small inputs only).
inline std::vector<std::pair<Integer, unsigned long>> trial_factor(Integer n) {
  std::vector<std::pair<Integer, unsigned long>> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Three lines a.x = 0 in P^2 pass through one point iff det = 0.
inline bool concurrent(const std::vector<long>& a, const std::vector<long>& b, const std::vector<long>& c) {
  // Intersect a and b by solving the 2x2 system, then test c there.
  const long p0 = a[1] * b[2] - a[2] * b[1];
  const long p1 = a[2] * b[0] - a[0] * b[2];
  const long p2c = a[0] * b[1] - a[1] * b[0];
  return c[0] * p0 + c[1] * p1 + c[2] * p2c == 0;
}

}  // namespace testsupport
