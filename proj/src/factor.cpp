#include "arithdyn/factor.hpp"

#include <algorithm>
#include <set>

#include "arithdyn/errors.hpp"

namespace arithdyn {

std::optional<std::vector<Rational>> rational_roots(const std::vector<Integer>& coeffs_in) {
  std::vector<Integer> h = coeffs_in;
  while (!h.empty() && h.back() == 0) h.pop_back();
  if (h.empty()) throw ZeroInput("rational_roots of the zero polynomial");
  std::set<Rational> roots;
  std::size_t low = 0;
  while (h[low] == 0) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    h.erase(h.begin(), h.begin() + static_cast<long>(low));
  }
  const std::size_t n = h.size() - 1;
  if (n == 0) return std::vector<Rational>(roots.begin(), roots.end());
  auto ps = positive_divisors(h.front());
  auto qs = positive_divisors(h.back());
  if (!ps || !qs) return std::nullopt;
  Integer at_one = 0, at_minus_one = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    at_one += h[i];
    at_minus_one += (i % 2 ? -h[i] : h[i]);
  }
  std::vector<Integer> qpow(n + 1);
  for (const auto& q : *qs) {
    qpow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;
    for (const auto& p0 : *ps) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), p0.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        const Integer p = p0 * sign;
        // r = p/q root => (q - p) | h(1) and (q + p) | h(-1)
        const Integer a = q - p, b = q + p;
        if (a != 0 && !mpz_divisible_p(at_one.get_mpz_t(), a.get_mpz_t())) continue;
        if (b != 0 && !mpz_divisible_p(at_minus_one.get_mpz_t(), b.get_mpz_t())) continue;
        // q^n h(p/q) = sum h_i p^i q^(n-i), Horner in p
        Integer acc = h[n];
        for (std::size_t i = n; i-- > 0;) acc = acc * p + h[i] * qpow[n - i];
        if (acc == 0) {
          Rational r(p, q);
          r.canonicalize();
          roots.insert(r);
        }
      }
    }
  }
  return std::vector<Rational>(roots.begin(), roots.end());
}

namespace {

// Terms of g on the coordinate plane spanned by x_k, x_j, as coefficients of
// u^a with u = x_k / x_j.
std::vector<Integer> plane_restriction(const HomogeneousForm& g, std::size_t k, std::size_t j) {
  const unsigned d = g.degree();
  std::vector<Integer> h(d + 1);
  for (const auto& [e, c] : g.poly().terms()) {
    bool on_plane = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != k && i != j && e[i] != 0) on_plane = false;
    if (on_plane) h[e[k]] += c;
  }
  return h;
}

}  // namespace

LinearExtraction extract_linear_factors(const HomogeneousForm& g, std::size_t candidate_budget) {
  if (g.is_zero()) throw ZeroFormError("extract_linear_factors of zero");
  const RingPtr& ring = g.ring();
  const std::size_t n = ring->num_vars();
  LinearExtraction out;
  HomogeneousForm rem = g.canonical();

  auto peel = [&](const HomogeneousForm& l) {
    while (rem.degree() > 0) {
      auto q = try_divide(rem, l);
      if (!q) break;
      out.linear_factors.push_back(l);
      rem = q->canonical();
    }
  };

  for (std::size_t i = 0; i < n; ++i) peel(HomogeneousForm::variable(ring, i));

  for (std::size_t k = 0; k + 1 < n && rem.degree() > 1; ++k) {
    // candidates[j - k - 1]: possible coefficients of x_j relative to x_k.
    std::vector<std::vector<Rational>> candidates;
    bool usable = true;
    for (std::size_t j = k + 1; j < n && usable; ++j) {
      const auto h = plane_restriction(rem, k, j);
      if (std::all_of(h.begin(), h.end(), [](const Integer& c) { return c == 0; })) {
        usable = false;
        break;
      }
      auto roots = rational_roots(h);
      if (!roots) {
        usable = false;
        break;
      }
      std::vector<Rational> cs;
      for (const auto& r : *roots) cs.push_back(-r);
      candidates.push_back(std::move(cs));
    }
    if (!usable) {
      out.complete = false;
      continue;
    }
    std::size_t total = 1;
    for (const auto& c : candidates) {
      total *= c.size();
      if (total > candidate_budget) break;
    }
    if (total == 0) continue;
    if (total > candidate_budget) {
      out.complete = false;
      continue;
    }
    std::vector<std::size_t> pick(candidates.size(), 0);
    for (std::size_t t = 0; t < total && rem.degree() > 0; ++t) {
      std::size_t rest = t;
      for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        pick[idx] = rest % candidates[idx].size();
        rest /= candidates[idx].size();
      }
      Integer den = 1;
      bool all_zero = true;
      for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        const auto& c = candidates[idx][pick[idx]];
        if (c != 0) all_zero = false;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      }
      if (all_zero) continue;
      Polynomial l = Polynomial::variable(n, k) * den;
      for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        const auto& c = candidates[idx][pick[idx]];
        l += Polynomial::variable(n, k + 1 + idx) * Integer(c.get_num() * (den / c.get_den()));
      }
      peel(HomogeneousForm(ring, std::move(l)).canonical());
    }
  }
  // A degree-1 cofactor is itself linear.
  if (rem.degree() == 1) {
    out.linear_factors.push_back(rem);
    rem = HomogeneousForm::constant(ring, 1);
  }
  out.remainder = rem;
  return out;
}

}  // namespace arithdyn
