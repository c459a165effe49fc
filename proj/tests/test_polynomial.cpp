#include "doctest.h"

#include "arithdyn/polynomial.hpp"
#include "support.hpp"

using namespace arithdyn;
using namespace testsupport;

namespace {

Polynomial random_poly(std::mt19937_64& rng, std::size_t n, unsigned max_deg, long c, int terms) {
  Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n);
    for (auto& k : e) k = static_cast<std::uint32_t>(uniform(rng, 0, max_deg));
    p += Polynomial::monomial(e, Integer(uniform(rng, -c, c)));
  }
  return p;
}

bool divides(const Polynomial& a, const Polynomial& b) { return divide_exact(b, a).has_value(); }

}  // namespace

TEST_CASE("exact division recovers the cofactor") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = random_poly(rng, 3, 3, 9, 5);
    const Polynomial b = random_poly(rng, 3, 3, 9, 5);
    if (a.is_zero() || b.is_zero()) continue;
    const auto q = divide_exact(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
    const Polynomial bumped = a * b + Polynomial::constant(3, 1);
    if (b.total_degree() > 0) CHECK_FALSE(divide_exact(bumped, b));
  }
}

TEST_CASE("gcd divides both inputs and contains the planted factor") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    const Polynomial a = random_poly(rng, 3, 2, 5, 4);
    const Polynomial b = random_poly(rng, 3, 2, 5, 4);
    const Polynomial c = random_poly(rng, 3, 2, 5, 3);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const Polynomial g = gcd(a * c, b * c);
    CHECK(divides(g, a * c));
    CHECK(divides(g, b * c));
    CHECK(divides(c, g));
    CHECK(gcd(b * c, a * c) == g);
  }
}

TEST_CASE("gcd with content") {
  const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  Polynomial a = (x + y) * Polynomial::constant(2, 6);
  Polynomial b = (x + y) * (x - y) * Polynomial::constant(2, 4);
  a += Polynomial(2);
  CHECK(gcd(a, b) == (x + y) * Polynomial::constant(2, 2));
  CHECK(gcd(Polynomial(2), Polynomial(2)).is_zero());
}

TEST_CASE("squarefree decomposition reconstructs the input") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const Polynomial a = random_poly(rng, 3, 2, 4, 3);
    const Polynomial b = random_poly(rng, 3, 1, 4, 3);
    if (a.total_degree() < 1 || b.total_degree() < 1) continue;
    const Polynomial p = pow(a, 2) * pow(b, 3) * Polynomial::constant(3, -6);
    const SquarefreeFactors sf = squarefree_decomposition(p);
    Polynomial back = Polynomial::constant(3, 1);
    unsigned last = 0;
    for (const auto& [f, e] : sf.factors) {
      CHECK(e > last);
      last = e;
      back = back * pow(f, e);
      Polynomial g = f;
      for (std::size_t v = 0; v < 3; ++v) g = gcd(g, f.derivative(v));
      CHECK(g.total_degree() == 0);
    }
    CHECK(back * Polynomial::constant(3, sf.unit.get_num()) == p * Polynomial::constant(3, sf.unit.get_den()));
  }
}

TEST_CASE("squarefree factors are squarefree") {
  const Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1), z = Polynomial::variable(3, 2);
  const Polynomial p = pow(x, 3) * (x + y + z) * pow(y, 3) * pow(z, 9);
  const auto sf = squarefree_decomposition(p);
  REQUIRE(sf.factors.size() == 3);
  CHECK(sf.factors[0].second == 1);
  CHECK(sf.factors[0].first == x + y + z);
  CHECK(sf.factors[1].second == 3);
  CHECK(sf.factors[1].first == x * y);
  CHECK(sf.factors[2].second == 9);
  CHECK(sf.factors[2].first == z);
}

TEST_CASE("evaluation and substitution") {
  const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  const Polynomial p = pow(x + y, 3);
  const std::vector<Integer> pt{2, -5};
  CHECK(p.evaluate(pt) == -27);
  const std::vector<Polynomial> subs{x * y, y * y};
  CHECK(p.substitute(subs) == pow(x * y + y * y, 3));
}
