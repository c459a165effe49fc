#include "doctest.h"

#include "arithdyn/errors.hpp"
#include "arithdyn/numbers.hpp"
#include "support.hpp"

using namespace arithdyn;
using namespace testsupport;

TEST_CASE("padic valuation agrees with repeated division") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Integer n = Integer(uniform(rng, 1, 1000000)) * pow(Integer(uniform(rng, 2, 7)), static_cast<unsigned long>(uniform(rng, 0, 30)));
    if (uniform(rng, 0, 1)) n = -n;
    for (long p : {2, 3, 5, 7, 11, 101}) CHECK(padic_valuation(n, Integer(p)) == trial_valuation(n, Integer(p)));
  }
  CHECK_THROWS_AS(padic_valuation(0, 2), ZeroInput);
}

TEST_CASE("factorization multiplies back and uses primes") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Integer n = Integer(uniform(rng, 2, 1L << 40)) * Integer(uniform(rng, 1, 1L << 20));
    const auto f = factor_integer(n);
    REQUIRE(f);
    Integer prod = 1;
    for (const auto& [p, e] : *f) {
      CHECK(is_prime(p));
      prod *= pow(p, e);
    }
    CHECK(prod == n);
  }
  const auto big = factor_integer(Integer("1000000016000000063"));  // (10^9+7)(10^9+9)
  REQUIRE(big);
  CHECK(big->size() == 2);
  CHECK(big->at(Integer(1000000007)) == 1);
}

TEST_CASE("positive divisors against brute force") {
  for (long n = 1; n <= 400; ++n) {
    std::vector<Integer> brute;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) brute.emplace_back(d);
    auto got = positive_divisors(Integer(-n));
    REQUIRE(got);
    std::sort(got->begin(), got->end());
    CHECK(*got == brute);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/32") == Rational(1, 32));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), SyntaxError);
  CHECK_THROWS_AS(parse_rational("1.5"), SyntaxError);
  CHECK_THROWS_AS(parse_rational(""), SyntaxError);
  CHECK_THROWS_AS(parse_rational("/3"), SyntaxError);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(Integer("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK(bit_length(Integer(255)) == 8);
}
