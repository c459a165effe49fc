#include "doctest.h"

#include "arithdyn/errors.hpp"
#include "arithdyn/form.hpp"
#include "support.hpp"

using namespace arithdyn;
using namespace testsupport;

TEST_CASE("parsing with juxtaposition") {
  const auto R = p2();
  CHECK(to_string(form("yz^3", R)) == "y*z^3");
  CHECK(form("yz^3", R).degree() == 4);
  CHECK(form("x^3(x+y+z)", R) == form("x^4 + x^3*y + x^3*z", R));
  CHECK(form("2xy - 3 z^2", R) == form("2*x*y-3*z^2", R));
  CHECK(form("(x+y)^2", R) == form("x^2+2*x*y+y^2", R));
  CHECK(form("-(x - y)", R) == form("y - x", R));
}

TEST_CASE("parse errors") {
  const auto R = p2();
  CHECK_THROWS_AS(form("x + y^2", R), InhomogeneousError);
  CHECK_THROWS_AS(form("x + w", R), UnknownVariable);
  CHECK_THROWS_AS(form("x - x", R), ZeroFormError);
  CHECK_THROWS_AS(form("x + ", R), SyntaxError);
  CHECK_THROWS_AS(form("(x + y", R), SyntaxError);
  CHECK_THROWS_AS(form("x/2", R), SyntaxError);
  CHECK_THROWS_AS(form("x^100000", R), SyntaxError);
  CHECK(parse_form_allow_zero("x - x", R).is_zero());
}

TEST_CASE("printing is canonical and parses back") {
  std::mt19937_64 rng(21);
  const auto R = p2();
  for (int i = 0; i < 300; ++i) {
    const auto f = random_form(rng, R, static_cast<unsigned>(uniform(rng, 0, 5)), 20, 0.5);
    const std::string text = to_string(f);
    CHECK(text.find(' ') == std::string::npos);
    CHECK(parse_form(text, R) == f);
  }
  CHECK(to_string(form("z^4 + y^4", R)) == "y^4+z^4");
  CHECK(to_string(form("z + x + y", R)) == "x+y+z");
}

TEST_CASE("canonical form") {
  const auto R = p2();
  CHECK(form("-6x - 4y", R).canonical() == form("3x + 2y", R));
  CHECK(form("-y + x", R).canonical() == form("x - y", R));
  CHECK(form("3x+2y", R).is_canonical());
  CHECK(canonical_less(form("z", R), form("x^2", R)));
  CHECK(canonical_less(form("x", R), form("x+y+z", R)));
  CHECK(canonical_less(form("x+y+z", R), form("y", R)));
}

TEST_CASE("composition, division, gcd") {
  const auto R = p2();
  const std::vector<HomogeneousForm> subs{form("y^4+z^4", R), form("x^3(x+y+z)", R), form("yz^3", R)};
  CHECK(compose(form("z", R), subs) == form("yz^3", R));
  CHECK(compose(form("x*z", R), subs) == form("(y^4+z^4)*y*z^3", R));
  const auto q = exact_divide(form("x^2 - y^2", R), form("x + y", R));
  CHECK(q == form("x - y", R));
  CHECK_THROWS_AS(exact_divide(form("x^2 + y^2", R), form("x + y", R)), NotDivisible);
  CHECK(gcd(form("x^2 - y^2", R), form("2x^2 + 2xy", R)) == form("x + y", R));
  const std::vector<HomogeneousForm> mixed{form("x", R), form("y^2", R), form("z", R)};
  const std::vector<HomogeneousForm> short_list{form("x", R), form("y", R)};
  CHECK_THROWS_AS(compose(form("x", R), short_list), ArityMismatch);
  CHECK_THROWS_AS(compose(form("x", R), mixed), DegreeMismatch);
}

TEST_CASE("coprimality") {
  const auto R = p2();
  const std::vector<HomogeneousForm> a{form("x^2+y^2", R), form("xy", R), form("z^2", R)};
  CHECK(coprime(a));
  const std::vector<HomogeneousForm> b{form("x(x+z)", R), form("x*y", R), form("x*z - x*y", R)};
  CHECK_FALSE(coprime(b));
}

TEST_CASE("rings") {
  CHECK_THROWS(make_ring({"x"}));
  CHECK_THROWS(make_ring({"x", "x"}));
  const auto R = p2();
  CHECK(R->dimension() == 2);
  CHECK(*R->index_of("z") == 2);
  const auto S = make_ring({"a", "b", "c"});
  CHECK_THROWS_AS(multiply(form("x", R), parse_form("a", S)), RingMismatch);
}
