#include "doctest.h"

#include "arithdyn/errors.hpp"
#include "arithdyn/projective.hpp"
#include "support.hpp"

using namespace arithdyn;
using namespace testsupport;

TEST_CASE("normalization") {
  const std::vector<Integer> raw{-4, 6, 0};
  const ProjPoint p(raw);
  CHECK(p.coords() == std::vector<Integer>{2, -3, 0});
  const std::vector<Rational> q{Rational(1, 2), Rational(-1, 3), Rational(0)};
  CHECK(normalize(q) == ProjPoint(std::vector<Integer>{3, -2, 0}));
  CHECK_THROWS_AS(ProjPoint(std::vector<Integer>{0, 0, 0}), AllZero);
  CHECK(p.max_abs() == 3);
  CHECK(height(p) == ExactLog::of(3));
}

TEST_CASE("normalization is idempotent and scale invariant") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const ProjPoint p = random_point(rng, 3, 1000);
    CHECK(normalize(std::span<const Integer>(p.coords())) == p);
    std::vector<Integer> scaled;
    const long s = uniform(rng, -50, 50);
    if (s == 0) continue;
    for (const auto& c : p.coords()) scaled.push_back(c * s);
    CHECK(ProjPoint(scaled) == p);
  }
}

TEST_CASE("point and place literals") {
  CHECK(parse_point("[1 : 1 : 1]") == ProjPoint(std::vector<Integer>{1, 1, 1}));
  CHECK(parse_point("[1/2 : 1/3 : 1]") == ProjPoint(std::vector<Integer>{3, 2, 6}));
  CHECK(to_string(parse_point("[2:3:1]")) == "[2 : 3 : 1]");
  CHECK_THROWS_AS(parse_point("1 : 2"), SyntaxError);
  const PlaceSet s = parse_places("{3, inf, 2}");
  CHECK(to_string(s) == "{inf, 2, 3}");
  CHECK(parse_places("{}").empty());
  CHECK_THROWS_AS(parse_places("{4}"), NotPrime);
  CHECK_THROWS_AS(Place::finite(1), NotPrime);
}
