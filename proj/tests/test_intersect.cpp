#include "doctest.h"

#include "arithdyn/errors.hpp"
#include "arithdyn/intersect.hpp"
#include "support.hpp"

using namespace arithdyn;
using namespace testsupport;

namespace {

HomogeneousForm line(const RingPtr& R, const std::vector<long>& a) {
  Polynomial p(3);
  for (std::size_t j = 0; j < 3; ++j) {
    Exponents e(3, 0);
    e[j] = 1;
    p += Polynomial::monomial(e, Integer(a[j]));
  }
  return HomogeneousForm(R, p);
}

}  // namespace

TEST_CASE("emptiness on constructed systems") {
  const auto R = p2();
  std::vector<HomogeneousForm> powers{form("x^2", R), form("y^3", R), form("z^2", R)};
  CHECK(empty_common_zero(powers).verdict == ZeroLocus::Empty);
  // Triangular systems have no common zero.
  std::vector<HomogeneousForm> tri{form("x^2 + y^2", R), form("y^2 + x*z", R), form("z^3 + x^2*y", R)};
  CHECK(empty_common_zero(tri).verdict == ZeroLocus::Empty);
  // Planted common zero [1 : 1 : 1].
  std::vector<HomogeneousForm> planted{form("x - y", R), form("y^2 - z^2", R), form("x*z - y^2", R)};
  const auto r = empty_common_zero(planted);
  CHECK(r.verdict == ZeroLocus::PossiblyNonempty);
  CHECK(r.exact);
  std::vector<HomogeneousForm> two{form("x", R), form("y", R)};
  CHECK(empty_common_zero(two).verdict == ZeroLocus::PossiblyNonempty);
}

TEST_CASE("forms with a planted common zero are never declared empty") {
  std::mt19937_64 rng(31);
  const auto R = p2();
  for (int t = 0; t < 40; ++t) {
    const ProjPoint p = random_point(rng, 3, 5);
    std::vector<long> pc;
    for (const auto& c : p.coords()) pc.push_back(c.get_si());
    // a line through p: p x r for random r
    auto through_p = [&]() {
      const std::vector<long> r{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)};
      return line(R, {pc[1] * r[2] - pc[2] * r[1], pc[2] * r[0] - pc[0] * r[2], pc[0] * r[1] - pc[1] * r[0]});
    };
    std::vector<HomogeneousForm> forms;
    while (forms.size() < 3) {
      const unsigned d = static_cast<unsigned>(uniform(rng, 1, 3));
      HomogeneousForm l1 = through_p(), l2 = through_p();
      if (l1.is_zero() || l2.is_zero()) continue;
      HomogeneousForm f = d == 1 ? l1
                                 : add(multiply(l1, random_form(rng, R, d - 1, 6)),
                                       multiply(l2, random_form(rng, R, d - 1, 6)));
      if (f.is_zero()) continue;
      REQUIRE(evaluate(f, p.coords()) == 0);
      forms.push_back(f);
    }
    CHECK(empty_common_zero(forms).verdict == ZeroLocus::PossiblyNonempty);
  }
}

TEST_CASE("random dense forms almost never share a zero") {
  std::mt19937_64 rng(37);
  const auto R = p2();
  int empty = 0;
  for (int t = 0; t < 20; ++t) {
    std::vector<HomogeneousForm> forms;
    for (int i = 0; i < 3; ++i) forms.push_back(random_form(rng, R, static_cast<unsigned>(uniform(rng, 1, 3)), 20));
    empty += empty_common_zero(forms).verdict == ZeroLocus::Empty;
  }
  CHECK(empty >= 18);
}

TEST_CASE("exact rank") {
  std::vector<std::vector<Integer>> m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(exact_rank(m) == 2);
  std::vector<std::vector<Integer>> id{{1, 0}, {0, 1}};
  CHECK(exact_rank(id) == 2);
}

TEST_CASE("line arrangements agree with the concurrency oracle") {
  std::mt19937_64 rng(41);
  const auto R = p2();
  for (int t = 0; t < 80; ++t) {
    std::vector<std::vector<long>> coeffs;
    std::vector<HomogeneousForm> lines;
    while (coeffs.size() < 4) {
      std::vector<long> a{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)};
      if (a == std::vector<long>{0, 0, 0}) continue;
      const auto l = line(R, a).canonical();
      if (std::any_of(lines.begin(), lines.end(), [&](const auto& g) { return g == l; })) continue;
      coeffs.push_back(a);
      lines.push_back(l);
    }
    bool proper = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        for (std::size_t k = j + 1; k < 4; ++k) proper = proper && !concurrent(coeffs[i], coeffs[j], coeffs[k]);
    std::vector<Irreducibility> status(4, Irreducibility::VerifiedLinear);
    const auto rep = properly_intersect(lines, status);
    CHECK((rep.verdict == Verdict::Proper) == proper);
    if (!proper) CHECK(rep.failing_subset.has_value());
  }
}

TEST_CASE("proper intersection policies") {
  const auto R = p2();
  std::vector<HomogeneousForm> f{form("x", R), form("y", R), form("x+y", R)};
  std::vector<Irreducibility> unknown(3, Irreducibility::Unverified);
  CHECK_THROWS_AS(properly_intersect(f, unknown), UnverifiedIrreducibility);
  std::vector<Irreducibility> ok(3, Irreducibility::AssertedByUser);
  const auto rep = properly_intersect(f, ok);
  CHECK(rep.verdict == Verdict::Improper);
  CHECK(*rep.failing_subset == std::vector<std::size_t>{0, 1, 2});
  std::vector<HomogeneousForm> g{form("x", R), form("x", R)};
  std::vector<Irreducibility> two(2, Irreducibility::VerifiedLinear);
  CHECK(properly_intersect(g, two).verdict == Verdict::Improper);
}

TEST_CASE("three-space: cutting down for codimension checks") {
  const auto R = make_ring({"w", "x", "y", "z"});
  std::vector<HomogeneousForm> f{parse_form("w", R), parse_form("x", R), parse_form("y", R), parse_form("z", R)};
  std::vector<Irreducibility> s(4, Irreducibility::VerifiedLinear);
  CHECK(properly_intersect(f, s).verdict == Verdict::Proper);
  std::vector<HomogeneousForm> g{parse_form("w", R), parse_form("x", R), parse_form("w+x", R)};
  std::vector<Irreducibility> s3(3, Irreducibility::VerifiedLinear);
  CHECK(properly_intersect(g, s3).verdict == Verdict::Improper);
}
