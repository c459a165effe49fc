// Acceptance suite: one line per criterion, nonzero exit if any fails.
// usage: acceptance <fixture directory>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "arithdyn/errors.hpp"
#include "arithdyn/factor.hpp"
#include "arithdyn/heights.hpp"
#include "arithdyn/intersect.hpp"
#include "arithdyn/problem.hpp"
#include "arithdyn/theorem.hpp"

using namespace arithdyn;

namespace {

std::string fixtures;

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

Problem fixture(const std::string& name) { return load_problem(fixtures + "/" + name); }

// v_p(n) by repeated division; independent of the library's valuation.
unsigned long trial_valuation(Integer n, const Integer& p) {
  unsigned long e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

// Full factorization by trial division, for small values only.
std::vector<std::pair<Integer, unsigned long>> trial_factor(Integer n) {
  std::vector<std::pair<Integer, unsigned long>> out;
  n = abs(n);
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    const unsigned long e = trial_valuation(n, p);
    n /= pow(p, e);
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// ---------------------------------------------------------------------------

void example_one() {
  const Problem p = fixture("example1.prob");
  const SelfMap f = certify(p.self_map());
  require(f.is_certified(), "map not certified");
  const Divisor d = p.user_divisor();
  FactorBasis b1;
  const std::string n1 = to_string(pullback(f, d, 1, b1));
  require(n1 == "(y)^1 + (z)^3", "n=1 pullback is " + n1);
  FactorBasis b2;
  const CnReport r = compute_cn(f, d, 2, b2);
  require(to_string(r.pullback) == "(x)^3 + (x+y+z)^1 + (y)^3 + (z)^9", "n=2 pullback is " + to_string(r.pullback));
  require(to_string(r.selection.part) == "(x)^1 + (x+y+z)^1 + (y)^1 + (z)^1",
          "reduced part is " + to_string(r.selection.part));
  require(r.delta_f == 4, "delta_f = " + std::to_string(r.delta_f));
  require(r.c_n == Rational(1, 16), "c_2 = " + r.c_n.get_str());
}

void example_two() {
  const Problem p = fixture("example2.prob");
  const SelfMap f = certify(p.self_map());
  require(f.is_certified(), "map not certified");
  require(p.basis.size() == 4, "fixture must declare four quadrics");
  std::vector<HomogeneousForm> quads;
  for (const auto& q : p.basis) {
    require(q.degree() == 2, "basis form of degree " + std::to_string(q.degree()));
    const LinearExtraction ex = extract_linear_factors(q);
    require(ex.complete && ex.linear_factors.empty(), "(" + to_string(q) + ") has a linear factor");
    quads.push_back(q.canonical());
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) require(!(quads[i] == quads[j]), "proportional quadrics");
  const std::vector<Irreducibility> status(4, Irreducibility::VerifiedNoLinearFactor);
  const IntersectionReport ir = properly_intersect(quads, status);
  require(ir.verdict == Verdict::Proper && !ir.probabilistic, "quadrics do not provably intersect properly");

  FactorBasis b = p.factor_basis();
  const CnReport r = compute_cn(f, p.user_divisor(), 2, b);
  std::vector<DivisorComponent> twice, once;
  for (const auto& q : quads) {
    twice.push_back({q, 2, Irreducibility::VerifiedNoLinearFactor});
    once.push_back({q, 1, Irreducibility::VerifiedNoLinearFactor});
  }
  require(r.pullback == Divisor(p.ring, twice), "n=2 pullback is " + to_string(r.pullback));
  require(r.selection.part == Divisor(p.ring, once), "reduced part is " + to_string(r.selection.part));
  require(r.c_n == Rational(1, 8), "c_2 = " + r.c_n.get_str());
}

void height_decomposition() {
  std::mt19937_64 rng(20240601);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const RingPtr R = make_ring({"x", "y", "z"});
  const std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  int done = 0;
  while (done < 10000) {
    // random effective divisor of degree <= 6
    std::vector<DivisorComponent> comps;
    unsigned total = 0;
    const unsigned target = static_cast<unsigned>(uniform(1, 6));
    while (total < target) {
      const unsigned deg = static_cast<unsigned>(uniform(1, std::min<long>(3, target - total)));
      const unsigned long mult = static_cast<unsigned long>(uniform(1, (target - total) / deg));
      Polynomial poly(3);
      for (unsigned a = 0; a <= deg; ++a)
        for (unsigned b = 0; a + b <= deg; ++b)
          poly += Polynomial::monomial({a, b, deg - a - b}, Integer(uniform(-9, 9)));
      if (poly.is_zero()) continue;
      comps.push_back({HomogeneousForm(R, poly), mult, Irreducibility::AssertedByUser});
      total += deg * static_cast<unsigned>(mult);
    }
    const Divisor d(R, comps);
    std::vector<Integer> coords;
    for (int j = 0; j < 3; ++j) coords.emplace_back(uniform(-1000000, 1000000));
    if (coords[0] == 0 && coords[1] == 0 && coords[2] == 0) continue;
    const ProjPoint x(coords);
    if (on_support(d, x)) continue;
    PlaceSet s;
    if (uniform(0, 1)) s.insert(Place::infinite());
    const long k = uniform(0, 5);
    while (static_cast<long>(s.size() - s.count(Place::infinite())) < k)
      s.insert(Place::finite(primes[static_cast<std::size_t>(uniform(0, static_cast<long>(primes.size()) - 1))]));

    // Independent route: proximity from valuations, counting from the
    // prime-to-S part of F(x) and the archimedean term when inf is not in S.
    Rational m_arg = 1, n_arg = 1;
    const Integer mx = x.max_abs();
    for (const auto& c : d.components()) {
      const Integer v = evaluate(c.form, x.coords());
      Rational arch(pow(mx, c.form.degree()), abs(v));
      arch.canonicalize();
      Integer away = abs(v);
      Rational m_here = 1;
      for (const auto& pl : s) {
        if (pl.is_infinite()) continue;
        const unsigned long e = trial_valuation(v, pl.prime());
        m_here *= Rational(pow(pl.prime(), e));
        away /= pow(pl.prime(), e);
      }
      if (s.count(Place::infinite())) m_here *= arch;
      Rational n_here = Rational(away);
      if (!s.count(Place::infinite())) n_here *= arch;
      m_arg *= pow(m_here, static_cast<long>(c.multiplicity));
      n_arg *= pow(n_here, static_cast<long>(c.multiplicity));
    }
    const ExactLog m = proximity(d, x, s), n = counting(d, x, s), h = height_of_divisor_class(d, x);
    require(m + n == h, "library identity fails at " + to_string(x));
    require(m == ExactLog(m_arg), "proximity disagrees with valuations at " + to_string(x));
    require(n == ExactLog(n_arg), "counting disagrees with the prime-to-S part at " + to_string(x));
    require(ExactLog(m_arg * n_arg) == ExactLog::of(pow(mx, d.degree())), "oracle identity fails");
    ++done;
  }
}

void beta_check() {
  for (unsigned long d = 1; d <= 5; ++d)
    require(beta(d, 2) == Rational(1, 3 * d), "beta(" + std::to_string(d) + ", 2) = " + beta(d, 2).get_str());
  for (unsigned long d = 1; d <= 3; ++d) {
    const double err = std::abs(Rational(beta_oracle(d, 2, 300) - beta(d, 2)).get_d());
    require(err <= 0.02, "discrete ratio off by " + std::to_string(err) + " for d = " + std::to_string(d));
  }
}

void line_arrangement() {
  const RingPtr R = make_ring({"x", "y", "z"});
  const std::vector<std::vector<long>> lines{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1},
                                             {1, -1, 0}, {0, 1, -1}, {1, 1, 0}};
  std::vector<HomogeneousForm> forms;
  for (const auto& a : lines) {
    Polynomial p(3);
    for (std::uint32_t j = 0; j < 3; ++j) {
      std::vector<std::uint32_t> e(3, 0);
      e[j] = 1;
      if (a[j] != 0) p += Polynomial::monomial(e, Integer(a[j]));
    }
    forms.emplace_back(R, p);
  }
  auto concurrent = [&](std::size_t i, std::size_t j, std::size_t k) {
    // the intersection of lines i and j solves a 2x2 system; test line k there
    const auto &a = lines[i], &b = lines[j], &c = lines[k];
    const long p0 = a[1] * b[2] - a[2] * b[1], p1 = a[2] * b[0] - a[0] * b[2], p2 = a[0] * b[1] - a[1] * b[0];
    return c[0] * p0 + c[1] * p1 + c[2] * p2 == 0;
  };
  int checked = 0, improper = 0;
  for (unsigned mask = 1; mask < (1u << lines.size()); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (idx.size() > 4) continue;
    bool brute = true;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        for (std::size_t c = b + 1; c < idx.size(); ++c) brute = brute && !concurrent(idx[a], idx[b], idx[c]);
    std::vector<HomogeneousForm> sub;
    for (auto i : idx) sub.push_back(forms[i]);
    const std::vector<Irreducibility> status(sub.size(), Irreducibility::VerifiedLinear);
    const bool oracle = properly_intersect(sub, status).verdict == Verdict::Proper;
    std::ostringstream where;
    for (auto i : idx) where << " (" << to_string(forms[i]) << ")";
    require(oracle == brute, "disagreement on" + where.str());
    ++checked;
    improper += !brute;
  }
  require(checked == 98, "expected 98 subsets, saw " + std::to_string(checked));
  require(improper > 0 && improper < checked, "arrangement does not exercise both verdicts");
}

void orbit_consistency() {
  const Problem p = fixture("example1.prob");
  const SelfMap f = certify(p.self_map());
  const Divisor d = p.user_divisor();
  FactorBasis b = p.factor_basis();
  const Rational c2 = compute_cn(f, d, 2, b).c_n;
  const std::vector<Rational> eps{Rational(1, 16) * Rational(1, 2), Rational(1, 32), Rational(1, 64)};
  for (const PlaceSet& s : {PlaceSet{Place::infinite()},
                            PlaceSet{Place::infinite(), Place::finite(2), Place::finite(3)}}) {
    std::vector<std::vector<FlagState>> flags;
    for (const auto& e : eps) {
      OrbitScanOptions o;
      o.places = s;
      o.epsilon = e;
      o.kmax = 6;
      o.bit_budget = 1u << 20;
      const OrbitScan scan = orbit_scan(f, d, p.point(), c2, o);
      require(scan.records.size() == 7, "expected 7 records");
      std::vector<FlagState> fl;
      for (const auto& r : scan.records) {
        fl.push_back(r.flag);
        if (!r.proximity) continue;
        require(*r.proximity + *r.counting == r.height.scaled(Rational(static_cast<long>(scan.mu))),
                "identity fails at k = " + std::to_string(r.k));
        if (r.k > 3) continue;
        Rational arg = 1;
        for (const auto& c : d.components()) {
          const Integer v = evaluate(c.form, r.point.coords());
          Rational here = 1;
          for (const auto& [q, e] : trial_factor(v))
            if (!s.count(Place::finite(q))) here *= Rational(pow(q, e));
          if (!s.count(Place::infinite())) {
            Rational arch(pow(r.point.max_abs(), c.form.degree()), abs(v));
            arch.canonicalize();
            here *= arch;
          }
          arg *= pow(here, static_cast<long>(c.multiplicity));
        }
        require(*r.counting == ExactLog(arg), "counting disagrees with trial division at k = " + std::to_string(r.k));
      }
      flags.push_back(fl);
    }
    // eps is decreasing; a flagged point stays flagged
    for (std::size_t i = 1; i < flags.size(); ++i)
      for (std::size_t k = 0; k < flags[i].size(); ++k)
        require(flags[i - 1][k] != FlagState::Yes || flags[i][k] == FlagState::Yes,
                "flag at k = " + std::to_string(k) + " lost when epsilon shrank");
  }
}

std::string rv_detail;

void rv_boundedness() {
  const Problem p = fixture("four_lines.prob");
  std::vector<HomogeneousForm> forms;
  for (const auto& [form, mult] : *p.divisor) forms.push_back(form);
  const std::vector<Irreducibility> status(forms.size(), Irreducibility::VerifiedLinear);
  require(properly_intersect(forms, status).verdict == Verdict::Proper, "fixture lines are not in general position");
  RvOptions o;
  o.places = p.places ? *p.places : PlaceSet{Place::infinite()};
  o.epsilon = p.param_rational("epsilon", 1);
  require(o.epsilon == 1, "fixture epsilon must be 1");
  o.slack = p.param_log("slack");
  o.bound = 50;
  const RvReport small = rv_check(p.ring, forms, o);
  o.bound = 200;
  const RvReport large = rv_check(p.ring, forms, o);
  require(small.max_excess && large.max_excess, "no points enumerated");
  require(compare(*large.max_excess - *small.max_excess, large.slack) <= 0,
          "max excess grew from " + std::to_string(small.max_excess->approx()) + " to " +
              std::to_string(large.max_excess->approx()));
  require(large.zero_slack_off_family == 0,
          std::to_string(large.zero_slack_off_family) + " zero-slack violators off the candidate lines");
  std::ostringstream os;
  os << large.points_checked << " points, max excess " << large.max_excess->approx() << " at bound 200 vs "
     << small.max_excess->approx() << " at 50, zero-slack violators: " << large.zero_slack_on_family << " on "
     << large.family.size() << " candidate lines, 0 elsewhere";
  rv_detail = os.str();
}

void degree_identity_check() {
  const Problem one = fixture("example1.prob");
  FactorBasis b1 = one.factor_basis();
  const CnReport r1 = compute_cn(certify(one.self_map()), one.user_divisor(), 2, b1);
  const DegreeIdentity i1 = degree_identity(r1);
  require(i1.lhs == 12 && i1.rhs == 12, "example 1: " + std::to_string(i1.lhs) + " vs " + std::to_string(i1.rhs));
  const Problem two = fixture("example2.prob");
  FactorBasis b2 = two.factor_basis();
  const CnReport r2 = compute_cn(certify(two.self_map()), two.user_divisor(), 2, b2);
  const DegreeIdentity i2 = degree_identity(r2);
  require(i2.lhs == 8 && i2.rhs == 8, "example 2: " + std::to_string(i2.lhs) + " vs " + std::to_string(i2.rhs));
}

}  // namespace

int main(int argc, char** argv) {
  fixtures = argc > 1 ? argv[1] : "tests/fixtures";
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "degree-4 example: pullbacks, reduced part, c_2 = 1/16", 1, example_one},
      {2, "quadric example: pullback, reduced part, c_2 = 1/8", 5, example_two},
      {3, "height decomposition, 10^4 random cases, exact", 30, height_decomposition},
      {4, "beta formula and discrete ratio", 10, beta_check},
      {5, "proper intersection vs concurrency on a 7-line arrangement", 30, line_arrangement},
      {6, "orbit scan identity, trial-division counting, epsilon monotonicity", 60, orbit_consistency},
      {7, "rv-check boundedness from bound 50 to 200", 120, rv_boundedness},
      {8, "degree identity 16-4 = 12 and 16-8 = 8", 1, degree_identity_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.run();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && secs > c.limit) why = "too slow";
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, c.limit);
    std::cout << (why.empty() ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << timing << ")";
    if (!why.empty()) std::cout << ": " << why;
    if (c.id == 7 && why.empty()) std::cout << ": " << rv_detail;
    std::cout << std::endl;
    failed += !why.empty();
  }
  std::cout << (failed ? "acceptance: FAILED " + std::to_string(failed) + " of 8" : "acceptance: all 8 criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
