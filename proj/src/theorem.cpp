#include "arithdyn/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "arithdyn/errors.hpp"

namespace arithdyn {

CnReport compute_cn(const SelfMap& f, const Divisor& d, unsigned n, FactorBasis& basis, const RandomConfig& rng) {
  const DynamicalDegree delta = dynamical_degree(f);
  if (delta.value <= 1) throw DeltaNotGreaterThanOne("the dynamical degree is " + std::to_string(delta.value));
  Divisor pulled = pullback(f, d, n, basis);
  PiSelection selection = reduced_pi_part(pulled, rng);

  std::vector<unsigned long> m_i;
  for (const auto& c : selection.part.components()) m_i.push_back(c.form.degree());
  std::vector<std::vector<std::size_t>> ambiguity;
  for (std::size_t i = 0; i < selection.candidates.size(); ++i)
    if (i != selection.chosen) ambiguity.push_back(selection.candidates[i]);

  CnReport r{n, delta.value, d.degree(), f.ring()->dimension(), std::move(pulled), std::move(selection),
             std::move(m_i), 0, Rational(0), false, std::move(ambiguity)};
  r.gamma = *std::max_element(r.m_i.begin(), r.m_i.end()) * (r.dimension + 1);
  r.c_n = recompute_cn(r);
  r.inconclusive = r.c_n <= 0;
  return r;
}

Rational recompute_cn(const CnReport& r) {
  const unsigned long gamma = *std::max_element(r.m_i.begin(), r.m_i.end()) * (r.dimension + 1);
  const unsigned long sum = std::accumulate(r.m_i.begin(), r.m_i.end(), 0UL);
  Rational c(Integer(static_cast<long>(sum)) - Integer(gamma),
             pow(Integer(r.delta_f), r.n) * pow(Integer(r.mu), r.n));
  c.canonicalize();
  return c;
}

DegreeIdentity degree_identity(const CnReport& r) {
  const long sum = static_cast<long>(std::accumulate(r.m_i.begin(), r.m_i.end(), 0UL));
  const Integer scale = pow(Integer(r.delta_f), r.n) * pow(Integer(r.mu), r.n);
  return {static_cast<long>(r.pullback.degree()) - static_cast<long>(r.selection.part.degree()),
          scale.get_si() - sum};
}

const char* to_string(FlagState s) {
  switch (s) {
    case FlagState::Yes: return "yes";
    case FlagState::No: return "no";
    case FlagState::OnDivisor: return "on-divisor";
    case FlagState::HeightZero: return "height-zero";
  }
  return "?";
}

OrbitScan orbit_scan(const SelfMap& f, const Divisor& d, const ProjPoint& x0, const Rational& c_n,
                     const OrbitScanOptions& options) {
  if (options.epsilon <= 0) throw InvalidArgument("epsilon must be positive");
  if (options.integral_tol < 0 || options.integral_tol > 1) throw InvalidArgument("integral_tol must lie in [0, 1]");
  const Orbit orb = orbit(f, x0, options.kmax, options.bit_budget);
  OrbitScan scan;
  scan.threshold = c_n - options.epsilon;
  scan.mu = d.degree();
  scan.cycle = orb.cycle;
  const Rational mu(static_cast<long>(scan.mu));
  for (std::size_t k = 0; k < orb.points.size(); ++k) {
    OrbitRecord rec;
    rec.k = k;
    rec.point = orb.points[k];
    rec.height = height(rec.point);
    if (on_support(d, rec.point)) {
      rec.flag = FlagState::OnDivisor;
    } else {
      rec.proximity = proximity(d, rec.point, options.places);
      rec.counting = height_of_divisor_class(d, rec.point) - *rec.proximity;
      if (rec.height.is_zero()) {
        rec.flag = FlagState::HeightZero;
      } else {
        const ExactLog bound = rec.height.scaled(scan.threshold * mu);
        rec.flag = compare(*rec.counting, bound, options.policy) <= 0 ? FlagState::Yes : FlagState::No;
        const ExactLog floor = rec.height.scaled((1 - options.integral_tol) * mu);
        rec.integral_candidate = compare(*rec.proximity, floor, options.policy) >= 0;
      }
    }
    if (rec.flag == FlagState::Yes) scan.flagged.push_back(k);
    if (rec.integral_candidate) scan.integral_candidates.push_back(k);
    scan.records.push_back(std::move(rec));
  }
  return scan;
}

Rational beta(unsigned long d, std::size_t dimension) {
  if (d == 0 || dimension == 0) throw InvalidArgument("beta needs d >= 1 and N >= 1");
  Rational b(1, Integer(d) * Integer(static_cast<unsigned long>(dimension + 1)));
  b.canonicalize();
  return b;
}

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

Rational beta_oracle(unsigned long d, std::size_t dimension, unsigned long m) {
  if (d == 0 || m == 0) throw InvalidArgument("beta_oracle needs d >= 1 and m >= 1");
  Integer num = 0;
  for (unsigned long l = 1; l * d <= m; ++l) num += binomial(m - l * d + dimension, dimension);
  Rational r(num, Integer(m) * binomial(m + dimension, dimension));
  r.canonicalize();
  return r;
}

BetaReport beta_report(unsigned long d, std::size_t dimension, const std::vector<unsigned long>& ms) {
  BetaReport out{d, dimension, beta(d, dimension), {}};
  for (auto m : ms) out.discrete.emplace_back(m, beta_oracle(d, dimension, m));
  return out;
}

namespace {

using i128 = __int128;

// A form flattened for fast evaluation on small points.
struct FastForm {
  std::vector<std::pair<std::vector<std::uint32_t>, long long>> terms;
  unsigned degree = 0;
};

i128 eval_fast(const FastForm& f, const std::vector<long long>& x) {
  i128 total = 0;
  for (const auto& [e, c] : f.terms) {
    i128 t = c;
    for (std::size_t j = 0; j < x.size(); ++j)
      for (std::uint32_t k = 0; k < e[j]; ++k) t *= x[j];
    total += t;
  }
  return total;
}

double log_abs(i128 v) {
  if (v < 0) v = -v;
  return std::log(static_cast<long double>(v));
}

unsigned valuation(i128 v, long long p) {
  unsigned e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

Integer coefficient_sum(const HomogeneousForm& f) {
  Integer s = 0;
  for (const auto& [e, c] : f.poly().terms()) s += abs(c);
  return s;
}

std::vector<Integer> cross(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<Integer> linear_coefficients(const HomogeneousForm& f) {
  std::vector<Integer> out(3, 0);
  for (const auto& [e, c] : f.poly().terms())
    for (std::size_t j = 0; j < 3; ++j)
      if (e[j] == 1) out[j] = c;
  return out;
}

std::vector<HomogeneousForm> family_lines(const RingPtr& ring, const std::vector<HomogeneousForm>& divisors) {
  std::vector<std::vector<Integer>> lines;
  for (const auto& f : divisors)
    if (f.degree() == 1) lines.push_back(linear_coefficients(f));
  std::vector<ProjPoint> points;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto p = cross(lines[i], lines[j]);
      if (std::all_of(p.begin(), p.end(), [](const Integer& v) { return v == 0; })) continue;
      ProjPoint q = normalize(std::span<const Integer>(p));
      if (std::find(points.begin(), points.end(), q) == points.end()) points.push_back(std::move(q));
    }
  std::vector<HomogeneousForm> out;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const auto l = cross(points[a].coords(), points[b].coords());
      Polynomial poly(3);
      for (std::size_t j = 0; j < 3; ++j)
        if (l[j] != 0) poly += Polynomial::monomial(Exponents{j == 0, j == 1, j == 2}, l[j]);
      HomogeneousForm line = HomogeneousForm(ring, poly).canonical();
      const bool known = std::any_of(out.begin(), out.end(), [&](const auto& g) { return g == line; }) ||
                         std::any_of(divisors.begin(), divisors.end(),
                                     [&](const auto& g) { return g.canonical() == line; });
      if (!known) out.push_back(std::move(line));
    }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

RvReport rv_check(const RingPtr& ring, const std::vector<HomogeneousForm>& divisors, const RvOptions& options) {
  RvReport report;
  report.dimension = ring->dimension();
  report.bound = options.bound;
  report.epsilon = options.epsilon;
  if (divisors.empty()) {
    report.vacuous = true;
    return report;
  }
  if (options.bound < 1) throw InvalidArgument("height bound must be positive");
  if (options.bound > 1'000'000) throw OverflowGuard("height bound too large for enumeration");

  std::vector<HomogeneousForm> forms;
  Integer max_sum = 1;
  for (const auto& f : divisors) {
    if (f.is_zero() || f.degree() == 0) throw ZeroFormError("rv_check needs positive-degree forms");
    if (!same_ring(f.ring(), ring)) throw RingMismatch("divisor in another ring");
    forms.push_back(f.canonical());
    max_sum = std::max(max_sum, coefficient_sum(forms.back()));
  }
  report.slack = options.slack ? *options.slack : ExactLog::of(max_sum);
  if (report.slack < ExactLog()) throw InvalidArgument("the slack constant must be nonnegative");
  if (report.dimension == 2) report.family = family_lines(ring, forms);

  // Fast evaluation is safe when sum |c| * bound^d stays below 2^100.
  std::vector<FastForm> fast;
  for (const auto& f : forms) {
    const Integer worst = coefficient_sum(f) * pow(Integer(options.bound), f.degree());
    if (bit_length(worst) > 100) throw OverflowGuard("form values too large for enumeration");
    FastForm ff;
    ff.degree = f.degree();
    for (const auto& [e, c] : f.poly().terms()) ff.terms.emplace_back(e, c.get_si());
    fast.push_back(std::move(ff));
  }
  std::vector<FastForm> family_fast;
  for (const auto& l : report.family) {
    FastForm ff;
    for (const auto& [e, c] : l.poly().terms()) ff.terms.emplace_back(e, c.get_si());
    family_fast.push_back(std::move(ff));
  }

  bool infinite_in_s = false;
  std::vector<long long> primes;
  std::vector<double> log_primes;
  for (const auto& v : options.places) {
    if (v.is_infinite()) {
      infinite_in_s = true;
    } else {
      if (!v.prime().fits_slong_p()) throw OverflowGuard("prime too large for enumeration");
      primes.push_back(v.prime().get_si());
      log_primes.push_back(std::log(static_cast<double>(primes.back())));
    }
  }

  const std::size_t nv = ring->num_vars();
  const double eps = options.epsilon.get_d();
  const double slack = report.slack.approx();
  const Rational n_plus_1(static_cast<long>(nv));
  const double margin = 1e-7;

  auto exact_excess = [&](const ProjPoint& x) {
    ExactLog total;
    for (std::size_t i = 0; i < forms.size(); ++i)
      total += proximity(Divisor(ring, {{forms[i], 1, Irreducibility::AssertedByUser}}), x, options.places)
                   .scaled(Rational(1, forms[i].degree()));
    return total - height(x).scaled(n_plus_1);
  };
  // sign of excess - eps h - c, exact when the double is inconclusive
  auto violates = [&](double approx, const ProjPoint& x, const ExactLog& c) {
    if (approx > margin) return true;
    if (approx < -margin) return false;
    return compare(exact_excess(x), height(x).scaled(options.epsilon) + c, options.policy) > 0;
  };
  auto family_index = [&](const std::vector<long long>& x) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < family_fast.size(); ++i)
      if (eval_fast(family_fast[i], x) == 0) return i;
    return std::nullopt;
  };

  const long long b = options.bound;
  std::vector<long long> x(nv, -b);
  x[0] = 0;
  double best = -INFINITY;
  std::vector<i128> values(forms.size());
  for (;;) {
    // first nonzero coordinate positive, coordinates coprime
    long long g = 0;
    std::size_t lead = nv;
    for (std::size_t j = 0; j < nv; ++j) {
      if (lead == nv && x[j] != 0) lead = j;
      g = std::gcd(g, x[j]);
    }
    if (lead < nv && x[lead] > 0 && g == 1) {
      ++report.points_checked;
      long long m = 0;
      for (auto c : x) m = std::max(m, c < 0 ? -c : c);
      bool on = false;
      for (std::size_t i = 0; i < fast.size() && !on; ++i) {
        values[i] = eval_fast(fast[i], x);
        on = values[i] == 0;
      }
      if (on) {
        ++report.points_on_divisors;
      } else {
        const double h = std::log(static_cast<double>(m));
        double e = -static_cast<double>(nv) * h;
        for (std::size_t i = 0; i < fast.size(); ++i) {
          double lam = 0;
          if (infinite_in_s) lam += fast[i].degree * h - static_cast<double>(log_abs(values[i]));
          for (std::size_t p = 0; p < primes.size(); ++p) lam += valuation(values[i], primes[p]) * log_primes[p];
          e += lam / fast[i].degree;
        }
        std::optional<ProjPoint> point;
        auto exact_point = [&]() -> const ProjPoint& {
          if (!point) {
            std::vector<Integer> coords;
            for (auto c : x) coords.emplace_back(static_cast<long>(c));
            point = ProjPoint(std::move(coords));
          }
          return *point;
        };
        if (e > best - margin) {
          const ExactLog ex = exact_excess(exact_point());
          if (!report.max_excess || compare(ex, *report.max_excess, options.policy) > 0) {
            report.max_excess = ex;
            report.argmax = exact_point();
          }
          best = std::max(best, e);
        }
        const double gap = e - eps * h;
        if (violates(gap, exact_point(), ExactLog())) {
          const auto fam = family_index(x);
          if (fam) {
            ++report.zero_slack_on_family;
          } else {
            ++report.zero_slack_off_family;
            if (report.zero_slack_off_family_points.size() < options.keep)
              report.zero_slack_off_family_points.push_back({exact_point(), exact_excess(exact_point()), fam});
          }
          if (violates(gap - slack, exact_point(), report.slack)) {
            ++report.violations;
            if (report.violators.size() < options.keep)
              report.violators.push_back({exact_point(), exact_excess(exact_point()), fam});
          }
        }
      }
    }
    std::size_t j = nv;
    while (j > 0 && x[j - 1] == b) x[--j] = -b;
    if (j == 0) break;
    ++x[j - 1];
  }
  return report;
}

}  // namespace arithdyn
