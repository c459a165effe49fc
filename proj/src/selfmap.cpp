#include "arithdyn/selfmap.hpp"

#include <algorithm>
#include <map>

#include "arithdyn/errors.hpp"

namespace arithdyn {

SelfMap::SelfMap(std::vector<HomogeneousForm> components) : components_(std::move(components)) {
  if (components_.empty()) throw ArityMismatch("a self-map needs components");
  const RingPtr& ring = components_.front().ring();
  if (components_.size() != ring->num_vars())
    throw ArityMismatch("P^" + std::to_string(ring->dimension()) + " needs " +
                        std::to_string(ring->num_vars()) + " components");
  for (const auto& c : components_) {
    if (!same_ring(c.ring(), ring)) throw RingMismatch("map components in different rings");
    if (c.is_zero()) throw ZeroFormError("map component is zero");
  }
  degree_ = components_.front().degree();
  for (const auto& c : components_)
    if (c.degree() != degree_) throw DegreeMismatch("map components have different degrees");
  if (degree_ == 0) throw DegreeMismatch("constant map");
  if (!coprime(components_)) throw CommonFactor("map components share a common factor");
}

SelfMap SelfMap::with_certificate(MorphismCertificate cert) const {
  SelfMap copy = *this;
  copy.certificate_ = cert;
  return copy;
}

MorphismCertificate check_morphism(const SelfMap& f) {
  const auto r = empty_common_zero(f.components());
  MorphismCertificate cert;
  cert.certified = r.verdict == ZeroLocus::Empty;
  cert.degree_bound = r.degree_bound;
  cert.rows = r.rows;
  cert.columns = r.columns;
  cert.rank = r.rank;
  return cert;
}

SelfMap certify(const SelfMap& f) { return f.with_certificate(check_morphism(f)); }

namespace {

// C(a, b) as a double, enough for a budget estimate.
double binomial(double a, double b) {
  double r = 1;
  for (double i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

SelfMap iterate_symbolic(const SelfMap& f, unsigned n, std::size_t term_budget) {
  if (n == 0) throw InvalidArgument("iterate_symbolic: n must be positive");
  const double dim = static_cast<double>(f.ring()->dimension());
  double deg = 1;
  for (unsigned i = 0; i < n; ++i) deg *= f.degree();
  if (binomial(deg + dim, dim) > static_cast<double>(term_budget))
    throw OverflowGuard("f^(" + std::to_string(n) + ") components may exceed the term budget");
  SelfMap current = f;
  for (unsigned i = 1; i < n; ++i) {
    std::vector<HomogeneousForm> next;
    next.reserve(f.components().size());
    for (const auto& c : f.components()) next.push_back(compose(c, current.components()));
    current = SelfMap(std::move(next));
  }
  if (f.is_certified()) current = current.with_certificate(*f.certificate());
  return current;
}

ProjPoint apply(const SelfMap& f, const ProjPoint& x) {
  if (x.size() != f.ring()->num_vars()) throw ArityMismatch("point has the wrong number of coordinates");
  std::vector<Integer> image;
  image.reserve(x.size());
  for (const auto& c : f.components()) image.push_back(evaluate(c, x.coords()));
  if (std::all_of(image.begin(), image.end(), [](const Integer& v) { return v == 0; }))
    throw NotCertified("map components vanish simultaneously at " + to_string(x));
  return normalize(std::span<const Integer>(image));
}

Orbit orbit(const SelfMap& f, const ProjPoint& x0, std::size_t steps, std::size_t bit_budget) {
  if (!f.is_certified()) throw NotCertified("orbit requires a certified morphism");
  Orbit out;
  std::map<ProjPoint, std::size_t> seen;
  out.points.push_back(x0);
  seen.emplace(x0, 0);
  for (std::size_t k = 1; k <= steps; ++k) {
    ProjPoint next = apply(f, out.points.back());
    for (const auto& c : next.coords())
      if (bit_length(c) > bit_budget)
        throw SizeBudgetExceeded("orbit step " + std::to_string(k) + " exceeds " + std::to_string(bit_budget) +
                                 " bits per coordinate");
    if (!out.cycle) {
      auto [it, inserted] = seen.emplace(next, k);
      if (!inserted) out.cycle = std::make_pair(it->second, k);
    }
    out.points.push_back(std::move(next));
  }
  return out;
}

DynamicalDegree dynamical_degree(const SelfMap& f) {
  if (!f.is_certified()) throw NotCertified("dynamical degree requires a certified morphism");
  return {f.degree(), f.degree() == 1};
}

}  // namespace arithdyn
