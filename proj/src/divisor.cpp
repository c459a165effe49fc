#include "arithdyn/divisor.hpp"

#include <algorithm>
#include <numeric>

#include "arithdyn/errors.hpp"
#include "arithdyn/factor.hpp"

namespace arithdyn {

namespace {

int strength(Irreducibility s) {
  switch (s) {
    case Irreducibility::VerifiedLinear:
    case Irreducibility::VerifiedNoLinearFactor: return 3;
    case Irreducibility::AssertedByUser: return 2;
    case Irreducibility::Unverified: return 1;
  }
  return 0;
}

Irreducibility stronger(Irreducibility a, Irreducibility b) { return strength(a) >= strength(b) ? a : b; }

// Calls fn(indices) for every size-k subset of {0..n-1} in lex order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Divisor::Divisor(RingPtr ring, std::vector<DivisorComponent> components) : ring_(std::move(ring)) {
  for (auto& c : components) {
    if (c.form.is_zero()) throw ZeroFormError("divisor component is the zero form");
    if (!same_ring(c.form.ring(), ring_)) throw RingMismatch("divisor component in another ring");
    if (c.multiplicity == 0 || c.form.degree() == 0) continue;
    HomogeneousForm f = c.form.canonical();
    auto it = std::find_if(components_.begin(), components_.end(),
                           [&](const DivisorComponent& d) { return d.form == f; });
    if (it == components_.end()) {
      components_.push_back({std::move(f), c.multiplicity, c.status});
    } else {
      it->multiplicity += c.multiplicity;
      it->status = stronger(it->status, c.status);
    }
  }
  std::sort(components_.begin(), components_.end(),
            [](const DivisorComponent& a, const DivisorComponent& b) { return canonical_less(a.form, b.form); });
  if (degree() == 0) throw DegreeMismatch("a divisor must have positive degree");
}

unsigned long Divisor::degree() const {
  unsigned long d = 0;
  for (const auto& c : components_) d += c.multiplicity * c.form.degree();
  return d;
}

bool Divisor::has_unverified() const {
  return std::any_of(components_.begin(), components_.end(),
                     [](const DivisorComponent& c) { return c.status == Irreducibility::Unverified; });
}

bool operator==(const Divisor& a, const Divisor& b) {
  if (a.components_.size() != b.components_.size()) return false;
  for (std::size_t i = 0; i < a.components_.size(); ++i)
    if (!(a.components_[i].form == b.components_[i].form) ||
        a.components_[i].multiplicity != b.components_[i].multiplicity)
      return false;
  return true;
}

std::string to_string(const Divisor& d) {
  std::string out;
  for (const auto& c : d.components()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c.form) + ")^" + std::to_string(c.multiplicity);
  }
  return out;
}

HomogeneousForm defining_form(const Divisor& d) {
  HomogeneousForm f = HomogeneousForm::constant(d.ring(), 1);
  for (const auto& c : d.components()) f = multiply(f, power(c.form, static_cast<unsigned>(c.multiplicity)));
  return f;
}

void FactorBasis::add(const HomogeneousForm& form, Irreducibility status) {
  if (form.is_zero() || form.degree() == 0) return;
  HomogeneousForm f = form.canonical();
  for (auto& e : entries_)
    if (e.form == f) {
      e.status = stronger(e.status, status);
      return;
    }
  entries_.push_back({std::move(f), status});
}

std::vector<DivisorComponent> factor_form(const HomogeneousForm& g, const FactorBasis& basis,
                                          Irreducibility leftover_status) {
  if (g.is_zero()) throw ZeroFormError("factor_form of zero");
  std::vector<DivisorComponent> out;
  HomogeneousForm rem = g.canonical();
  for (const auto& entry : basis.entries()) {
    unsigned long mult = 0;
    while (rem.degree() >= entry.form.degree()) {
      auto q = try_divide(rem, entry.form);
      if (!q) break;
      rem = std::move(*q);
      ++mult;
    }
    if (mult) out.push_back({entry.form, mult, entry.status});
  }
  if (rem.degree() == 0) return out;
  for (const auto& [piece, e] : squarefree_decomposition(rem).factors) {
    const auto lin = extract_linear_factors(piece);
    for (const auto& l : lin.linear_factors) out.push_back({l, e, Irreducibility::VerifiedLinear});
    if (lin.remainder.degree() == 0) continue;
    const unsigned d = lin.remainder.degree();
    const Irreducibility s =
        lin.complete && (d == 2 || d == 3) ? Irreducibility::VerifiedNoLinearFactor : leftover_status;
    out.push_back({lin.remainder, e, s});
  }
  return out;
}

Divisor user_divisor(const RingPtr& ring, const std::vector<std::pair<HomogeneousForm, unsigned long>>& parts) {
  std::vector<DivisorComponent> comps;
  const FactorBasis empty;
  for (const auto& [form, mult] : parts) {
    if (form.is_zero()) throw ZeroFormError("divisor component is the zero form");
    for (auto c : factor_form(form, empty, Irreducibility::AssertedByUser)) {
      c.multiplicity *= mult;
      comps.push_back(std::move(c));
    }
  }
  return Divisor(ring, std::move(comps));
}

void add_user_basis(FactorBasis& basis, const HomogeneousForm& form) {
  for (const auto& c : factor_form(form, FactorBasis{}, Irreducibility::AssertedByUser)) basis.add(c.form, c.status);
}

Divisor pullback(const SelfMap& f, const Divisor& d, unsigned n, FactorBasis& basis) {
  if (!f.is_certified()) throw NotCertified("pullback requires a certified morphism");
  if (!same_ring(f.ring(), d.ring())) throw RingMismatch("map and divisor live in different rings");
  if (n == 0) throw InvalidArgument("pullback depth must be positive");
  for (const auto& c : d.components()) basis.add(c.form, c.status);
  Divisor current = d;
  for (unsigned step = 0; step < n; ++step) {
    std::vector<DivisorComponent> comps;
    for (const auto& c : current.components()) {
      const HomogeneousForm pulled = compose(c.form, f.components());
      for (auto piece : factor_form(pulled, basis)) {
        basis.add(piece.form, piece.status);
        piece.multiplicity *= c.multiplicity;
        comps.push_back(std::move(piece));
      }
    }
    Divisor next(d.ring(), std::move(comps));
    if (next.degree() != current.degree() * f.degree())
      throw DegreeMismatch("pullback degree " + std::to_string(next.degree()) + " != " +
                           std::to_string(current.degree() * f.degree()));
    current = std::move(next);
  }
  return current;
}

PiSelection reduced_pi_part(const Divisor& d, const RandomConfig& rng) {
  const auto& comps = d.components();
  for (const auto& c : comps)
    if (c.status == Irreducibility::Unverified)
      throw UnverifiedComponent("component (" + to_string(c.form) + ") is not known to be irreducible");
  if (comps.size() > 30) throw OverflowGuard("too many components for subset enumeration");
  std::vector<HomogeneousForm> forms;
  for (const auto& c : comps) forms.push_back(c.form);
  IntersectionOracle oracle(forms, rng);

  std::vector<std::vector<std::size_t>> candidates;
  for (std::size_t s = comps.size(); s >= 1 && candidates.empty(); --s) {
    for_each_subset(comps.size(), s, [&](const std::vector<std::size_t>& sub) {
      if (oracle.check(sub).verdict == Verdict::Proper) candidates.push_back(sub);
    });
  }
  auto total_degree = [&](const std::vector<std::size_t>& sub) {
    unsigned long t = 0;
    for (auto i : sub) t += comps[i].form.degree();
    return t;
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (total_degree(candidates[i]) > total_degree(candidates[best])) best = i;

  std::vector<DivisorComponent> chosen;
  for (auto i : candidates[best]) chosen.push_back({comps[i].form, 1, comps[i].status});
  PiSelection out{Divisor(d.ring(), std::move(chosen)), candidates, best, oracle.check(candidates[best])};
  return out;
}

}  // namespace arithdyn
