#include "arithdyn/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "arithdyn/errors.hpp"

namespace arithdyn {

Polynomial Polynomial::constant(std::size_t num_vars, const Integer& c) {
  Polynomial p(num_vars);
  if (c != 0) p.terms_.emplace(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents exps, const Integer& c) {
  Polynomial p(exps.size());
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_)
    best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return best;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto sum = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); };
  const unsigned d = sum(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return sum(t.first) == d; });
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return best;
}

Integer Polynomial::constant_coefficient() const {
  auto it = terms_.find(Exponents(num_vars_, 0));
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (num_vars_ == 0) num_vars_ = rhs.num_vars_;
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (num_vars_ == 0) num_vars_ = rhs.num_vars_;
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.num_vars_, b.num_vars_));
  if (a.is_zero() || b.is_zero()) return r;
  Exponents e(r.num_vars_);
  Integer prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      r.add_term(e, prod);
    }
  }
  return r;
}

Polynomial Polynomial::shifted(const Exponents& shift) const {
  Polynomial r(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponents n = e;
    for (std::size_t i = 0; i < n.size(); ++i) n[i] += shift[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(n), c);
  }
  return r;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (leading_coefficient() < 0) g = -g;
  Polynomial r = *this;
  if (g != 1)
    for (auto& [e, c] : r.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

Polynomial Polynomial::sign_normalized() const {
  if (!is_zero() && leading_coefficient() < 0) return -*this;
  return *this;
}

Integer Polynomial::evaluate(std::span<const Integer> point) const {
  if (point.size() != num_vars_)
    throw ArityMismatch("evaluate: expected " + std::to_string(num_vars_) + " coordinates");
  std::vector<std::vector<Integer>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    powers[i].push_back(1);
    const unsigned d = degree_in(i);
    for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Integer total = 0, t;
  for (const auto& [e, c] : terms_) {
    t = c;
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i]) t *= powers[i][e[i]];
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> subs) const {
  if (subs.size() != num_vars_)
    throw ArityMismatch("substitute: expected " + std::to_string(num_vars_) + " polynomials");
  const std::size_t target_vars = subs.empty() ? 0 : subs[0].num_vars();
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    powers[i].push_back(Polynomial::constant(target_vars, 1));
    const unsigned d = degree_in(i);
    for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * subs[i]);
  }
  Polynomial r(target_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(target_vars, c);
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i]) t = t * powers[i][e[i]];
    r += t;
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents n = e;
    --n[var];
    r.add_term(n, c * e[var]);
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(is_zero() ? 0 : degree_in(var) + 1, Polynomial(num_vars_));
  for (const auto& [e, c] : terms_) {
    Exponents n = e;
    n[var] = 0;
    out[e[var]].terms_.emplace(std::move(n), c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients_in(std::size_t num_vars, std::size_t var,
                                            const std::vector<Polynomial>& coeffs) {
  Polynomial r(num_vars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms_) {
      Exponents n = e;
      n[var] += static_cast<std::uint32_t>(k);
      r.add_term(n, c);
    }
  }
  return r;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.num_vars(), 1);
  Polynomial base = p;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroInput("division by the zero polynomial");
  const std::size_t n = std::max(a.num_vars(), b.num_vars());
  Polynomial q(n), r = a;
  const Exponents& lb = b.leading_exponents();
  const Integer& cb = b.leading_coefficient();
  Exponents shift(n);
  Integer coef;
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    for (std::size_t i = 0; i < n; ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      shift[i] = lr[i] - lb[i];
    }
    if (!mpz_divisible_p(r.leading_coefficient().get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    mpz_divexact(coef.get_mpz_t(), r.leading_coefficient().get_mpz_t(), cb.get_mpz_t());
    q.add_term(shift, coef);
    Polynomial t = b.shifted(shift);
    t *= coef;
    r -= t;
  }
  return q;
}

namespace {

Polynomial divide_or_die(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  assert(q && "expected exact division");
  if (!q) throw NotDivisible("internal: expected exact division");
  return *std::move(q);
}

// Highest-index variable occurring in p, or -1.
int main_variable(const Polynomial& p) {
  int v = -1;
  for (const auto& [e, c] : p.terms())
    for (int i = static_cast<int>(e.size()) - 1; i > v; --i)
      if (e[i] > 0) {
        v = i;
        break;
      }
  return v;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.num_vars());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.leading_coefficient() == 1) break;
  }
  return g;
}

using Dense = std::vector<Polynomial>;

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Pseudo-remainder of a by b as univariate polynomials over Z[other vars].
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Polynomial& lcb = b.back();
  long e = static_cast<long>(a.size()) - static_cast<long>(db);
  while (!a.empty() && a.size() - 1 >= db) {
    const Polynomial lr = a.back();
    const std::size_t s = a.size() - 1 - db;
    for (auto& c : a) c = c * lcb;
    for (std::size_t i = 0; i <= db; ++i) a[i + s] -= lr * b[i];
    trim(a);
    --e;
  }
  if (e > 0) {
    const Polynomial m = pow(lcb, static_cast<unsigned>(e));
    for (auto& c : a) c = c * m;
  }
  return a;
}

// gcd of two polynomials primitive in `var`, both of positive degree in it.
Polynomial subresultant_gcd(const Polynomial& pa, const Polynomial& pb, std::size_t var) {
  const std::size_t n = pa.num_vars();
  Dense a = pa.coefficients_in(var), b = pb.coefficients_in(var);
  if (a.size() < b.size()) std::swap(a, b);
  Polynomial g = Polynomial::constant(n, 1), h = Polynomial::constant(n, 1);
  for (;;) {
    const std::size_t delta = a.size() - b.size();
    Dense r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (r.size() == 1) return Polynomial::constant(n, 1);
    a = std::move(b);
    const Polynomial divisor = g * pow(h, static_cast<unsigned>(delta));
    for (auto& c : r) c = divide_or_die(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_die(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  Polynomial result = Polynomial::from_coefficients_in(n, var, b);
  return divide_or_die(result, content_in(result, var)).sign_normalized();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.sign_normalized();
  if (b.is_zero()) return a.sign_normalized();
  const std::size_t n = std::max(a.num_vars(), b.num_vars());
  if (a.is_constant() || b.is_constant()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return Polynomial::constant(n, g);
  }
  const int va = main_variable(a), vb = main_variable(b);
  const std::size_t v = static_cast<std::size_t>(std::max(va, vb));
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);
  const Polynomial ca = content_in(a, v), cb = content_in(b, v);
  const Polynomial c = gcd(ca, cb);
  const Polynomial g = subresultant_gcd(divide_or_die(a, ca), divide_or_die(b, cb), v);
  return (c * g).sign_normalized();
}

namespace {

// Yun's algorithm for p primitive in `var` with positive degree there.
std::vector<std::pair<Polynomial, unsigned>> yun(const Polynomial& p, std::size_t var) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  const Polynomial dp = p.derivative(var);
  const Polynomial a0 = gcd(p, dp);
  Polynomial b = divide_or_die(p, a0);
  Polynomial c = divide_or_die(dp, a0);
  Polynomial d = c - b.derivative(var);
  for (unsigned i = 1; b.degree_in(var) > 0; ++i) {
    const Polynomial a = gcd(b, d);
    Polynomial nb = divide_or_die(b, a);
    c = divide_or_die(d, a);
    d = c - nb.derivative(var);
    if (a.degree_in(var) > 0) out.emplace_back(a.primitive_part(), i);
    b = std::move(nb);
  }
  return out;
}

void collect_squarefree(const Polynomial& p, std::map<unsigned, Polynomial>& by_mult) {
  if (p.is_constant()) return;
  const std::size_t v = static_cast<std::size_t>(main_variable(p));
  const Polynomial cont = content_in(p, v);
  collect_squarefree(cont, by_mult);
  for (auto& [f, e] : yun(divide_or_die(p, cont), v)) {
    auto it = by_mult.find(e);
    if (it == by_mult.end())
      by_mult.emplace(e, std::move(f));
    else
      it->second = (it->second * f).primitive_part();
  }
}

}  // namespace

SquarefreeFactors squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw ZeroInput("squarefree decomposition of zero");
  std::map<unsigned, Polynomial> by_mult;
  collect_squarefree(p, by_mult);
  SquarefreeFactors out;
  Integer lc = 1;
  for (auto& [e, f] : by_mult) {
    lc *= arithdyn::pow(f.leading_coefficient(), e);
    out.factors.emplace_back(std::move(f), e);
  }
  out.unit = Rational(p.leading_coefficient(), lc);
  out.unit.canonicalize();
  return out;
}

}  // namespace arithdyn
