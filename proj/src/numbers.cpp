#include "arithdyn/numbers.hpp"

#include <algorithm>
#include <cctype>

#include "arithdyn/errors.hpp"

namespace arithdyn {

bool is_prime(const Integer& n) {
  Integer a = abs(n);
  return mpz_probab_prime_p(a.get_mpz_t(), 40) > 0;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Rational r(pow(base.get_num(), e), pow(base.get_den(), e));
  if (exponent < 0) {
    if (r == 0) throw ZeroInput("negative power of zero");
    r = 1 / r;
  }
  r.canonicalize();
  return r;
}

unsigned long padic_valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw ZeroInput("valuation of zero");
  if (abs(p) < 2) throw InvalidArgument("valuation base must be >= 2");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
Integer rho(const Integer& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 64 && budget > 0; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto step = [&](Integer& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        budget = budget > lim ? budget - lim : 0;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        step(ys);
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

bool factor_into(const Integer& n, std::map<Integer, unsigned long>& out,
                 std::uint64_t& budget) {
  if (n == 1) return true;
  if (is_prime(n)) {
    out[n] += 1;
    return true;
  }
  if (budget == 0) return false;
  Integer d = rho(n, budget);
  if (d == 0) return false;
  return factor_into(d, out, budget) && factor_into(n / d, out, budget);
}

}  // namespace

std::optional<std::map<Integer, unsigned long>> factor_integer(
    const Integer& n, std::uint64_t rho_budget) {
  if (n == 0) throw ZeroInput("factorization of zero");
  std::map<Integer, unsigned long> out;
  Integer m = abs(n);
  for (unsigned long p = 2; p < 10'000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      Integer pz = p;
      out[pz] = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
    }
  }
  if (!factor_into(m, out, rho_budget)) return std::nullopt;
  return out;
}

std::optional<std::vector<Integer>> positive_divisors(const Integer& n,
                                                      std::size_t max_count) {
  auto f = factor_integer(n);
  if (!f) return std::nullopt;
  std::size_t count = 1;
  for (const auto& [p, e] : *f) {
    count *= (e + 1);
    if (count > max_count) return std::nullopt;
  }
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : *f) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw SyntaxError("empty number");
  std::size_t i = 0;
  if (t[0] == '-' || t[0] == '+') i = 1;
  bool slash = false;
  bool digit = false;
  for (std::size_t j = i; j < t.size(); ++j) {
    if (t[j] == '/') {
      if (slash || !digit || j + 1 == t.size()) throw SyntaxError("bad rational '" + text + "'");
      slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(t[j]))) {
      digit = true;
    } else {
      throw SyntaxError("bad rational '" + text + "'");
    }
  }
  if (!digit) throw SyntaxError("bad rational '" + text + "'");
  if (t[0] == '+') t.erase(0, 1);
  Rational r;
  if (r.set_str(t, 10) != 0) throw SyntaxError("bad rational '" + text + "'");
  if (r.get_den() == 0) throw SyntaxError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace arithdyn
