#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arithdyn {

using Integer = mpz_class;
using Rational = mpq_class;

/// True when |n| is prime. BPSW plus Miller-Rabin rounds; exact below 2^64.
bool is_prime(const Integer& n);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);

/// Largest e with p^e | n. Throws ZeroInput for n == 0.
unsigned long padic_valuation(const Integer& n, const Integer& p);

/// Prime factorization of |n| (trial division, then Pollard rho).
/// Returns nullopt when the rho iteration budget runs out.
std::optional<std::map<Integer, unsigned long>> factor_integer(
    const Integer& n, std::uint64_t rho_budget = 2'000'000);

/// Positive divisors of |n|; nullopt if factoring fails or the count exceeds
/// max_count.
std::optional<std::vector<Integer>> positive_divisors(
    const Integer& n, std::size_t max_count = 200'000);

Rational parse_rational(const std::string& text);

std::size_t bit_length(const Integer& n);

}  // namespace arithdyn
