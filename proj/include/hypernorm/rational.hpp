#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace hypernorm {

/// Exact signed rational. Every value produced by this library is kept
/// canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms; throws DomainError when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "a", "-a" or "a/b" with decimal integers.
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);

/// value^exponent for a nonnegative integer exponent. 0^0 == 1.
Rational power(const Rational& value, unsigned long exponent);

BigInt lcm_of_denominators(std::span<const Rational> values);

/// Exact r-th root of a nonnegative rational when one exists.
bool exact_root(const Rational& value, unsigned long r, Rational& root);

Rational sum(std::span<const Rational> values);

}  // namespace hypernorm
