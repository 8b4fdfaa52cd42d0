#include "hypernorm/rational.hpp"

#include "hypernorm/errors.hpp"

namespace hypernorm {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string digits(text);
  bool ok = !digits.empty();
  std::size_t start = (ok && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (start == digits.size()) ok = false;
  for (std::size_t i = start; ok && i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') ok = false;
  }
  if (!ok) {
    throw StructuralError("malformed rational '" + std::string(whole) + "'");
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  return make_rational(parse_integer(text.substr(0, slash), text),
                       parse_integer(text.substr(slash + 1), text));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational power(const Rational& value, unsigned long exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime.
  Rational r;
  r.get_num() = num;
  r.get_den() = den;
  return r;
}

BigInt lcm_of_denominators(std::span<const Rational> values) {
  BigInt result = 1;
  for (const auto& v : values) {
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), v.get_den_mpz_t());
  }
  return result;
}

bool exact_root(const Rational& value, unsigned long r, Rational& root) {
  if (value < 0 || r == 0) return false;
  BigInt num;
  BigInt den;
  if (mpz_root(num.get_mpz_t(), value.get_num_mpz_t(), r) == 0) return false;
  if (mpz_root(den.get_mpz_t(), value.get_den_mpz_t(), r) == 0) return false;
  root = make_rational(num, den);
  return true;
}

Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace hypernorm
