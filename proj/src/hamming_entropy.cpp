#include "hypernorm/hamming_entropy.hpp"

#include "hypernorm/errors.hpp"

namespace hypernorm {

namespace {

Rational dyadic(int exponent) {
  Rational r = 1;
  if (exponent >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(exponent));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-exponent));
  }
  return r;
}

const Rational kHalf = make_rational(1, 2);

Interval entropy_at(const Rational& q, std::size_t bits) {
  if (q == 0 || q == 1) return Interval::point(0);
  if (q == kHalf) return Interval::point(1);
  const Rational r = 1 - q;
  // H(q) = q log2(1/q) + r log2(1/r), both terms nonnegative.
  return q * log2_enclosure(1 / q, bits) + r * log2_enclosure(1 / r, bits);
}

}  // namespace

void BallQuery::validate() const {
  if (n == 0) throw DomainError("string length must be at least 1");
  if (q < 0 || q > 1) throw DomainError("ball radius q must lie in [0, 1]");
}

std::size_t BallQuery::radius() const {
  BigInt r;
  const Rational scaled = q * Rational(static_cast<unsigned long>(n));
  mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return static_cast<std::size_t>(r.get_ui());
}

Rational hamming_density(std::string_view sigma, std::string_view tau) {
  if (sigma.size() != tau.size()) throw DomainError("strings differ in length");
  if (sigma.empty()) throw DomainError("strings must be nonempty");
  std::int64_t differ = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] != tau[i]) ++differ;
  }
  return make_rational(differ, static_cast<std::int64_t>(sigma.size()));
}

BigInt ball_size(const BallQuery& query) {
  query.validate();
  BigInt total = 0;
  BigInt term;
  for (std::size_t i = 0; i <= query.radius(); ++i) {
    mpz_bin_uiui(term.get_mpz_t(), query.n, i);
    total += term;
  }
  return total;
}

Interval entropy(const Rational& q, const Rational& precision) {
  if (q < 0 || q > 1) throw DomainError("entropy argument must lie in [0, 1]");
  if (precision <= 0) throw DomainError("precision must be positive");
  auto result = refine_to_width([&](std::size_t bits) { return entropy_at(q, bits); },
                                precision);
  if (!result) throw DomainError("requested precision is below the working-precision cap");
  return *result;
}

BallBound ball_bound_check(const BallQuery& query) {
  query.validate();
  if (query.q > kHalf) throw PreconditionError("ball bound needs q <= 1/2");
  BallBound out;
  out.ball = ball_size(query);
  const Rational length(static_cast<unsigned long>(query.n));

  if (query.q == 0 || query.q == kHalf) {
    // H is exactly 0 or 1, so the bound is 1 or 2^n.
    out.bound = Interval::point(query.q == 0 ? Rational(1) : dyadic(static_cast<int>(query.n)));
    out.equality = Rational(out.ball) == out.bound.lo;
    out.verdict = Rational(out.ball) <= out.bound.lo ? Verdict::Hold : Verdict::Violate;
    return out;
  }
  for (std::size_t bits = 64; bits <= kMaxWorkingBits; bits *= 2) {
    out.bound = exp2_enclosure(length * entropy_at(query.q, bits), bits);
    if (Rational(out.ball) <= out.bound.lo) {
      out.verdict = Verdict::Hold;
      return out;
    }
    if (Rational(out.ball) > out.bound.hi) {
      out.verdict = Verdict::Violate;
      return out;
    }
  }
  out.verdict = Verdict::Undecided;
  return out;
}

std::optional<DeltaThreshold> delta_threshold(const Rational& p, const Rational& precision) {
  if (p <= 0 || p >= 1) throw DomainError("delta threshold needs 0 < p < 1");
  if (precision <= 0) throw DomainError("precision must be positive");
  const Rational target = 1 - p;
  const Rational cap = dyadic(-32);
  Rational width = precision < cap ? precision : cap;

  std::optional<Interval> previous;  // H(2^{2-k}), certified >= target
  for (unsigned k = 2; k <= 64; ++k) {
    const Rational t = dyadic(1 - static_cast<int>(k));
    // Halve the width until the strict comparison is certified one way.
    Interval h = entropy(t, width);
    Rational w = width;
    while (!(h.hi < target) && !(h.lo >= target)) {
      w /= 2;
      if (w < dyadic(-static_cast<int>(kMaxWorkingBits / 2))) break;
      h = entropy(t, w);
    }
    if (h.hi < target) {
      return DeltaThreshold{k, dyadic(-static_cast<int>(k)), h, previous};
    }
    if (!(h.lo >= target)) return std::nullopt;  // undecided at cap
    previous = h;
  }
  return std::nullopt;
}

}  // namespace hypernorm
