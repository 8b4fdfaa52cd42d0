#include "hypernorm/interval.hpp"

#include <mpfr.h>

#include <algorithm>

#include "hypernorm/errors.hpp"

namespace hypernorm {

namespace {

// RAII holder for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(std::size_t bits) {
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
  }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return value_; }

  Rational to_rational() const {
    Rational r;
    mpfr_get_q(r.get_mpq_t(), value_);
    return r;
  }

 private:
  mpfr_t value_;
};

void set_rounded(Mpfr& dst, const Rational& v, mpfr_rnd_t mode) {
  mpfr_set_q(dst.get(), v.get_mpq_t(), mode);
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

Interval operator*(const Interval& a, const Interval& b) {
  return {a.lo * b.lo, a.hi * b.hi};
}

Interval operator*(const Rational& k, const Interval& a) {
  return {k * a.lo, k * a.hi};
}

Rational default_precision() {
  Rational r;
  mpq_set_ui(r.get_mpq_t(), 1, 1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), 64);
  return r;
}

std::size_t bits_for_width(const Rational& width) {
  if (width <= 0) return 64;
  // log2(1/width) rounded up, plus headroom for intermediate cancellation.
  std::size_t den_bits = mpz_sizeinbase(width.get_den_mpz_t(), 2);
  std::size_t num_bits = mpz_sizeinbase(width.get_num_mpz_t(), 2);
  std::size_t need = den_bits > num_bits ? den_bits - num_bits + 1 : 1;
  return std::max<std::size_t>(64, need + 32);
}

Interval log2_enclosure(const Rational& x, std::size_t bits) {
  if (x <= 0) throw DomainError("log2 of a nonpositive value");
  Mpfr lo(bits);
  Mpfr hi(bits);
  set_rounded(lo, x, MPFR_RNDD);
  set_rounded(hi, x, MPFR_RNDU);
  // log2 is increasing.
  mpfr_log2(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log2(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

Interval exp2_enclosure(const Interval& x, std::size_t bits) {
  Mpfr lo(bits);
  Mpfr hi(bits);
  set_rounded(lo, x.lo, MPFR_RNDD);
  set_rounded(hi, x.hi, MPFR_RNDU);
  mpfr_exp2(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp2(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

Interval power_enclosure(const Rational& x, const Rational& exponent,
                         std::size_t bits) {
  if (x < 0) throw DomainError("fractional power of a negative value");
  if (exponent < 0) throw DomainError("negative exponent");
  if (!mpz_fits_ulong_p(exponent.get_num_mpz_t()) ||
      !mpz_fits_ulong_p(exponent.get_den_mpz_t())) {
    throw DomainError("exponent too large");
  }
  unsigned long num = mpz_get_ui(exponent.get_num_mpz_t());
  unsigned long den = mpz_get_ui(exponent.get_den_mpz_t());
  Rational raised = power(x, num);
  Rational root;
  if (exact_root(raised, den, root)) return Interval::point(root);
  Mpfr lo(bits);
  Mpfr hi(bits);
  set_rounded(lo, raised, MPFR_RNDD);
  set_rounded(hi, raised, MPFR_RNDU);
  // t -> t^(1/den) is increasing on [0, inf).
  mpfr_rootn_ui(lo.get(), lo.get(), den, MPFR_RNDD);
  mpfr_rootn_ui(hi.get(), hi.get(), den, MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

}  // namespace hypernorm
