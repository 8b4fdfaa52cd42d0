#include <doctest.h>

#include <cmath>

#include "hypernorm/errors.hpp"
#include "hypernorm/interval.hpp"
#include "hypernorm/rational.hpp"

using namespace hypernorm;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-5") == -5);
  CHECK(parse_rational("2/-4") == Rational(-1, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), StructuralError);
  CHECK_THROWS_AS(parse_rational(""), StructuralError);
  CHECK_THROWS_AS(parse_rational("1/"), StructuralError);
}

TEST_CASE("canonical form survives parse/print round trips") {
  for (std::int64_t num = -12; num <= 12; ++num) {
    for (std::int64_t den = 1; den <= 12; ++den) {
      const Rational r = make_rational(num, den);
      CHECK(parse_rational(to_string(r)) == r);
      CHECK(r.get_den() > 0);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("powers and roots") {
  CHECK(power(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(power(Rational(0), 0) == 1);
  Rational root;
  CHECK(exact_root(Rational(4, 9), 2, root));
  CHECK(root == Rational(2, 3));
  CHECK_FALSE(exact_root(Rational(1, 2), 2, root));
  const Rational values[] = {Rational(1, 6), Rational(3, 4), Rational(5)};
  CHECK(lcm_of_denominators(values) == 12);
}

TEST_CASE("enclosures contain the true value") {
  const Rational x(3, 7);
  for (std::size_t bits : {64, 128, 256}) {
    const auto l = log2_enclosure(x, bits);
    CHECK(l.lo <= l.hi);
    CHECK(std::abs(l.lo.get_d() - std::log2(3.0 / 7.0)) < 1e-15);
    const auto p = power_enclosure(x, Rational(1, 3), bits);
    CHECK(power(p.lo, 3) <= x);
    CHECK(power(p.hi, 3) >= x);
    const auto e = exp2_enclosure(Interval::point(Rational(1, 2)), bits);
    CHECK(e.lo * e.lo <= 2);
    CHECK(e.hi * e.hi >= 2);
  }
  CHECK(power_enclosure(Rational(8, 27), Rational(2, 3), 64).is_point());
  CHECK(power_enclosure(Rational(8, 27), Rational(2, 3), 64).lo == Rational(4, 9));
  CHECK_THROWS_AS(log2_enclosure(Rational(0), 64), DomainError);
}

TEST_CASE("refinement reaches the requested width") {
  const Rational target(1, 1UL << 50);
  auto result = refine_to_width([](std::size_t bits) { return log2_enclosure(Rational(5), bits); },
                                target);
  REQUIRE(result.has_value());
  CHECK(result->width() <= target);
}
