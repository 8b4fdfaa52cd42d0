#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "hypernorm/interval.hpp"
#include "hypernorm/projection.hpp"
#include "hypernorm/rational.hpp"

namespace hypernorm {

/// Ball of relative radius q around some string of length n.
struct BallQuery {
  std::size_t n;
  Rational q;

  /// DomainError unless n >= 1 and 0 <= q <= 1.
  void validate() const;
  /// floor(q n); d(sigma, tau) <= q includes the boundary.
  std::size_t radius() const;
};

/// Fraction of positions where the two binary strings differ.
Rational hamming_density(std::string_view sigma, std::string_view tau);

/// |B(sigma, q)| = sum_{i <= floor(qn)} C(n, i).
BigInt ball_size(const BallQuery& query);

/// Binary entropy H(q) enclosed in an interval of width <= precision.
/// Exact at q in {0, 1/2, 1}.
Interval entropy(const Rational& q, const Rational& precision = default_precision());

struct BallBound {
  Verdict verdict = Verdict::Undecided;
  bool equality = false;
  BigInt ball;       // exact left side
  Interval bound;    // encloses 2^(H(q) n)
};

/// |B(sigma, q)| <= 2^(H(q) n), refined until the sides separate.
/// PreconditionError when q > 1/2.
BallBound ball_bound_check(const BallQuery& query);

struct DeltaThreshold {
  unsigned k;                        // delta = 2^-k
  Rational delta;
  Interval entropy_at_2delta;        // hi < 1 - p
  /// H(4 delta) with lo >= 1 - p, certifying that 2 delta fails; nullopt
  /// when 4 delta > 1/2.
  std::optional<Interval> entropy_at_4delta;
};

/// Largest delta = 2^-k, k <= 64, with H(2 delta) < 1 - p, certified with
/// enclosures of width <= min(precision, 2^-32). nullopt when no k <= 64
/// qualifies. DomainError unless 0 < p < 1.
std::optional<DeltaThreshold> delta_threshold(const Rational& p,
                                              const Rational& precision = default_precision());

}  // namespace hypernorm
