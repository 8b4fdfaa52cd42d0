#pragma once

#include <cstddef>
#include <optional>

#include "hypernorm/rational.hpp"

namespace hypernorm {

/// Closed interval with exact rational endpoints. Enclosures of
/// transcendental quantities are produced with outward (directed) rounding,
/// so the true value always lies in [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& v) { return {v, v}; }

  Rational width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool overlaps(const Interval& other) const {
    return lo <= other.hi && other.lo <= hi;
  }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
// Both operands must be nonnegative.
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& k, const Interval& a);  // k >= 0

/// Default error bound for interval results, 2^-64.
Rational default_precision();

/// Working precision (mantissa bits) that comfortably resolves `width`.
std::size_t bits_for_width(const Rational& width);

/// Upper bound on the doubling refinement: working precision never exceeds
/// this many bits.
inline constexpr std::size_t kMaxWorkingBits = std::size_t{1} << 16;

// Enclosures at a given working precision. Results are outward rounded.
Interval log2_enclosure(const Rational& x, std::size_t bits);    // x > 0
Interval exp2_enclosure(const Interval& x, std::size_t bits);
/// x^(num/den) for x >= 0 and a nonnegative rational exponent.
Interval power_enclosure(const Rational& x, const Rational& exponent,
                         std::size_t bits);

/// Repeatedly evaluates `compute(bits)` with doubling working precision
/// until the enclosure width is at most `max_width`. Returns nullopt when
/// kMaxWorkingBits is reached first.
template <class Compute>
std::optional<Interval> refine_to_width(Compute&& compute,
                                        const Rational& max_width) {
  for (std::size_t bits = bits_for_width(max_width); bits <= kMaxWorkingBits;
       bits *= 2) {
    Interval result = compute(bits);
    if (result.width() <= max_width) return result;
  }
  return std::nullopt;
}

}  // namespace hypernorm
