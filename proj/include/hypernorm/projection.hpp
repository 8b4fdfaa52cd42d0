#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hypernorm/family_norm.hpp"
#include "hypernorm/interval.hpp"
#include "hypernorm/rational.hpp"

namespace hypernorm {

using Tuple = std::vector<std::uint32_t>;

/// R subset of X_1 x ... x X_n with X_i = {0..sizes[i]-1}. Tuples are kept
/// sorted and duplicate-free.
class FiniteRelation {
 public:
  /// Throws DomainError on an empty size list, a zero size, or a tuple of
  /// the wrong arity / out of range. Duplicate tuples are collapsed.
  FiniteRelation(std::vector<std::uint32_t> sizes, std::vector<Tuple> tuples);

  /// The whole product X_1 x ... x X_n.
  static FiniteRelation full(std::vector<std::uint32_t> sizes);

  std::size_t arity() const { return sizes_.size(); }
  const std::vector<std::uint32_t>& sizes() const { return sizes_; }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  BigInt ambient_size() const;

  bool operator==(const FiniteRelation&) const = default;

 private:
  std::vector<std::uint32_t> sizes_;
  std::vector<Tuple> tuples_;
};

/// d(R) = |R| / |X_1 x ... x X_n|.
Rational relative_size(const FiniteRelation& rel);

/// pi_F[R]: keep the coordinates in F (1-indexed, increasing order).
FiniteRelation project(const FiniteRelation& rel, CoordSet coords);

/// An exact comparison lhs <= rhs, both sides recorded.
struct Comparison {
  Rational lhs;
  Rational rhs;

  bool holds() const { return lhs <= rhs; }
  bool equality() const { return lhs == rhs; }
};

struct ProjectionReport {
  Rational relation_size;               // d(R)
  std::vector<Rational> projected_sizes;  // d(pi_F[R]) per member
  BigInt exponent_scale;                // D, the common denominator of x
  Comparison comparison;                // d(R)^D <= prod d(pi_F[R])^(x_F D)
};

/// d(R) <= prod_F d(pi_F[R])^x_F, decided exactly by raising both sides to
/// the common denominator of the weights. Throws PreconditionError on a
/// weighting that is not normalised for `family`, DomainError on an arity
/// mismatch or an empty member.
ProjectionReport shearer_check(const FiniteRelation& rel,
                               const SetFamily& family,
                               const Weighting& weighting);

enum class Verdict { Hold, Violate, Undecided };

struct AmgmVerdict {
  Verdict verdict = Verdict::Undecided;
  bool equality = false;
  Interval lhs;  // encloses prod s0^x + prod s1^x
  Interval rhs;  // encloses prod (s0+s1)^x
};

/// prod s0^x + prod s1^x <= prod (s0 + s1)^x for x >= 0 with sum x = 1.
///
/// Equality is recognised structurally (a zero factor on the support, or
/// s0 and s1 proportional on the support); otherwise the sides are
/// separated by interval refinement.
AmgmVerdict amgm_step_check(const std::vector<Rational>& s0,
                            const std::vector<Rational>& s1,
                            const std::vector<Rational>& x);

struct GeometricWitness {
  std::size_t index;     // position in the family
  CoordSet set;
  Rational norm;         // ||F|| = a/b
  Comparison comparison; // d(R)^b <= d(pi_F[R])^a
};

/// Some member F with d(pi_F[R]) >= d(R)^(1/||F||). Throws DomainError for
/// an infinite norm, InvariantViolation if no member qualifies.
GeometricWitness geometric_witness(const FiniteRelation& rel,
                                   const SetFamily& family);

/// The box prod_i [0, base^exponents[i]].
struct SymbolicBox {
  Rational base;
  std::vector<Rational> exponents;

  /// The measure is base^measure_exponent().
  Rational measure_exponent() const { return sum(exponents); }
  /// The projection onto `coords` has measure base^projection_exponent.
  Rational projection_exponent(CoordSet coords) const;
};

/// Sides c^(y_i/||F||) from the dual certificate of norm(family). Throws
/// DomainError for an infinite norm or c outside (0, 1].
SymbolicBox sharp_box(const SetFamily& family, const Rational& c);

struct SharpnessReport {
  Rational target;                         // 1/||F||
  std::vector<Rational> projection_exponents;
  std::vector<bool> dual_tight;            // sum_{i in F} y_i == 1
  bool unit_measure_exponent = false;      // sum e_i == 1
  bool all_at_least_target = false;
  bool tight_members_attain_target = false;

  bool ok() const {
    return unit_measure_exponent && all_at_least_target &&
           tight_members_attain_target;
  }
};

/// Exact exponent bookkeeping for a sharp box built from `result`.
SharpnessReport sharpness_report(const SetFamily& family,
                                 const SymbolicBox& box,
                                 const NormResult& result);

/// d(R)^(n-1) <= prod_j d(pi_{-j}[R]). DomainError when n < 2.
Comparison loomis_whitney_check(const FiniteRelation& rel);

}  // namespace hypernorm
