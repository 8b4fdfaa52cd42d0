#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypernorm/exact_lp.hpp"
#include "hypernorm/rational.hpp"

namespace hypernorm {

/// Subset of the coordinates {1..n}, n <= 64. Bit i-1 stands for
/// coordinate i.
class CoordSet {
 public:
  constexpr CoordSet() = default;
  constexpr explicit CoordSet(std::uint64_t bits) : bits_(bits) {}

  /// From 1-indexed coordinates; throws DomainError outside 1..64.
  static CoordSet from_coordinates(const std::vector<std::size_t>& coords);
  static CoordSet full(std::size_t n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t coord) const {
    return coord >= 1 && coord <= 64 && ((bits_ >> (coord - 1)) & 1U) != 0;
  }
  std::size_t size() const;
  /// Sorted 1-indexed coordinates.
  std::vector<std::size_t> coordinates() const;
  /// Largest coordinate, 0 when empty.
  std::size_t max_coordinate() const;

  constexpr bool is_subset_of(CoordSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend constexpr CoordSet operator&(CoordSet a, CoordSet b) { return CoordSet(a.bits_ & b.bits_); }
  friend constexpr CoordSet operator|(CoordSet a, CoordSet b) { return CoordSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(CoordSet, CoordSet) = default;
  friend constexpr auto operator<=>(CoordSet, CoordSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// A nonempty ordered list of subsets of {1..n}. Duplicates are kept (the
/// LP just sees a repeated column) but reported through duplicates().
class SetFamily {
 public:
  /// Throws DomainError if n == 0, n > 64, sets is empty, or a set
  /// mentions a coordinate above n.
  SetFamily(std::size_t n, std::vector<CoordSet> sets);

  std::size_t n() const { return n_; }
  const std::vector<CoordSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  const CoordSet& operator[](std::size_t i) const { return sets_[i]; }

  bool contains_empty_set() const;
  CoordSet intersection() const;
  /// Index pairs (first, later) of repeated members.
  std::vector<std::pair<std::size_t, std::size_t>> duplicates() const;

  /// Rows are coordinates, columns are members.
  LinearProgram incidence_lp() const;

 private:
  std::size_t n_;
  std::vector<CoordSet> sets_;
};

/// x_F, one entry per member of a family (a fractional matching).
struct Weighting {
  std::vector<Rational> values;

  Rational total() const { return sum(values); }
  /// Nonnegative and every coordinate's incident weight at most 1.
  bool is_normalised(const SetFamily& family) const;
};

/// y_i, one entry per coordinate (a fractional cover).
struct CoordWeighting {
  std::vector<Rational> values;

  Rational total() const { return sum(values); }
  /// Nonnegative and every member receives weight at least 1.
  bool is_normalised(const SetFamily& family) const;
  Rational weight_of(CoordSet set) const;
};

struct NormResult {
  std::optional<Rational> value;  // nullopt means infinite
  std::optional<Weighting> primal;
  std::optional<CoordWeighting> dual;
  std::vector<std::string> warnings;

  bool is_infinite() const { return !value.has_value(); }
  /// 1/||F||, reported as 0 for an infinite norm.
  Rational reciprocal() const;
};

/// ||F|| via the exact incidence LP, with both certificates. Infinite iff
/// some member is empty.
NormResult norm(const SetFamily& family);

// Closed forms and the special families.

/// n/k, without touching the LP. DomainError unless 1 <= k <= n.
Rational k_subsets_norm(std::size_t n, std::size_t k);

/// All k-subsets of {1..n} in lexicographic order.
SetFamily k_subsets_family(std::size_t n, std::size_t k);

/// The n windows {i, i+1, ..., i+k-1} (mod n). Requires 0 < k < n.
SetFamily cyclic_family(std::size_t n, std::size_t k);

/// All k-subsets of {1..n} (lexicographic) followed by G = {1..k-1}.
/// Requires 1 < k < n.
SetFamily degenerate_family(std::size_t n, std::size_t k);

/// 1 / max{k/(n+1), (k-1)/(n-1)}.
Rational degenerate_norm(std::size_t n, std::size_t k);

/// The explicit primal/dual pair from the two-case argument for the
/// degenerate family, indexed like degenerate_family(n, k).
///
/// Case 2k-1 <= n: x_G = 1 and weight (n-k+1)/(k*C(n-k+1,k)) on every
/// k-subset of {k..n}; y = 1/(k-1) on G and 1/k elsewhere.
/// Case 2k-1 > n: x_G = (n-k)/(k-1) and weight 1/C(k-1,2k-1-n) on every
/// k-subset containing {k..n}; y = 1/(k-1) on G and
/// (n-k)/((n-k+1)(k-1)) elsewhere.
std::pair<Weighting, CoordWeighting> degenerate_certificates(std::size_t n,
                                                             std::size_t k);

}  // namespace hypernorm
