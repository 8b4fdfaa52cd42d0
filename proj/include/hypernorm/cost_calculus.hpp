#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypernorm/interval.hpp"
#include "hypernorm/rational.hpp"

namespace hypernorm {

/// Strictly increasing beta_0 < ... < beta_T in [0, 1).
class LeftCEApprox {
 public:
  explicit LeftCEApprox(std::vector<Rational> values);

  /// beta_s = 1 - 2^-s for s = 0..horizon.
  static LeftCEApprox dyadic(std::size_t horizon);
  /// Seeded pseudo-random strictly increasing sequence.
  static LeftCEApprox random(std::size_t horizon, std::uint64_t seed);

  std::size_t horizon() const { return values_.size() - 1; }
  const Rational& operator[](std::size_t s) const { return values_[s]; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

/// The nonnegative real base^exponent, exponent >= 0, carried exactly.
struct PowerTerm {
  Rational base;
  Rational exponent = 1;

  static PowerTerm zero() { return {Rational(0), Rational(1)}; }

  /// The value when it is rational (exponent 1, zero base, or an exact
  /// root); nullopt otherwise.
  std::optional<Rational> exact_value() const;
  Interval enclose(std::size_t bits) const;
};

/// Exact sign of a - b for two power terms.
int compare(const PowerTerm& a, const PowerTerm& b);

/// A cost function on the finite horizon 0..T. c(x, s) = 0 for x >= s.
class CostFunction {
 public:
  using Evaluator = std::function<PowerTerm(std::size_t x, std::size_t s)>;

  CostFunction(std::size_t horizon, Evaluator evaluator);

  std::size_t horizon() const { return horizon_; }
  PowerTerm operator()(std::size_t x, std::size_t s) const;

 private:
  std::size_t horizon_;
  Evaluator evaluator_;
};

/// c_{beta,p}(x, s) = (beta_s - beta_x)^p for x < s. DomainError unless
/// 0 < p <= 1.
CostFunction make_cost(const LeftCEApprox& beta, const Rational& p);

/// Stages A_0..A_T, each a '0'/'1' string of the same length L.
class Approximation {
 public:
  explicit Approximation(std::vector<std::string> stages);
  Approximation(std::size_t length, std::vector<std::string> stages);

  /// Seeded random approximation: each stage flips every bit independently
  /// with probability `flip`.
  static Approximation random(std::size_t length, std::size_t horizon,
                              double flip, std::uint64_t seed);

  std::size_t length() const { return length_; }
  std::size_t horizon() const { return stages_.size() - 1; }
  const std::vector<std::string>& stages() const { return stages_; }
  const std::string& operator[](std::size_t s) const { return stages_[s]; }
  const std::string& final_stage() const { return stages_.back(); }

  /// Least position where stages s-1 and s differ; nullopt if equal.
  std::optional<std::size_t> least_change(std::size_t s) const;
  /// Number of stages s >= 1 at which `position` flips.
  std::size_t change_count(std::size_t position) const;
  /// Only 0 -> 1 flips.
  bool is_monotone() const;

 private:
  void validate() const;

  std::size_t length_;
  std::vector<std::string> stages_;
};

/// Strictly increasing i_0 < i_1 < ...; block n is [i_n, i_{n+1}).
class StageIndexSequence {
 public:
  explicit StageIndexSequence(std::vector<std::size_t> indices);
  /// i_n = n for n = 0..length.
  static StageIndexSequence identity(std::size_t length);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t block_count() const { return indices_.size() - 1; }

 private:
  std::vector<std::size_t> indices_;
};

/// One charged (position or block, stage) pair.
struct Charge {
  std::size_t position;
  std::size_t stage;

  friend auto operator<=>(const Charge&, const Charge&) = default;
};

struct CostReport {
  std::vector<Charge> charges;
  Interval value;   // width <= requested precision, contains the true sum
  bool exact = false;
};

/// Sum over stages s >= 1 of c(x, s), x the least changed position.
CostReport total_cost(const Approximation& approx, const CostFunction& cost,
                      const Rational& precision = default_precision());

/// For each position n < L, the n-stages measured against A := A_T.
std::vector<std::vector<std::size_t>> n_stages(const Approximation& approx);

/// Sum of c(n, last n-stage) over positions having an n-stage.
CostReport weak_total_cost(const Approximation& approx, const CostFunction& cost,
                           const Rational& precision = default_precision());

/// For each block n, the I-n-stages measured against A := A_T.
std::vector<std::vector<std::size_t>> i_n_stages(const Approximation& approx,
                                                 const StageIndexSequence& blocks);

/// Sum of c(n, last I-n-stage) over blocks having one. DomainError unless
/// the last index reaches the approximation length.
CostReport i_weak_total_cost(const Approximation& approx, const CostFunction& cost,
                             const StageIndexSequence& blocks,
                             const Rational& precision = default_precision());

struct ChangeSet {
  Approximation set;            // monotone enumeration C_0..C_T
  StageIndexSequence blocks;    // block n of C records changes of position n
};

/// Enumeration of the changes of `approx`: position n owns the block
/// [i_n, i_n + w_n) with w_n = max(h_n, 1), and its j-th change (j >= 1)
/// enumerates i_n + j - 1. PreconditionError if some position changes more
/// than h_n times.
ChangeSet change_set(const Approximation& approx, const std::vector<std::size_t>& h);

struct LimitReport {
  std::vector<PowerTerm> final_values;  // c(x, T) for x = 0..T
  bool non_increasing = false;
};

/// c(x, T) for every x in the horizon and whether it is non-increasing in
/// x. Only a finite-horizon surrogate for the limit condition.
LimitReport limit_condition_report(const CostFunction& cost);

}  // namespace hypernorm
