#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypernorm/rational.hpp"

namespace hypernorm {

/// maximise <objective, x> subject to matrix * x <= rhs, x >= 0.
///
/// `matrix` is row-major with one row per constraint; every row has
/// num_vars entries.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::size_t num_constraints = 0;
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> objective;
  std::vector<Rational> rhs;

  /// Throws StructuralError on inconsistent dimensions.
  void validate() const;
};

enum class LPStatus { Optimal, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Optimal;
  std::optional<Rational> optimal_value;  // present iff Optimal
  std::vector<Rational> primal;           // length num_vars
  std::vector<Rational> dual;             // length num_constraints

  bool operator==(const LPResult&) const = default;
};

/// Exact primal simplex over the rationals with Bland's anti-cycling rule,
/// started from the slack basis. Requires rhs >= 0 and objective >= 0.
/// The dual vector is read off the final basis.
LPResult solve_max(const LinearProgram& lp);

struct CertificateVerdict {
  bool pass = false;
  std::string reason;  // empty on pass

  explicit operator bool() const { return pass; }
};

/// Rechecks an Optimal result by direct arithmetic only: primal
/// feasibility, dual feasibility and equality of both objective values.
CertificateVerdict verify_certificates(const LinearProgram& lp,
                                       const LPResult& result);

}  // namespace hypernorm
