#include "hypernorm/exact_lp.hpp"

#include "hypernorm/errors.hpp"

namespace hypernorm {

void LinearProgram::validate() const {
  if (matrix.size() != num_constraints) {
    throw StructuralError("matrix has " + std::to_string(matrix.size()) +
                          " rows, expected " + std::to_string(num_constraints));
  }
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != num_vars) {
      throw StructuralError("matrix row " + std::to_string(i) + " has " +
                            std::to_string(matrix[i].size()) +
                            " entries, expected " + std::to_string(num_vars));
    }
  }
  if (objective.size() != num_vars) {
    throw StructuralError("objective length does not match num_vars");
  }
  if (rhs.size() != num_constraints) {
    throw StructuralError("rhs length does not match num_constraints");
  }
}

namespace {

// Dense tableau over [original vars | slacks | rhs]. Row r holds the basic
// variable basis[r]; `reduced` holds c_j - c_B B^-1 A_j and `value` the
// current objective.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp)
      : rows_(lp.num_constraints),
        cols_(lp.num_vars + lp.num_constraints),
        cells_(rows_, std::vector<Rational>(cols_ + 1)),
        reduced_(cols_),
        basis_(rows_) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < lp.num_vars; ++j) cells_[r][j] = lp.matrix[r][j];
      cells_[r][lp.num_vars + r] = 1;
      cells_[r][cols_] = lp.rhs[r];
      basis_[r] = lp.num_vars + r;
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j) reduced_[j] = lp.objective[j];
  }

  // Bland: lowest-index column with positive reduced cost.
  std::optional<std::size_t> entering() const {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (reduced_[j] > 0) return j;
    }
    return std::nullopt;
  }

  // Minimum ratio test; ties go to the lowest-index basic variable.
  std::optional<std::size_t> leaving(std::size_t col) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (cells_[r][col] <= 0) continue;
      Rational ratio = cells_[r][cols_] / cells_[r][col];
      if (!best || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / cells_[row][col];
    for (auto& cell : cells_[row]) cell *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || cells_[r][col] == 0) continue;
      const Rational factor = cells_[r][col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (cells_[row][j] != 0) cells_[r][j] -= factor * cells_[row][j];
      }
    }
    const Rational factor = reduced_[col];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (cells_[row][j] != 0) reduced_[j] -= factor * cells_[row][j];
    }
    value_ += factor * cells_[row][cols_];
    basis_[row] = col;
  }

  LPResult extract(std::size_t num_vars) const {
    LPResult result;
    result.status = LPStatus::Optimal;
    result.primal.assign(num_vars, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < num_vars) result.primal[basis_[r]] = cells_[r][cols_];
    }
    result.dual.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) result.dual[r] = -reduced_[num_vars + r];
    result.optimal_value = value_;
    return result;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  Rational value_ = 0;
};

}  // namespace

LPResult solve_max(const LinearProgram& lp) {
  lp.validate();
  for (const auto& b : lp.rhs) {
    if (b < 0) throw PreconditionError("rhs must be nonnegative");
  }
  for (const auto& c : lp.objective) {
    if (c < 0) throw PreconditionError("objective must be nonnegative");
  }

  Tableau tableau(lp);
  while (auto col = tableau.entering()) {
    auto row = tableau.leaving(*col);
    if (!row) {
      LPResult unbounded;
      unbounded.status = LPStatus::Unbounded;
      return unbounded;
    }
    tableau.pivot(*row, *col);
  }
  return tableau.extract(lp.num_vars);
}

CertificateVerdict verify_certificates(const LinearProgram& lp,
                                       const LPResult& result) {
  auto fail = [](std::string reason) {
    return CertificateVerdict{false, std::move(reason)};
  };
  if (result.status != LPStatus::Optimal || !result.optimal_value) {
    return fail("result is not Optimal");
  }
  if (result.primal.size() != lp.num_vars) return fail("primal has wrong length");
  if (result.dual.size() != lp.num_constraints) return fail("dual has wrong length");

  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (result.primal[j] < 0) {
      return fail("primal infeasible: x[" + std::to_string(j) + "] < 0");
    }
  }
  for (std::size_t i = 0; i < lp.num_constraints; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) row += lp.matrix[i][j] * result.primal[j];
    if (row > lp.rhs[i]) {
      return fail("primal infeasible: constraint " + std::to_string(i) +
                  " has lhs " + to_string(row) + " > " + to_string(lp.rhs[i]));
    }
  }
  for (std::size_t i = 0; i < lp.num_constraints; ++i) {
    if (result.dual[i] < 0) {
      return fail("dual infeasible: y[" + std::to_string(i) + "] < 0");
    }
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < lp.num_constraints; ++i) col += lp.matrix[i][j] * result.dual[i];
    if (col < lp.objective[j]) {
      return fail("dual infeasible: column " + std::to_string(j) + " covers " +
                  to_string(col) + " < " + to_string(lp.objective[j]));
    }
  }

  Rational primal_value = 0;
  for (std::size_t j = 0; j < lp.num_vars; ++j) primal_value += lp.objective[j] * result.primal[j];
  Rational dual_value = 0;
  for (std::size_t i = 0; i < lp.num_constraints; ++i) dual_value += lp.rhs[i] * result.dual[i];
  if (primal_value != dual_value) {
    return fail("objective mismatch: primal " + to_string(primal_value) +
                " != dual " + to_string(dual_value));
  }
  if (primal_value != *result.optimal_value) {
    return fail("reported optimum " + to_string(*result.optimal_value) +
                " differs from primal objective " + to_string(primal_value));
  }
  return {true, {}};
}

}  // namespace hypernorm
