#include "hypernorm/cost_calculus.hpp"

#include <algorithm>
#include <random>

#include "hypernorm/errors.hpp"

namespace hypernorm {

LeftCEApprox::LeftCEApprox(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("left-c.e. approximation needs at least one value");
  for (std::size_t s = 0; s < values_.size(); ++s) {
    if (values_[s] < 0 || values_[s] >= 1) {
      throw DomainError("beta_" + std::to_string(s) + " = " + to_string(values_[s]) +
                        " outside [0, 1)");
    }
    if (s > 0 && values_[s] <= values_[s - 1]) {
      throw DomainError("beta is not strictly increasing at stage " + std::to_string(s));
    }
  }
}

LeftCEApprox LeftCEApprox::dyadic(std::size_t horizon) {
  std::vector<Rational> values;
  for (std::size_t s = 0; s <= horizon; ++s) {
    Rational unit = 1;
    mpq_div_2exp(unit.get_mpq_t(), unit.get_mpq_t(), s);
    values.push_back(1 - unit);
  }
  return LeftCEApprox(std::move(values));
}

LeftCEApprox LeftCEApprox::random(std::size_t horizon, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> values{Rational(0)};
  for (std::size_t s = 1; s <= horizon; ++s) {
    // Move a fraction u in {1/8, ..., 7/8} of the remaining gap to 1.
    const Rational u = make_rational(static_cast<std::int64_t>(rng() % 7 + 1), 8);
    values.push_back(values.back() + (1 - values.back()) * u);
  }
  return LeftCEApprox(std::move(values));
}

std::optional<Rational> PowerTerm::exact_value() const {
  if (exponent == 0) return Rational(1);
  if (base == 0) return Rational(0);
  if (exponent == 1) return base;
  Rational raised = power(base, mpz_get_ui(exponent.get_num_mpz_t()));
  Rational root;
  if (exact_root(raised, mpz_get_ui(exponent.get_den_mpz_t()), root)) return root;
  return std::nullopt;
}

Interval PowerTerm::enclose(std::size_t bits) const {
  if (auto v = exact_value()) return Interval::point(*v);
  return power_enclosure(base, exponent, bits);
}

int compare(const PowerTerm& a, const PowerTerm& b) {
  // Both values are D-th roots of base^(exponent * D); t -> t^(1/D) is
  // increasing, so the integer powers compare the same way.
  const Rational exps[] = {a.exponent, b.exponent};
  const Rational scale(lcm_of_denominators(exps));
  const Rational ea = a.exponent * scale;
  const Rational eb = b.exponent * scale;
  const Rational lhs = power(a.base, mpz_get_ui(ea.get_num_mpz_t()));
  const Rational rhs = power(b.base, mpz_get_ui(eb.get_num_mpz_t()));
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

CostFunction::CostFunction(std::size_t horizon, Evaluator evaluator)
    : horizon_(horizon), evaluator_(std::move(evaluator)) {}

PowerTerm CostFunction::operator()(std::size_t x, std::size_t s) const {
  if (x >= s) return PowerTerm::zero();
  if (s > horizon_) {
    throw DomainError("stage " + std::to_string(s) + " beyond cost horizon " +
                      std::to_string(horizon_));
  }
  return evaluator_(x, s);
}

CostFunction make_cost(const LeftCEApprox& beta, const Rational& p) {
  if (p <= 0 || p > 1) throw DomainError("cost exponent p must lie in (0, 1]");
  return CostFunction(beta.horizon(), [beta, p](std::size_t x, std::size_t s) {
    return PowerTerm{beta[s] - beta[x], p};
  });
}

namespace {

std::size_t first_length(const std::vector<std::string>& stages) {
  return stages.empty() ? 0 : stages.front().size();
}

}  // namespace

Approximation::Approximation(std::vector<std::string> stages)
    : length_(first_length(stages)), stages_(std::move(stages)) {
  validate();
}

Approximation::Approximation(std::size_t length, std::vector<std::string> stages)
    : length_(length), stages_(std::move(stages)) {
  validate();
}

void Approximation::validate() const {
  if (stages_.empty()) throw DomainError("approximation needs at least stage 0");
  for (std::size_t s = 0; s < stages_.size(); ++s) {
    if (stages_[s].size() != length_) {
      throw DomainError("stage " + std::to_string(s) + " has length " +
                        std::to_string(stages_[s].size()) + ", expected " +
                        std::to_string(length_));
    }
    if (stages_[s].find_first_not_of("01") != std::string::npos) {
      throw DomainError("stage " + std::to_string(s) + " is not a binary string");
    }
  }
}

Approximation Approximation::random(std::size_t length, std::size_t horizon,
                                    double flip, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < flip; };
  std::vector<std::string> stages;
  std::string current(length, '0');
  for (auto& bit : current) bit = coin() ? '1' : '0';
  stages.push_back(current);
  for (std::size_t s = 1; s <= horizon; ++s) {
    for (auto& bit : current) {
      if (coin()) bit = bit == '0' ? '1' : '0';
    }
    stages.push_back(current);
  }
  return Approximation(length, std::move(stages));
}

std::optional<std::size_t> Approximation::least_change(std::size_t s) const {
  const auto& prev = stages_[s - 1];
  const auto& cur = stages_[s];
  for (std::size_t i = 0; i < length_; ++i) {
    if (prev[i] != cur[i]) return i;
  }
  return std::nullopt;
}

std::size_t Approximation::change_count(std::size_t position) const {
  std::size_t count = 0;
  for (std::size_t s = 1; s < stages_.size(); ++s) {
    if (stages_[s][position] != stages_[s - 1][position]) ++count;
  }
  return count;
}

bool Approximation::is_monotone() const {
  for (std::size_t s = 1; s < stages_.size(); ++s) {
    for (std::size_t i = 0; i < length_; ++i) {
      if (stages_[s - 1][i] == '1' && stages_[s][i] == '0') return false;
    }
  }
  return true;
}

StageIndexSequence::StageIndexSequence(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  if (indices_.empty()) throw DomainError("stage index sequence is empty");
  for (std::size_t n = 1; n < indices_.size(); ++n) {
    if (indices_[n] <= indices_[n - 1]) {
      throw DomainError("stage index sequence is not strictly increasing");
    }
  }
}

StageIndexSequence StageIndexSequence::identity(std::size_t length) {
  std::vector<std::size_t> indices(length + 1);
  for (std::size_t n = 0; n <= length; ++n) indices[n] = n;
  return StageIndexSequence(std::move(indices));
}

namespace {

void require_horizon(const Approximation& approx, const CostFunction& cost) {
  if (cost.horizon() < approx.horizon()) {
    throw DomainError("cost horizon " + std::to_string(cost.horizon()) +
                      " is shorter than approximation horizon " +
                      std::to_string(approx.horizon()));
  }
}

CostReport summarise(std::vector<Charge> charges, const CostFunction& cost,
                     const Rational& precision) {
  if (precision <= 0) throw DomainError("precision must be positive");
  CostReport report;
  Rational exact_part = 0;
  std::vector<PowerTerm> inexact;
  for (const auto& charge : charges) {
    PowerTerm term = cost(charge.position, charge.stage);
    if (auto v = term.exact_value()) {
      exact_part += *v;
    } else {
      inexact.push_back(std::move(term));
    }
  }
  report.charges = std::move(charges);
  report.exact = inexact.empty();
  if (report.exact) {
    report.value = Interval::point(exact_part);
    return report;
  }
  auto value = refine_to_width(
      [&](std::size_t bits) {
        Interval total = Interval::point(exact_part);
        for (const auto& term : inexact) total = total + term.enclose(bits);
        return total;
      },
      precision);
  if (!value) throw DomainError("requested precision is below the working-precision cap");
  report.value = *value;
  return report;
}

bool same_prefix(const std::string& a, const std::string& b, std::size_t len) {
  return a.compare(0, len, b, 0, len) == 0;
}

}  // namespace

CostReport total_cost(const Approximation& approx, const CostFunction& cost,
                      const Rational& precision) {
  require_horizon(approx, cost);
  std::vector<Charge> charges;
  for (std::size_t s = 1; s <= approx.horizon(); ++s) {
    if (auto x = approx.least_change(s)) charges.push_back({*x, s});
  }
  return summarise(std::move(charges), cost, precision);
}

std::vector<std::vector<std::size_t>> n_stages(const Approximation& approx) {
  std::vector<std::vector<std::size_t>> stages(approx.length());
  const auto& final_stage = approx.final_stage();
  for (std::size_t s = 1; s <= approx.horizon(); ++s) {
    // The first two clauses say n is the least changed position.
    auto n = approx.least_change(s);
    if (n && same_prefix(approx[s], final_stage, *n + 1)) stages[*n].push_back(s);
  }
  return stages;
}

CostReport weak_total_cost(const Approximation& approx, const CostFunction& cost,
                           const Rational& precision) {
  require_horizon(approx, cost);
  std::vector<Charge> charges;
  const auto stages = n_stages(approx);
  for (std::size_t n = 0; n < stages.size(); ++n) {
    if (!stages[n].empty()) charges.push_back({n, stages[n].back()});
  }
  return summarise(std::move(charges), cost, precision);
}

std::vector<std::vector<std::size_t>> i_n_stages(const Approximation& approx,
                                                 const StageIndexSequence& blocks) {
  const auto& idx = blocks.indices();
  if (idx.back() < approx.length()) {
    throw DomainError("stage index sequence ends at " + std::to_string(idx.back()) +
                      " but the approximation has length " +
                      std::to_string(approx.length()));
  }
  std::vector<std::vector<std::size_t>> stages(blocks.block_count());
  const auto& final_stage = approx.final_stage();
  for (std::size_t s = 1; s <= approx.horizon(); ++s) {
    auto x = approx.least_change(s);
    if (!x) continue;
    // Unchanged below i_n and changed below i_{n+1}: i_n <= x < i_{n+1}.
    auto upper = std::upper_bound(idx.begin(), idx.end(), *x);
    if (upper == idx.begin() || upper == idx.end()) continue;
    const auto n = static_cast<std::size_t>(upper - idx.begin()) - 1;
    const std::size_t end = std::min(*upper, approx.length());
    if (same_prefix(approx[s], final_stage, end)) stages[n].push_back(s);
  }
  return stages;
}

CostReport i_weak_total_cost(const Approximation& approx, const CostFunction& cost,
                             const StageIndexSequence& blocks,
                             const Rational& precision) {
  require_horizon(approx, cost);
  std::vector<Charge> charges;
  const auto stages = i_n_stages(approx, blocks);
  for (std::size_t n = 0; n < stages.size(); ++n) {
    if (!stages[n].empty()) charges.push_back({n, stages[n].back()});
  }
  return summarise(std::move(charges), cost, precision);
}

ChangeSet change_set(const Approximation& approx, const std::vector<std::size_t>& h) {
  const std::size_t length = approx.length();
  if (h.size() != length) {
    throw DomainError("change bound has " + std::to_string(h.size()) +
                      " entries for an approximation of length " +
                      std::to_string(length));
  }
  std::vector<std::size_t> starts(length + 1, 0);
  for (std::size_t n = 0; n < length; ++n) {
    const std::size_t changes = approx.change_count(n);
    if (changes > h[n]) {
      throw PreconditionError("position " + std::to_string(n) + " changes " +
                              std::to_string(changes) + " times, bound is " +
                              std::to_string(h[n]));
    }
    starts[n + 1] = starts[n] + std::max<std::size_t>(h[n], 1);
  }

  std::vector<std::string> stages;
  std::string current(starts[length], '0');
  std::vector<std::size_t> seen(length, 0);
  stages.push_back(current);
  for (std::size_t s = 1; s <= approx.horizon(); ++s) {
    for (std::size_t n = 0; n < length; ++n) {
      if (approx[s][n] != approx[s - 1][n]) {
        ++seen[n];
        current[starts[n] + seen[n] - 1] = '1';
      }
    }
    stages.push_back(current);
  }
  return {Approximation(starts[length], std::move(stages)),
          StageIndexSequence(std::move(starts))};
}

LimitReport limit_condition_report(const CostFunction& cost) {
  LimitReport report;
  const std::size_t horizon = cost.horizon();
  for (std::size_t x = 0; x <= horizon; ++x) report.final_values.push_back(cost(x, horizon));
  report.non_increasing = true;
  for (std::size_t x = 1; x < report.final_values.size(); ++x) {
    if (compare(report.final_values[x], report.final_values[x - 1]) > 0) {
      report.non_increasing = false;
    }
  }
  return report;
}

}  // namespace hypernorm
