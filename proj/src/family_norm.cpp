#include "hypernorm/family_norm.hpp"

#include <bit>

#include "hypernorm/errors.hpp"

namespace hypernorm {

CoordSet CoordSet::from_coordinates(const std::vector<std::size_t>& coords) {
  std::uint64_t bits = 0;
  for (auto c : coords) {
    if (c < 1 || c > 64) {
      throw DomainError("coordinate " + std::to_string(c) + " outside 1..64");
    }
    bits |= std::uint64_t{1} << (c - 1);
  }
  return CoordSet(bits);
}

CoordSet CoordSet::full(std::size_t n) {
  if (n > 64) throw DomainError("at most 64 coordinates are supported");
  return CoordSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::size_t CoordSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> CoordSet::coordinates() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((bits_ >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

std::size_t CoordSet::max_coordinate() const {
  return bits_ == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(bits_));
}

SetFamily::SetFamily(std::size_t n, std::vector<CoordSet> sets)
    : n_(n), sets_(std::move(sets)) {
  if (n_ == 0) throw DomainError("ground set size must be at least 1");
  if (n_ > 64) throw DomainError("ground set size above 64 is not supported");
  if (sets_.empty()) throw DomainError("set family must be nonempty");
  for (const auto& s : sets_) {
    if (s.max_coordinate() > n_) {
      throw DomainError("set mentions coordinate " +
                        std::to_string(s.max_coordinate()) + " > n = " +
                        std::to_string(n_));
    }
  }
}

bool SetFamily::contains_empty_set() const {
  for (const auto& s : sets_) {
    if (s.empty()) return true;
  }
  return false;
}

CoordSet SetFamily::intersection() const {
  CoordSet acc = CoordSet::full(n_);
  for (const auto& s : sets_) acc = acc & s;
  return acc;
}

std::vector<std::pair<std::size_t, std::size_t>> SetFamily::duplicates() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 1; j < sets_.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (sets_[i] == sets_[j]) {
        out.emplace_back(i, j);
        break;
      }
    }
  }
  return out;
}

LinearProgram SetFamily::incidence_lp() const {
  LinearProgram lp;
  lp.num_vars = sets_.size();
  lp.num_constraints = n_;
  lp.matrix.assign(n_, std::vector<Rational>(sets_.size()));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      if (sets_[j].contains(i + 1)) lp.matrix[i][j] = 1;
    }
  }
  lp.objective.assign(sets_.size(), Rational(1));
  lp.rhs.assign(n_, Rational(1));
  return lp;
}

bool Weighting::is_normalised(const SetFamily& family) const {
  if (values.size() != family.size()) return false;
  for (const auto& v : values) {
    if (v < 0) return false;
  }
  for (std::size_t i = 1; i <= family.n(); ++i) {
    Rational load = 0;
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (family[j].contains(i)) load += values[j];
    }
    if (load > 1) return false;
  }
  return true;
}

Rational CoordWeighting::weight_of(CoordSet set) const {
  Rational w = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (set.contains(i + 1)) w += values[i];
  }
  return w;
}

bool CoordWeighting::is_normalised(const SetFamily& family) const {
  if (values.size() != family.n()) return false;
  for (const auto& v : values) {
    if (v < 0) return false;
  }
  for (const auto& s : family.sets()) {
    if (weight_of(s) < 1) return false;
  }
  return true;
}

Rational NormResult::reciprocal() const {
  return value ? Rational(1 / *value) : Rational(0);
}

NormResult norm(const SetFamily& family) {
  NormResult out;
  for (const auto& [first, later] : family.duplicates()) {
    out.warnings.push_back("member " + std::to_string(later + 1) +
                           " duplicates member " + std::to_string(first + 1));
  }
  if (family.contains_empty_set()) return out;

  const LinearProgram lp = family.incidence_lp();
  const LPResult result = solve_max(lp);
  if (result.status != LPStatus::Optimal) {
    // Every column of a family without the empty set has a 1 in it, so the
    // feasible region is bounded.
    throw InvariantViolation("incidence LP without an empty member is unbounded");
  }
  if (auto verdict = verify_certificates(lp, result); !verdict) {
    throw InvariantViolation("norm certificates rejected: " + verdict.reason);
  }
  out.value = *result.optimal_value;
  out.primal = Weighting{result.primal};
  out.dual = CoordWeighting{result.dual};
  return out;
}

Rational k_subsets_norm(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) {
    throw DomainError("k-subsets norm needs 1 <= k <= n (got n=" +
                      std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  return make_rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
}

namespace {

// Lexicographic k-combinations of {1..n}.
std::vector<CoordSet> combinations(std::size_t n, std::size_t k) {
  std::vector<CoordSet> out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    out.push_back(CoordSet::from_coordinates(pick));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

void require_degenerate_range(std::size_t n, std::size_t k) {
  if (!(1 < k && k < n)) {
    throw DomainError("degenerate family needs 1 < k < n (got n=" +
                      std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  if (n > 64) throw DomainError("ground set size above 64 is not supported");
}

Rational binomial(std::size_t n, std::size_t k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace

SetFamily k_subsets_family(std::size_t n, std::size_t k) {
  k_subsets_norm(n, k);
  if (n > 64) throw DomainError("ground set size above 64 is not supported");
  return SetFamily(n, combinations(n, k));
}

SetFamily cyclic_family(std::size_t n, std::size_t k) {
  if (!(0 < k && k < n)) {
    throw DomainError("cyclic family needs 0 < k < n (got n=" +
                      std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  if (n > 64) throw DomainError("ground set size above 64 is not supported");
  std::vector<CoordSet> sets;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> window;
    for (std::size_t j = 0; j < k; ++j) window.push_back((i + j) % n + 1);
    sets.push_back(CoordSet::from_coordinates(window));
  }
  return SetFamily(n, std::move(sets));
}

SetFamily degenerate_family(std::size_t n, std::size_t k) {
  require_degenerate_range(n, k);
  auto sets = combinations(n, k);
  sets.push_back(CoordSet::full(k - 1));
  return SetFamily(n, std::move(sets));
}

Rational degenerate_norm(std::size_t n, std::size_t k) {
  require_degenerate_range(n, k);
  const auto sn = static_cast<std::int64_t>(n);
  const auto sk = static_cast<std::int64_t>(k);
  Rational a = make_rational(sk, sn + 1);
  Rational b = make_rational(sk - 1, sn - 1);
  return 1 / (a > b ? a : b);
}

std::pair<Weighting, CoordWeighting> degenerate_certificates(std::size_t n,
                                                             std::size_t k) {
  require_degenerate_range(n, k);
  const SetFamily family = degenerate_family(n, k);
  const CoordSet lower = CoordSet::full(k - 1);            // G = {1..k-1}
  const CoordSet upper = CoordSet::full(n) & CoordSet(~lower.bits());  // {k..n}
  const Rational kk = static_cast<unsigned long>(k);
  const Rational nn = static_cast<unsigned long>(n);

  Weighting x{std::vector<Rational>(family.size(), Rational(0))};
  CoordWeighting y{std::vector<Rational>(n)};
  const std::size_t g_index = family.size() - 1;

  if (2 * k - 1 <= n) {
    x.values[g_index] = 1;
    const Rational weight =
        (nn - kk + 1) / (kk * binomial(n - k + 1, k));
    for (std::size_t j = 0; j < g_index; ++j) {
      if (family[j].is_subset_of(upper)) x.values[j] = weight;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      y.values[i - 1] = lower.contains(i) ? Rational(1 / (kk - 1)) : Rational(1 / kk);
    }
  } else {
    x.values[g_index] = (nn - kk) / (kk - 1);
    const Rational weight = 1 / binomial(k - 1, 2 * k - 1 - n);
    for (std::size_t j = 0; j < g_index; ++j) {
      if (upper.is_subset_of(family[j])) x.values[j] = weight;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      y.values[i - 1] = lower.contains(i)
                            ? Rational(1 / (kk - 1))
                            : Rational((nn - kk) / ((nn - kk + 1) * (kk - 1)));
    }
  }
  for (auto& v : x.values) v.canonicalize();
  for (auto& v : y.values) v.canonicalize();
  return {std::move(x), std::move(y)};
}

}  // namespace hypernorm
