#include "hypernorm/projection.hpp"

#include <algorithm>

#include "hypernorm/errors.hpp"

namespace hypernorm {

FiniteRelation::FiniteRelation(std::vector<std::uint32_t> sizes,
                               std::vector<Tuple> tuples)
    : sizes_(std::move(sizes)), tuples_(std::move(tuples)) {
  if (sizes_.empty()) throw DomainError("relation needs at least one coordinate");
  if (sizes_.size() > 64) throw DomainError("relation arity above 64 is not supported");
  for (auto s : sizes_) {
    if (s == 0) throw DomainError("every coordinate set must be nonempty");
  }
  for (const auto& t : tuples_) {
    if (t.size() != sizes_.size()) {
      throw DomainError("tuple of arity " + std::to_string(t.size()) +
                        " in a relation of arity " + std::to_string(sizes_.size()));
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= sizes_[i]) {
        throw DomainError("tuple entry " + std::to_string(t[i]) +
                          " out of range for coordinate " + std::to_string(i + 1));
      }
    }
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

FiniteRelation FiniteRelation::full(std::vector<std::uint32_t> sizes) {
  std::vector<Tuple> tuples;
  if (!sizes.empty() && std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s > 0; })) {
    Tuple t(sizes.size(), 0);
    while (true) {
      tuples.push_back(t);
      std::size_t i = t.size();
      while (i > 0 && t[i - 1] + 1 == sizes[i - 1]) t[--i] = 0;
      if (i == 0) break;
      ++t[i - 1];
    }
  }
  return FiniteRelation(std::move(sizes), std::move(tuples));
}

BigInt FiniteRelation::ambient_size() const {
  BigInt total = 1;
  for (auto s : sizes_) total *= static_cast<unsigned long>(s);
  return total;
}

Rational relative_size(const FiniteRelation& rel) {
  return make_rational(BigInt(static_cast<unsigned long>(rel.tuples().size())),
                       rel.ambient_size());
}

FiniteRelation project(const FiniteRelation& rel, CoordSet coords) {
  if (coords.empty()) throw DomainError("projection onto the empty coordinate set");
  if (coords.max_coordinate() > rel.arity()) {
    throw DomainError("projection coordinate " +
                      std::to_string(coords.max_coordinate()) +
                      " exceeds arity " + std::to_string(rel.arity()));
  }
  const auto keep = coords.coordinates();
  std::vector<std::uint32_t> sizes;
  for (auto c : keep) sizes.push_back(rel.sizes()[c - 1]);
  std::vector<Tuple> image;
  image.reserve(rel.tuples().size());
  for (const auto& t : rel.tuples()) {
    Tuple p;
    p.reserve(keep.size());
    for (auto c : keep) p.push_back(t[c - 1]);
    image.push_back(std::move(p));
  }
  return FiniteRelation(std::move(sizes), std::move(image));
}

namespace {

unsigned long to_ulong(const Rational& integral, const char* what) {
  if (integral.get_den() != 1 || integral < 0 ||
      !mpz_fits_ulong_p(integral.get_num_mpz_t())) {
    throw DomainError(std::string(what) + " does not fit an exponent");
  }
  return mpz_get_ui(integral.get_num_mpz_t());
}

void require_finite_members(const SetFamily& family, const FiniteRelation& rel) {
  if (family.n() != rel.arity()) {
    throw DomainError("family over " + std::to_string(family.n()) +
                      " coordinates, relation of arity " + std::to_string(rel.arity()));
  }
  if (family.contains_empty_set()) {
    throw DomainError("family contains the empty set");
  }
}

}  // namespace

ProjectionReport shearer_check(const FiniteRelation& rel,
                               const SetFamily& family,
                               const Weighting& weighting) {
  require_finite_members(family, rel);
  if (!weighting.is_normalised(family)) {
    throw PreconditionError("weighting is not normalised for the family");
  }
  ProjectionReport report;
  report.relation_size = relative_size(rel);
  report.exponent_scale = lcm_of_denominators(weighting.values);
  const Rational scale(report.exponent_scale);

  report.comparison.lhs = power(report.relation_size, to_ulong(scale, "common denominator"));
  report.comparison.rhs = 1;
  for (std::size_t j = 0; j < family.size(); ++j) {
    report.projected_sizes.push_back(relative_size(project(rel, family[j])));
    const unsigned long e = to_ulong(weighting.values[j] * scale, "scaled weight");
    report.comparison.rhs *= power(report.projected_sizes.back(), e);
  }
  return report;
}

AmgmVerdict amgm_step_check(const std::vector<Rational>& s0,
                            const std::vector<Rational>& s1,
                            const std::vector<Rational>& x) {
  if (s0.size() != x.size() || s1.size() != x.size()) {
    throw PreconditionError("amgm step needs vectors of equal length");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (s0[i] < 0 || s1[i] < 0 || x[i] < 0) {
      throw PreconditionError("amgm step needs nonnegative inputs");
    }
  }
  if (sum(x) != 1) throw PreconditionError("amgm step weights must sum to 1");

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0) support.push_back(i);
  }

  // Clear denominators: each side is a D-th root of an exact rational.
  const BigInt scale_int = lcm_of_denominators(x);
  const Rational scale(scale_int);
  Rational a = 1, b = 1, c = 1;
  for (auto i : support) {
    const unsigned long e = to_ulong(x[i] * scale, "scaled weight");
    a *= power(s0[i], e);
    b *= power(s1[i], e);
    c *= power(s0[i] + s1[i], e);
  }
  const Rational root = 1 / scale;
  auto enclose = [&](std::size_t bits) {
    AmgmVerdict v;
    v.lhs = power_enclosure(a, root, bits) + power_enclosure(b, root, bits);
    v.rhs = power_enclosure(c, root, bits);
    return v;
  };

  bool equal = false;
  if (c == 0) {
    equal = true;  // some S_F = 0 on the support, so every product vanishes
  } else {
    // Equality in weighted AM-GM: s0_F / (s0_F + s1_F) constant on support.
    equal = true;
    const Rational t0 = s0[support.front()] / (s0[support.front()] + s1[support.front()]);
    for (auto i : support) {
      if (s0[i] / (s0[i] + s1[i]) != t0) {
        equal = false;
        break;
      }
    }
  }
  if (equal) {
    AmgmVerdict v = enclose(bits_for_width(default_precision()));
    v.verdict = Verdict::Hold;
    v.equality = true;
    return v;
  }

  for (std::size_t bits = 64; bits <= kMaxWorkingBits; bits *= 2) {
    AmgmVerdict v = enclose(bits);
    if (v.lhs.hi < v.rhs.lo) {
      v.verdict = Verdict::Hold;
      return v;
    }
    if (v.lhs.lo > v.rhs.hi) {
      v.verdict = Verdict::Violate;
      return v;
    }
  }
  AmgmVerdict v = enclose(kMaxWorkingBits);
  v.verdict = Verdict::Undecided;
  return v;
}

GeometricWitness geometric_witness(const FiniteRelation& rel,
                                   const SetFamily& family) {
  require_finite_members(family, rel);
  const NormResult result = norm(family);
  const Rational& value = *result.value;
  const unsigned long a = to_ulong(Rational(value.get_num()), "norm numerator");
  const unsigned long b = to_ulong(Rational(value.get_den()), "norm denominator");
  const Rational base = power(relative_size(rel), b);
  for (std::size_t j = 0; j < family.size(); ++j) {
    Rational projected = power(relative_size(project(rel, family[j])), a);
    if (base <= projected) {
      return {j, family[j], value, Comparison{base, projected}};
    }
  }
  throw InvariantViolation("no member of the family satisfies the projection bound");
}

Rational SymbolicBox::projection_exponent(CoordSet coords) const {
  Rational total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (coords.contains(i + 1)) total += exponents[i];
  }
  return total;
}

SymbolicBox sharp_box(const SetFamily& family, const Rational& c) {
  if (c <= 0 || c > 1) throw DomainError("box base must lie in (0, 1]");
  const NormResult result = norm(family);
  if (result.is_infinite()) throw DomainError("family has infinite norm");
  SymbolicBox box{c, {}};
  for (const auto& y : result.dual->values) box.exponents.push_back(y / *result.value);
  return box;
}

SharpnessReport sharpness_report(const SetFamily& family,
                                 const SymbolicBox& box,
                                 const NormResult& result) {
  if (result.is_infinite()) throw DomainError("family has infinite norm");
  SharpnessReport report;
  report.target = 1 / *result.value;
  report.unit_measure_exponent = box.measure_exponent() == 1;
  report.all_at_least_target = true;
  report.tight_members_attain_target = true;
  for (const auto& member : family.sets()) {
    const Rational e = box.projection_exponent(member);
    const bool tight = result.dual->weight_of(member) == 1;
    report.projection_exponents.push_back(e);
    report.dual_tight.push_back(tight);
    if (e < report.target) report.all_at_least_target = false;
    if (tight && e != report.target) report.tight_members_attain_target = false;
  }
  return report;
}

Comparison loomis_whitney_check(const FiniteRelation& rel) {
  const std::size_t n = rel.arity();
  if (n < 2) throw DomainError("Loomis-Whitney needs arity at least 2");
  Comparison cmp{power(relative_size(rel), n - 1), Rational(1)};
  const CoordSet all = CoordSet::full(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const CoordSet drop_j = all & CoordSet(~(std::uint64_t{1} << (j - 1)));
    cmp.rhs *= relative_size(project(rel, drop_j));
  }
  return cmp;
}

}  // namespace hypernorm
