#include <doctest.h>

#include <random>

#include "hypernorm/errors.hpp"
#include "hypernorm/projection.hpp"
#include "support/oracles.hpp"

using namespace hypernorm;

namespace {

const FiniteRelation kDiagonal3({2, 2, 2}, {{0, 0, 0}, {1, 1, 0}});
const FiniteRelation kDiagonal2({2, 2}, {{0, 0}, {1, 1}});

Weighting constant_weighting(const SetFamily& family) {
  return Weighting{std::vector<Rational>(family.size(),
                                         Rational(1, static_cast<unsigned long>(family.size())))};
}

}  // namespace

TEST_CASE("relative sizes") {
  CHECK(relative_size(FiniteRelation::full({2, 2})) == 1);
  CHECK(relative_size(FiniteRelation({2, 2}, {})) == 0);
  CHECK(relative_size(kDiagonal2) == Rational(1, 2));
  CHECK(relative_size(kDiagonal2) == oracle::counted_relative_size(kDiagonal2));
}

TEST_CASE("relation construction") {
  const FiniteRelation dup({2}, {{1}, {0}, {1}});
  CHECK(dup.tuples() == std::vector<Tuple>{{0}, {1}});
  CHECK_THROWS_AS(FiniteRelation({2, 2}, {{0, 2}}), DomainError);
  CHECK_THROWS_AS(FiniteRelation({2, 2}, {{0}}), DomainError);
  CHECK_THROWS_AS(FiniteRelation({2, 0}, {}), DomainError);
}

TEST_CASE("projection") {
  const auto full = FiniteRelation::full({2, 3, 2});
  CHECK(project(full, CoordSet::from_coordinates({1, 3})) == FiniteRelation::full({2, 2}));
  CHECK(project(kDiagonal3, CoordSet::from_coordinates({1, 2})) == kDiagonal2);
  const FiniteRelation collapse({2, 2}, {{0, 0}, {1, 0}});
  CHECK(project(collapse, CoordSet::from_coordinates({2})) == FiniteRelation({2}, {{0}}));
  CHECK_THROWS_AS(project(kDiagonal3, CoordSet()), DomainError);
  CHECK_THROWS_AS(project(kDiagonal3, CoordSet::from_coordinates({4})), DomainError);
  CHECK(project(kDiagonal3, CoordSet::full(3)) == kDiagonal3);
}

TEST_CASE("projection is functorial") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rel = oracle::random_relation(rng, 4, 3);
    const std::size_t n = rel.arity();
    const CoordSet f(1 + rng() % ((std::uint64_t{1} << n) - 1));
    const auto kept = f.coordinates();
    // G as a subset of F, and its reindexing inside pi_F.
    std::vector<std::size_t> g, g_inside;
    for (std::size_t pos = 0; pos < kept.size(); ++pos) {
      if (pos == 0 || rng() % 2 == 0) {
        g.push_back(kept[pos]);
        g_inside.push_back(pos + 1);
      }
    }
    CHECK(project(project(rel, f), CoordSet::from_coordinates(g_inside)) ==
          project(rel, CoordSet::from_coordinates(g)));
  }
}

TEST_CASE("shearer check examples") {
  const auto pairs = k_subsets_family(3, 2);
  const auto full = FiniteRelation::full({2, 2, 2});
  const auto report_full = shearer_check(full, pairs, constant_weighting(pairs));
  CHECK(report_full.comparison.equality());

  const Weighting halves{std::vector<Rational>(3, Rational(1, 2))};
  const auto report = shearer_check(kDiagonal3, pairs, halves);
  CHECK(report.relation_size == Rational(1, 4));
  CHECK(report.projected_sizes == std::vector<Rational>(3, Rational(1, 2)));
  CHECK(report.exponent_scale == 2);
  CHECK(report.comparison.lhs == Rational(1, 16));
  CHECK(report.comparison.rhs == Rational(1, 8));
  CHECK(report.comparison.holds());

  const SetFamily singletons(2, {CoordSet(0b01), CoordSet(0b10)});
  const auto r2 = shearer_check(kDiagonal2, singletons, Weighting{{1, 1}});
  CHECK(r2.comparison.lhs == Rational(1, 2));
  CHECK(r2.comparison.rhs == 1);
  CHECK(r2.comparison.holds());
}

TEST_CASE("shearer check preconditions") {
  const auto pairs = k_subsets_family(3, 2);
  CHECK_THROWS_AS(shearer_check(kDiagonal3, pairs, Weighting{{1, 1, 1}}), PreconditionError);
  CHECK_THROWS_AS(shearer_check(kDiagonal2, pairs, constant_weighting(pairs)), DomainError);
}

TEST_CASE("shearer holds on every relation of arity 2 for every vertex weighting") {
  for (const auto& family : oracle::all_families(2)) {
    const auto vertices = oracle::weighting_vertices(family);
    for (const auto& rel : oracle::all_relations({2, 2})) {
      for (const auto& x : vertices) {
        CHECK(shearer_check(rel, family, x).comparison.holds());
      }
    }
  }
}

TEST_CASE("amgm step") {
  const std::vector<Rational> halves{Rational(1, 2), Rational(1, 2)};
  auto eq = amgm_step_check({1, 1}, {1, 1}, halves);
  CHECK(eq.verdict == Verdict::Hold);
  CHECK(eq.equality);
  CHECK(eq.lhs.contains(2));

  auto strict = amgm_step_check({4, 1}, {1, 4}, halves);
  CHECK(strict.verdict == Verdict::Hold);
  CHECK_FALSE(strict.equality);
  CHECK(strict.lhs.contains(4));
  CHECK(strict.rhs.contains(5));

  auto zeros = amgm_step_check({0, 5}, {3, 0}, halves);
  CHECK(zeros.verdict == Verdict::Hold);
  CHECK_FALSE(zeros.equality);
  CHECK(zeros.lhs.contains(0));

  CHECK_THROWS_AS(amgm_step_check({1}, {1}, {Rational(1, 2)}), PreconditionError);
  CHECK_THROWS_AS(amgm_step_check({1, 1}, {1}, halves), PreconditionError);
}

TEST_CASE("amgm step on random rational inputs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + rng() % 4;
    std::vector<Rational> s0, s1, x;
    Rational left = 1;
    for (std::size_t i = 0; i < len; ++i) {
      s0.emplace_back(static_cast<unsigned long>(rng() % 6), static_cast<unsigned long>(1 + rng() % 4));
      s1.emplace_back(static_cast<unsigned long>(rng() % 6), static_cast<unsigned long>(1 + rng() % 4));
      s0.back().canonicalize();
      s1.back().canonicalize();
      if (i + 1 == len) {
        x.push_back(left);
      } else {
        Rational part(static_cast<unsigned long>(rng() % 4), 4UL);
        part.canonicalize();
        part *= left;
        x.push_back(part);
        left -= part;
      }
    }
    const auto v = amgm_step_check(s0, s1, x);
    CHECK(v.verdict == Verdict::Hold);
    if (v.equality) CHECK(v.lhs.overlaps(v.rhs));
  }
  // Proportional columns give equality.
  CHECK(amgm_step_check({1, 2}, {3, 6}, {Rational(1, 3), Rational(2, 3)}).equality);
}

TEST_CASE("geometric witness") {
  const auto pairs = k_subsets_family(3, 2);
  const auto full = geometric_witness(FiniteRelation::full({2, 2, 2}), pairs);
  CHECK(full.index == 0);
  CHECK(full.comparison.equality());

  const auto w = geometric_witness(kDiagonal3, pairs);
  CHECK(w.norm == Rational(3, 2));
  CHECK(w.comparison.lhs == Rational(1, 16));
  CHECK(w.comparison.rhs == Rational(1, 8));

  const auto empty = geometric_witness(FiniteRelation({2, 2, 2}, {}), pairs);
  CHECK(empty.index == 0);
  CHECK(empty.comparison.lhs == 0);
  CHECK(empty.comparison.rhs == 0);

  CHECK_THROWS_AS(geometric_witness(kDiagonal3, SetFamily(3, {CoordSet()})), DomainError);
}

TEST_CASE("sharp boxes") {
  const auto pairs = k_subsets_family(3, 2);
  const auto unit = sharp_box(pairs, Rational(1));
  CHECK(unit.base == 1);
  CHECK(unit.measure_exponent() == 1);

  const auto box = sharp_box(pairs, Rational(1, 2));
  CHECK(box.exponents == std::vector<Rational>(3, Rational(1, 3)));
  const auto report = sharpness_report(pairs, box, norm(pairs));
  CHECK(report.ok());
  CHECK(report.target == Rational(2, 3));
  CHECK(report.projection_exponents == std::vector<Rational>(3, Rational(2, 3)));

  const SetFamily split(3, {CoordSet(0b011), CoordSet(0b100)});
  const auto result = norm(split);
  const auto split_box = sharp_box(split, Rational(1, 3));
  std::vector<Rational> expected;
  for (const auto& y : result.dual->values) expected.push_back(y / 2);
  CHECK(split_box.exponents == expected);
  const auto split_report = sharpness_report(split, split_box, result);
  CHECK(split_report.ok());
  CHECK(split_report.projection_exponents == std::vector<Rational>(2, Rational(1, 2)));

  CHECK_THROWS_AS(sharp_box(pairs, Rational(0)), DomainError);
  CHECK_THROWS_AS(sharp_box(pairs, Rational(3, 2)), DomainError);
  CHECK_THROWS_AS(sharp_box(SetFamily(2, {CoordSet()}), Rational(1, 2)), DomainError);
}

TEST_CASE("loomis-whitney examples") {
  CHECK(loomis_whitney_check(FiniteRelation::full({2, 2, 2})).equality());
  const auto diag = loomis_whitney_check(kDiagonal3);
  CHECK(diag.lhs == Rational(1, 16));
  CHECK(diag.rhs == Rational(1, 8));
  const auto single = loomis_whitney_check(FiniteRelation({2, 2}, {{1, 0}}));
  CHECK(single.lhs == Rational(1, 4));
  CHECK(single.equality());
  CHECK_THROWS_AS(loomis_whitney_check(FiniteRelation({3}, {{0}})), DomainError);
}
