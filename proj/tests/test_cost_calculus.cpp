#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hypernorm/cost_calculus.hpp"
#include "hypernorm/errors.hpp"
#include "support/oracles.hpp"

using namespace hypernorm;

namespace {

const LeftCEApprox kBeta3({Rational(0), Rational(1, 2), Rational(3, 4)});

Rational exact(const PowerTerm& t) {
  auto v = t.exact_value();
  REQUIRE(v.has_value());
  return *v;
}

bool is_subset(std::vector<Charge> small, std::vector<Charge> big) {
  std::sort(small.begin(), small.end());
  std::sort(big.begin(), big.end());
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("c_{beta,p} values") {
  const auto linear = make_cost(kBeta3, Rational(1));
  CHECK(exact(linear(0, 2)) == Rational(3, 4));
  CHECK(exact(linear(2, 2)) == 0);
  CHECK(exact(linear(2, 1)) == 0);
  const auto root = make_cost(kBeta3, Rational(1, 2));
  CHECK(exact(root(1, 2)) == Rational(1, 2));
  CHECK_FALSE(root(0, 1).exact_value().has_value());  // sqrt(1/2)
  CHECK_THROWS_AS(make_cost(kBeta3, Rational(0)), DomainError);
  CHECK_THROWS_AS(make_cost(kBeta3, Rational(3, 2)), DomainError);
}

TEST_CASE("left-c.e. approximations") {
  CHECK_THROWS_AS(LeftCEApprox({Rational(1, 2), Rational(1, 2)}), DomainError);
  CHECK_THROWS_AS(LeftCEApprox({Rational(1)}), DomainError);
  CHECK(LeftCEApprox::dyadic(3).values() ==
        std::vector<Rational>{0, Rational(1, 2), Rational(3, 4), Rational(7, 8)});
  CHECK(LeftCEApprox::random(10, 1).values() == LeftCEApprox::random(10, 1).values());
}

TEST_CASE("cost function monotonicity, exhaustively") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto beta = LeftCEApprox::random(12, seed);
    for (const Rational& p : {Rational(1), Rational(1, 2), Rational(2, 3)}) {
      const auto c = make_cost(beta, p);
      for (std::size_t s = 0; s <= 12; ++s) {
        for (std::size_t x = 0; x <= 12; ++x) {
          CHECK(compare(c(x + 1, s), c(x, s)) <= 0);
          if (s < 12) CHECK(compare(c(x, s), c(x, s + 1)) <= 0);
        }
      }
    }
  }
}

TEST_CASE("larger exponent gives the smaller cost") {
  const auto beta = LeftCEApprox::random(16, 3);
  const Rational exps[] = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)};
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a; b < 5; ++b) {
      const auto cp = make_cost(beta, exps[a]);
      const auto cq = make_cost(beta, exps[b]);
      for (std::size_t s = 0; s <= 16; ++s) {
        for (std::size_t x = 0; x < s; ++x) CHECK(compare(cq(x, s), cp(x, s)) <= 0);
      }
    }
  }
}

TEST_CASE("total cost examples") {
  const auto linear2 = make_cost(LeftCEApprox({Rational(0), Rational(1, 2)}), Rational(1));
  const Approximation constant({"01", "01", "01"});
  CHECK(total_cost(constant, make_cost(kBeta3, Rational(1))).value.is_point());
  CHECK(total_cost(constant, make_cost(kBeta3, Rational(1))).value.lo == 0);

  const auto single = total_cost(Approximation({"00", "10"}), linear2);
  CHECK(single.exact);
  CHECK(single.value.lo == Rational(1, 2));
  CHECK(single.charges == std::vector<Charge>{{0, 1}});

  // Least changed positions 1 then 0; c(1,1) = 0 since x >= s.
  const auto two = total_cost(Approximation({"00", "01", "11"}), make_cost(kBeta3, Rational(1)));
  CHECK(two.charges == std::vector<Charge>{{1, 1}, {0, 2}});
  CHECK(two.value.lo == Rational(3, 4));
  CHECK(two.value.is_point());

  CHECK_THROWS_AS(total_cost(Approximation({"0", "1", "0", "1"}), linear2), DomainError);
}

TEST_CASE("total cost with p < 1 respects the precision contract") {
  const auto beta = LeftCEApprox::dyadic(20);
  const auto approx = Approximation::random(5, 20, 0.3, 17);
  const auto cost = make_cost(beta, Rational(1, 3));
  const Rational precision(1, 1UL << 40);
  const auto report = total_cost(approx, cost, precision);
  CHECK(report.value.width() <= precision);
  long double reference = 0;
  for (const auto& c : report.charges) {
    const auto term = cost(c.position, c.stage);
    reference += std::pow(static_cast<long double>(term.base.get_d()), 1.0L / 3.0L);
  }
  CHECK(std::abs(report.value.lo.get_d() - static_cast<double>(reference)) < 1e-9);
}

TEST_CASE("n-stages") {
  CHECK(n_stages(Approximation({"00", "00"})) == std::vector<std::vector<std::size_t>>{{}, {}});
  CHECK(n_stages(Approximation({"00", "01"})) == std::vector<std::vector<std::size_t>>{{}, {1}});
  // Stage 1 flips position 0 but disagrees with the final value.
  CHECK(n_stages(Approximation({"00", "10", "00"})) ==
        std::vector<std::vector<std::size_t>>{{2}, {}});
}

TEST_CASE("weak total cost examples") {
  const auto linear2 = make_cost(LeftCEApprox({Rational(0), Rational(1, 2)}), Rational(1));
  CHECK(weak_total_cost(Approximation({"00", "00"}), linear2).value.lo == 0);
  const auto w = weak_total_cost(Approximation({"00", "01"}), linear2);
  CHECK(w.charges == std::vector<Charge>{{1, 1}});
  CHECK(w.value.lo == 0);  // c(1,1) = 0
  const auto w0 = weak_total_cost(Approximation({"00", "10"}), linear2);
  CHECK(w0.value.lo == Rational(1, 2));
}

TEST_CASE("I-weak total cost") {
  const auto cost = make_cost(LeftCEApprox::dyadic(4), Rational(1));
  const StageIndexSequence pairs({0, 2, 4});
  const auto r = i_weak_total_cost(Approximation({"0000", "0010"}), cost, pairs);
  CHECK(r.charges == std::vector<Charge>{{1, 1}});
  CHECK(i_weak_total_cost(Approximation({"0000", "0000"}), cost, pairs).charges.empty());
  CHECK_THROWS_AS(i_weak_total_cost(Approximation({"0000", "0010"}), cost,
                                    StageIndexSequence({0, 2})),
                  DomainError);
  CHECK_THROWS_AS(StageIndexSequence({0, 2, 2}), DomainError);
}

TEST_CASE("stage clauses agree with literal evaluation on random approximations") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t length = 1 + rng() % 6;
    const std::size_t horizon = rng() % 12;
    const auto approx = Approximation::random(length, horizon, 0.25, rng());
    const auto stages = n_stages(approx);
    for (std::size_t n = 0; n < length; ++n) {
      std::vector<std::size_t> expected;
      for (std::size_t s = 1; s <= horizon; ++s) {
        if (oracle::is_n_stage(approx.stages(), s, n)) expected.push_back(s);
      }
      CHECK(stages[n] == expected);
    }
    std::vector<std::size_t> idx{0};
    while (idx.back() < length) idx.push_back(idx.back() + 1 + rng() % 3);
    const StageIndexSequence blocks(idx);
    const auto i_stages = i_n_stages(approx, blocks);
    for (std::size_t n = 0; n + 1 < idx.size(); ++n) {
      std::vector<std::size_t> expected;
      for (std::size_t s = 1; s <= horizon; ++s) {
        if (oracle::is_i_n_stage(approx.stages(), s, idx[n], idx[n + 1])) expected.push_back(s);
      }
      CHECK(i_stages[n] == expected);
    }
  }
}

TEST_CASE("weak cost never exceeds total cost; identity I reproduces weak cost") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t length = 1 + rng() % 8;
    const std::size_t horizon = rng() % 20;
    const auto approx = Approximation::random(length, horizon, 0.2, rng());
    const auto cost = make_cost(LeftCEApprox::random(horizon, rng()), Rational(1));
    const auto weak = weak_total_cost(approx, cost);
    const auto total = total_cost(approx, cost);
    CHECK(weak.value.hi <= total.value.lo);
    CHECK(is_subset(weak.charges, total.charges));
    const auto iw = i_weak_total_cost(approx, cost, StageIndexSequence::identity(length));
    CHECK(iw.charges == weak.charges);
    CHECK(iw.value.lo == weak.value.lo);
  }
}

TEST_CASE("change set examples") {
  const auto constant = change_set(Approximation({"00", "00"}), {2, 2});
  CHECK(constant.set.stages() == std::vector<std::string>{"0000", "0000"});

  const auto one = change_set(Approximation({"00", "01"}), {2, 2});
  CHECK(one.blocks.indices() == std::vector<std::size_t>{0, 2, 4});
  CHECK(one.set.stages() == std::vector<std::string>{"0000", "0010"});

  CHECK_THROWS_AS(change_set(Approximation({"0", "1", "0"}), {1}), PreconditionError);
  CHECK_THROWS_AS(change_set(Approximation({"0", "1"}), {1, 1}), DomainError);
}

TEST_CASE("change set properties on random approximations") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t length = 1 + rng() % 6;
    const std::size_t horizon = rng() % 16;
    const auto approx = Approximation::random(length, horizon, 0.2, rng());
    std::vector<std::size_t> h(length);
    for (std::size_t n = 0; n < length; ++n) h[n] = approx.change_count(n) + rng() % 2;
    const auto cs = change_set(approx, h);
    CHECK(cs.set.is_monotone());
    const auto beta = LeftCEApprox::random(horizon, rng());
    const auto linear = make_cost(beta, Rational(1));
    CHECK(total_cost(cs.set, linear).value.lo <= total_cost(approx, linear).value.lo);
    // Every block charge of C is a position charge of A at the same stage.
    const auto root = make_cost(beta, Rational(1, 2));
    const auto c_charges = i_weak_total_cost(cs.set, root, cs.blocks).charges;
    CHECK(is_subset(c_charges, weak_total_cost(approx, root).charges));
  }
}

TEST_CASE("change set can drop a weak charge that A keeps") {
  // Position 0 flips out and back after the 1-stage at stage 1, so A still
  // agrees with its final value there but C does not.
  const Approximation approx({"00", "01", "11", "01"});
  const auto cs = change_set(approx, {2, 1});
  const auto cost = make_cost(LeftCEApprox::dyadic(3), Rational(1));
  CHECK(weak_total_cost(approx, cost).charges == std::vector<Charge>{{0, 3}, {1, 1}});
  CHECK(i_weak_total_cost(cs.set, cost, cs.blocks).charges == std::vector<Charge>{{0, 3}});
}

TEST_CASE("limit condition report") {
  const auto beta = LeftCEApprox::dyadic(5);
  const auto report = limit_condition_report(make_cost(beta, Rational(1)));
  REQUIRE(report.final_values.size() == 6);
  CHECK(report.non_increasing);
  for (std::size_t x = 0; x < 5; ++x) {
    CHECK(exact(report.final_values[x]) == beta[5] - beta[x]);
    CHECK(compare(report.final_values[x + 1], report.final_values[x]) < 0);
  }
  CHECK(exact(report.final_values[5]) == 0);
  const auto root = limit_condition_report(make_cost(beta, Rational(1, 2)));
  CHECK(root.non_increasing);
  CHECK(compare(root.final_values[1], root.final_values[0]) < 0);
}
