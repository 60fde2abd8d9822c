#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "glinvest/analysis.hpp"
#include "glinvest/error.hpp"
#include "glinvest/optimizer.hpp"
#include "support.hpp"

using namespace glinvest;
using glinvest::testing::brute_force_argmax;
using glinvest::testing::make_period;
using glinvest::testing::Sampler;

namespace {

PlannedScenario one_period(bool disruptive, double z) {
  return PlannedScenario{Scenario{disruptive ? "B" : "A", {make_period(0.5, 100.0, 1.0, 1.0, disruptive)}},
                         InvestmentPlan{{z}}};
}

DeltaZReport report_with(double enbis_a, double enbis_b) {
  DeltaZReport r;
  r.enbis_a = enbis_a;
  r.enbis_b = enbis_b;
  r.delta_z = enbis_a - enbis_b;
  r.period_count = 1;
  return r;
}

}  // namespace

TEST_CASE("delta_z examples") {
  const PlannedScenario a = one_period(false, 1.0);
  const PlannedScenario b = one_period(true, 1.0);

  const DeltaZReport same = delta_z(a, a);
  CHECK(same.delta_z == 0.0);
  CHECK(same.period_count == 1);

  const DeltaZReport ab = delta_z(a, b);
  CHECK(ab.enbis_a == doctest::Approx(24.0).epsilon(1e-12));
  CHECK(ab.enbis_b == doctest::Approx(36.5).epsilon(1e-12));
  CHECK(ab.delta_z == doctest::Approx(-12.5).epsilon(1e-12));
  CHECK(ab.delta_z == ab.enbis_a - ab.enbis_b);
  CHECK(delta_z(b, a).delta_z == -ab.delta_z);
}

TEST_CASE("delta_z rejects unequal horizons") {
  PlannedScenario a = one_period(false, 1.0);
  PlannedScenario b = one_period(true, 1.0);
  b.scenario.periods.push_back(b.scenario.periods.front());
  b.plan.amounts.push_back(1.0);
  CHECK_THROWS_WITH_AS(static_cast<void>(delta_z(a, b)),
                       doctest::Contains("must be equal in order to proceed"), ContractError);
}

TEST_CASE("classify_disruptive examples") {
  DeltaZReport equal = report_with(24.0, 24.0);
  CHECK_FALSE(classify_disruptive(equal, 0.0));
  CHECK_FALSE(classify_disruptive(equal, 0.10));
  CHECK_FALSE(equal.classified_disruptive);

  DeltaZReport big = report_with(24.0, 36.5);
  CHECK(classify_disruptive(big, 0.10));
  CHECK(big.classified_disruptive);
  CHECK(big.threshold_used == 0.10);

  DeltaZReport small = report_with(24.0, 25.0);
  CHECK_FALSE(classify_disruptive(small, 0.10));
  CHECK(classify_disruptive(small, 0.0));

  // Nonpositive baseline falls back to an absolute gap.
  DeltaZReport negative = report_with(-5.0, -4.0);
  CHECK_FALSE(classify_disruptive(negative, 0.5));
  CHECK(classify_disruptive(negative, 0.1));
  DeltaZReport zero = report_with(0.0, 0.05);
  CHECK_FALSE(classify_disruptive(zero, 0.10));
  CHECK(classify_disruptive(zero, 0.01));

  CHECK_THROWS_AS(classify_disruptive(big, -0.1), DomainError);
}

TEST_CASE("productivity_ratio examples") {
  CHECK(productivity_ratio(InvestmentPlan{{3.0, 4.0}}, InvestmentPlan{{3.0, 4.0}}) == 1.0);
  CHECK(productivity_ratio(InvestmentPlan{{4.0, 6.0}}, InvestmentPlan{{5.0}}) == 0.5);

  const PeriodSpec base = make_period(0.5, 20.0, 1.0, 1.0, false);
  const InvestmentPlan a = optimize_scenario(Scenario{"a", {base}}).plan;
  const InvestmentPlan b = optimize_scenario(Scenario{"b", {with_disruption(base, true)}}).plan;
  CHECK(productivity_ratio(a, b) == doctest::Approx(0.792875793972455265).epsilon(1e-12));
  // Both optima re-derived by brute force.
  const double oracle = brute_force_argmax(with_disruption(base, true), 10.0, 1e-5) /
                        brute_force_argmax(base, 10.0, 1e-5);
  CHECK(std::abs(productivity_ratio(a, b) - oracle) <= 1e-4);

  CHECK_THROWS_AS(static_cast<void>(productivity_ratio(InvestmentPlan{{0.0}}, InvestmentPlan{{1.0}})), DomainError);
  CHECK_THROWS_AS(static_cast<void>(productivity_ratio(InvestmentPlan{}, InvestmentPlan{{1.0}})), ContractError);
}

TEST_CASE("dominance_check examples") {
  const PeriodSpec base = make_period(0.5, 100.0, 1.0, 1.0, false);
  const PeriodSpec dis = with_disruption(base, true);
  const std::vector<double> grid{0.0, 1.0, 2.0};
  CHECK(dominance_check(base, dis, grid));
  CHECK(ebis_eval(1.0, dis) - ebis_eval(1.0, base) == doctest::Approx(12.5).epsilon(1e-12));
  CHECK(ebis_eval(2.0, dis) - ebis_eval(2.0, base) ==
        doctest::Approx(11.1111111111111111).epsilon(1e-12));

  const PeriodSpec no_v = make_period(0.0, 100.0, 1.0, 1.0, false);
  CHECK(dominance_check(no_v, with_disruption(no_v, true), grid));
  const std::vector<double> only_zero{0.0};
  CHECK(dominance_check(base, dis, only_zero));

  PeriodSpec other = dis;
  other.loss = 99.0;
  CHECK_THROWS_AS(static_cast<void>(dominance_check(base, other, grid)), ContractError);
  CHECK_THROWS_AS(static_cast<void>(dominance_check(base, base, grid)), ContractError);
  CHECK_THROWS_AS(static_cast<void>(dominance_check(dis, base, grid)), ContractError);
}

TEST_CASE("proposition_sweep examples") {
  const SweepGrid grid{{1.0}, {1.0}, {0.5}, {4.0, 20.0}};
  const auto records = proposition_sweep(grid);
  REQUIRE(records.size() == 2);
  // Sorted by parameter tuple: L = 4 (v*L = 2) first.
  CHECK(records[0].parameters.loss == 4.0);
  CHECK(records[0].shift_direction == ShiftDirection::right);
  CHECK(records[0].z_star_baseline == doctest::Approx(0.41421356237309505));
  CHECK(records[0].z_star_disrupted == doctest::Approx(0.58740105196819947));
  CHECK(records[1].shift_direction == ShiftDirection::left);
  CHECK(records[1].z_star_baseline == doctest::Approx(2.16227766016837933));
  CHECK(records[1].z_star_disrupted == doctest::Approx(1.71441761659490657));

  const auto none = proposition_sweep(SweepGrid{{1.0, 2.0}, {1.0}, {0.0}, {100.0}});
  for (const SweepRecord& r : none) {
    CHECK(r.z_star_baseline == 0.0);
    CHECK(r.z_star_disrupted == 0.0);
    CHECK(r.shift_direction == ShiftDirection::none);
  }

  CHECK_THROWS_AS(static_cast<void>(proposition_sweep(SweepGrid{{-1.0}, {1.0}, {0.5}, {1.0}})), DomainError);
  CHECK(proposition_sweep(SweepGrid{}).empty());
}

TEST_CASE("classify_shift tolerance") {
  CHECK(classify_shift(1.0, 1.0) == ShiftDirection::none);
  CHECK(classify_shift(1.0, 1.0 + 5e-10) == ShiftDirection::none);
  CHECK(classify_shift(1.0, 1.0 + 2e-9) == ShiftDirection::right);
  CHECK(classify_shift(1.0, 1.0 - 2e-9) == ShiftDirection::left);
}

TEST_CASE("require_same_exposure") {
  const Scenario a{"a", {make_period(0.5, 100.0, 1.0, 1.0, false)}};
  Scenario b{"b", {make_period(0.5, 100.0, 3.0, 2.0, true)}};
  CHECK_NOTHROW(require_same_exposure(a, b));
  b.periods[0].loss = 101.0;
  CHECK_THROWS_AS(require_same_exposure(a, b), ContractError);
}

// Properties.

TEST_CASE("property: delta_z reflexive and antisymmetric") {
  Sampler rng(301);
  for (int i = 0; i < 100; ++i) {
    const Scenario sa = rng.scenario(1, 6);
    Scenario sb = rng.scenario(sa.horizon(), sa.horizon());
    const PlannedScenario a{sa, rng.plan(sa)};
    const PlannedScenario b{sb, rng.plan(sb)};
    CHECK(delta_z(a, a).delta_z == 0.0);
    CHECK(delta_z(a, b).delta_z == -delta_z(b, a).delta_z);
  }
}

TEST_CASE("property: classify_disruptive monotone in enbis_b") {
  Sampler rng(302);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(-100.0, 100.0);
    const double b1 = rng.uniform(-100.0, 200.0);
    const double b2 = b1 + rng.uniform(0.0, 50.0);
    const double t = rng.uniform(0.0, 0.5);
    DeltaZReport r1 = report_with(a, b1);
    DeltaZReport r2 = report_with(a, b2);
    if (classify_disruptive(r1, t)) CHECK(classify_disruptive(r2, t));
  }
}

TEST_CASE("property: dominance holds for every sampled tuple") {
  Sampler rng(303);
  for (int i = 0; i < 300; ++i) {
    const PeriodSpec base = with_disruption(rng.period(), false);
    const auto grid = uniform_grid(0.0, base.expected_loss() + 1.0, 200);
    CHECK(dominance_check(base, with_disruption(base, true), grid));
  }
}

TEST_CASE("property: sweep is deterministic and sorted") {
  const SweepGrid grid{{2.0, 0.5, 1.0}, {3.0, 1.0}, {0.9, 0.1}, {1000.0, 5.0}};
  const auto first = proposition_sweep(grid);
  const auto second = proposition_sweep(grid);
  REQUIRE(first.size() == 24);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].parameters == second[i].parameters);
    CHECK(first[i].z_star_baseline == second[i].z_star_baseline);
    if (i > 0) CHECK(first[i - 1].parameters < first[i].parameters);
  }
}
