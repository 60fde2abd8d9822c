#include "glinvest/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <thread>

#include "glinvest/error.hpp"
#include "glinvest/optimizer.hpp"

namespace glinvest {

namespace {

void check_plan_amounts(const InvestmentPlan& plan, std::string_view name) {
  if (plan.amounts.empty()) {
    throw ContractError(std::string(name) + " must contain at least one amount");
  }
  for (std::size_t i = 0; i < plan.amounts.size(); ++i) {
    const double z = plan.amounts[i];
    if (!std::isfinite(z) || z < 0.0) {
      throw DomainError(std::string(name) + "[" + std::to_string(i) + "] must be >= 0");
    }
  }
}

SweepRecord sweep_cell(const SweepParameters& p) {
  const PeriodSpec baseline{p.vulnerability, p.loss, TechnologyProfile{p.alpha, p.beta, false}};
  SweepRecord rec;
  rec.parameters = p;
  rec.z_star_baseline = closed_form_optimum(baseline);
  rec.z_star_disrupted = closed_form_optimum(with_disruption(baseline, true));
  rec.shift_direction = classify_shift(rec.z_star_baseline, rec.z_star_disrupted);
  return rec;
}

}  // namespace

std::string_view to_string(ShiftDirection direction) noexcept {
  switch (direction) {
    case ShiftDirection::left:
      return "left";
    case ShiftDirection::right:
      return "right";
    case ShiftDirection::none:
      return "none";
  }
  return "none";
}

DeltaZReport delta_z(const PlannedScenario& a, const PlannedScenario& b) {
  if (a.scenario.horizon() != b.scenario.horizon()) {
    throw ContractError("time spans A (" + std::to_string(a.scenario.horizon()) +
                        " periods) and B (" + std::to_string(b.scenario.horizon()) +
                        " periods) must be equal in order to proceed to the comparison");
  }
  validate(a.scenario);
  validate(b.scenario);
  DeltaZReport report;
  report.enbis_a = enbis_eval(a.plan, a.scenario);
  report.enbis_b = enbis_eval(b.plan, b.scenario);
  report.delta_z = report.enbis_a - report.enbis_b;
  report.period_count = a.scenario.horizon();
  return report;
}

bool classify_disruptive(DeltaZReport& report, double threshold) {
  if (!std::isfinite(threshold) || threshold < 0.0) {
    throw DomainError("threshold must be >= 0 (got " + std::to_string(threshold) + ")");
  }
  const double a = report.enbis_a;
  const double b = report.enbis_b;
  const bool disruptive = a > 0.0 ? b > a * (1.0 + threshold)
                                  : b - a > threshold * std::max(1.0, std::abs(a));
  report.classified_disruptive = disruptive;
  report.threshold_used = threshold;
  return disruptive;
}

double productivity_ratio(const InvestmentPlan& a, const InvestmentPlan& b) {
  check_plan_amounts(a, "plan_a");
  check_plan_amounts(b, "plan_b");
  const double total_a = a.total();
  if (!(total_a > 0.0)) {
    throw DomainError("plan_a total investment must be > 0 to form a ratio");
  }
  return b.total() / total_a;
}

bool dominance_check(const PeriodSpec& baseline, const PeriodSpec& disrupted,
                     std::span<const double> z_grid) {
  validate(baseline, "baseline");
  validate(disrupted, "disrupted");
  if (baseline.technology.disruptive || !disrupted.technology.disruptive) {
    throw ContractError("dominance_check needs a baseline with disruptive = 0 and a disrupted "
                        "period with disruptive = 1");
  }
  if (with_disruption(disrupted, false) != baseline) {
    throw ContractError("baseline and disrupted periods may differ only in the disruption flag");
  }
  const bool strict = baseline.vulnerability > 0.0 && baseline.loss > 0.0;
  for (const double z : z_grid) {
    // EBIS_d - EBIS_0 = L * (S_0 - S_d). Differencing the breach probabilities
    // keeps the gap visible where both EBIS values round to v*L.
    const double s0 = sbpf_eval(z, baseline.vulnerability, baseline.technology);
    const double sd = sbpf_eval(z, disrupted.vulnerability, disrupted.technology);
    const double gap = baseline.loss * (s0 - sd);
    if (ebis_eval(z, disrupted) < ebis_eval(z, baseline)) return false;
    if (gap < 0.0) return false;
    if (strict && z > 0.0 && !(gap > 0.0)) return false;
  }
  return true;
}

ShiftDirection classify_shift(double z_star_baseline, double z_star_disrupted) noexcept {
  if (z_star_disrupted < z_star_baseline - kShiftTolerance) return ShiftDirection::left;
  if (z_star_disrupted > z_star_baseline + kShiftTolerance) return ShiftDirection::right;
  return ShiftDirection::none;
}

std::vector<SweepRecord> proposition_sweep(const SweepGrid& grid) {
  std::vector<SweepParameters> cells;
  cells.reserve(grid.alphas.size() * grid.betas.size() * grid.vulnerabilities.size() *
                grid.losses.size());
  for (const double alpha : grid.alphas) {
    for (const double beta : grid.betas) {
      for (const double v : grid.vulnerabilities) {
        for (const double loss : grid.losses) {
          const SweepParameters p{alpha, beta, v, loss};
          validate(PeriodSpec{v, loss, TechnologyProfile{alpha, beta, false}});
          cells.push_back(p);
        }
      }
    }
  }

  std::vector<SweepRecord> records(cells.size());
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1,
                                                      std::max<std::size_t>(cells.size(), 1));
  const std::size_t chunk = (cells.size() + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < cells.size(); begin += chunk) {
    const std::size_t end = std::min(cells.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) records[i] = sweep_cell(cells[i]);
    }));
  }
  for (auto& job : jobs) job.get();

  std::stable_sort(records.begin(), records.end(),
                   [](const SweepRecord& x, const SweepRecord& y) {
                     return x.parameters < y.parameters;
                   });
  return records;
}

void require_same_exposure(const Scenario& a, const Scenario& b) {
  if (a.horizon() != b.horizon()) {
    throw ContractError("time spans A and B must be equal in order to proceed to the comparison");
  }
  for (std::size_t i = 0; i < a.horizon(); ++i) {
    const PeriodSpec& pa = a.periods[i];
    const PeriodSpec& pb = b.periods[i];
    if (pa.vulnerability != pb.vulnerability || pa.loss != pb.loss) {
      throw ContractError("strict mode: periods[" + std::to_string(i) +
                          "] vulnerability and loss must be identical in A and B");
    }
  }
}

}  // namespace glinvest
