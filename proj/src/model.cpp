#include "glinvest/model.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "glinvest/error.hpp"

namespace glinvest {

namespace {

std::string field_name(std::string_view prefix, std::string_view member) {
  std::string out(prefix);
  if (!out.empty()) out += '.';
  out += member;
  return out;
}

[[noreturn]] void domain_fail(std::string_view field, std::string_view requirement, double value) {
  std::ostringstream msg;
  msg << field << " must be " << requirement << " (got " << value << ")";
  throw DomainError(msg.str());
}

void check_investment(double z, std::string_view field) {
  if (!std::isfinite(z) || z < 0.0) domain_fail(field, ">= 0", z);
}

void check_vulnerability(double v, std::string_view field) {
  if (!(v >= 0.0 && v <= 1.0)) domain_fail(field, "in [0, 1]", v);
}

}  // namespace

namespace detail {

double protected_share(double z, const TechnologyProfile& tech) noexcept {
  // 1 - (alpha*z + 1)^-k, evaluated without cancellation for small alpha*z.
  return -std::expm1(-tech.exponent() * std::log1p(tech.alpha * z));
}

}  // namespace detail

double InvestmentPlan::total() const noexcept {
  return std::accumulate(amounts.begin(), amounts.end(), 0.0);
}

std::string_view to_string(Branch branch) noexcept {
  return branch == Branch::pre ? "pre" : "post";
}

void validate(const TechnologyProfile& tech, std::string_view field) {
  if (!std::isfinite(tech.alpha) || tech.alpha <= 0.0) {
    domain_fail(field_name(field, "alpha"), "> 0", tech.alpha);
  }
  if (!std::isfinite(tech.beta) || tech.beta < 1.0) {
    domain_fail(field_name(field, "beta"), ">= 1", tech.beta);
  }
}

void validate(const PeriodSpec& period, std::string_view field) {
  check_vulnerability(period.vulnerability, field_name(field, "vulnerability"));
  if (!std::isfinite(period.loss) || period.loss < 0.0) {
    domain_fail(field_name(field, "loss"), ">= 0", period.loss);
  }
  // Technology fields sit next to v and L in the scenario schema.
  validate(period.technology, field);
}

void validate(const Scenario& scenario) {
  if (scenario.periods.empty()) {
    throw DomainError("periods must contain at least one period");
  }
  for (std::size_t i = 0; i < scenario.periods.size(); ++i) {
    validate(scenario.periods[i], "periods[" + std::to_string(i) + "]");
  }
}

void validate(const InvestmentPlan& plan, const Scenario& scenario) {
  if (plan.amounts.size() != scenario.periods.size()) {
    throw ContractError("investment plan has " + std::to_string(plan.amounts.size()) +
                        " amounts but scenario '" + scenario.label + "' has " +
                        std::to_string(scenario.periods.size()) + " periods");
  }
  for (std::size_t i = 0; i < plan.amounts.size(); ++i) {
    check_investment(plan.amounts[i], "plan[" + std::to_string(i) + "]");
  }
}

double sbpf_eval(double z, double vulnerability, const TechnologyProfile& tech) {
  check_investment(z, "z");
  check_vulnerability(vulnerability, "vulnerability");
  validate(tech);
  // v * (alpha*z + 1)^-(beta + d), via log1p so that tiny alpha*z keeps its
  // relative precision.
  return vulnerability * std::exp(-tech.exponent() * std::log1p(tech.alpha * z));
}

double ebis_eval(double z, const PeriodSpec& period) {
  check_investment(z, "z");
  validate(period);
  return period.vulnerability * detail::protected_share(z, period.technology) * period.loss;
}

double period_enbis(double z, const PeriodSpec& period) { return ebis_eval(z, period) - z; }

CurvePoint curve_point(double z, const PeriodSpec& period) {
  CurvePoint p;
  p.z = z;
  p.ebis = ebis_eval(z, period);
  p.enbis = p.ebis - z;
  p.breach_probability = sbpf_eval(z, period.vulnerability, period.technology);
  return p;
}

double enbis_eval(const InvestmentPlan& plan, const Scenario& scenario) {
  validate(plan, scenario);
  double total = 0.0;
  for (std::size_t i = 0; i < plan.amounts.size(); ++i) {
    total += period_enbis(plan.amounts[i], scenario.periods[i]);
  }
  return total;
}

std::vector<MixPoint> ebis_mix_curve(const PeriodSpec& pre, const PeriodSpec& post,
                                     std::size_t switch_index, std::span<const double> z_grid) {
  validate(pre, "pre");
  validate(post, "post");
  if (pre.technology.disruptive) {
    throw ContractError("pre-switch technology must be non-disruptive (disruptive = 0)");
  }
  std::vector<MixPoint> out;
  out.reserve(z_grid.size());
  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    const double z = z_grid[i];
    MixPoint m;
    m.index = i;
    m.branch = i < switch_index ? Branch::pre : Branch::post;
    m.point = curve_point(z, m.branch == Branch::pre ? pre : post);
    m.jump = ebis_eval(z, post) - ebis_eval(z, pre);
    out.push_back(m);
  }
  return out;
}

std::vector<double> uniform_grid(double z_min, double z_max, std::size_t steps) {
  if (!std::isfinite(z_min) || z_min < 0.0) domain_fail("z_min", ">= 0", z_min);
  if (!std::isfinite(z_max) || !(z_max > z_min)) domain_fail("z_max", "> z_min", z_max);
  if (steps < 2) throw DomainError("steps must be >= 2 (got " + std::to_string(steps) + ")");
  std::vector<double> grid(steps + 1);
  const double width = z_max - z_min;
  for (std::size_t i = 0; i <= steps; ++i) {
    grid[i] = z_min + width * static_cast<double>(i) / static_cast<double>(steps);
  }
  grid.back() = z_max;
  return grid;
}

PeriodSpec with_disruption(PeriodSpec period, bool disruptive) noexcept {
  period.technology.disruptive = disruptive;
  return period;
}

Scenario concat(const Scenario& first, const Scenario& second) {
  Scenario out{first.label + "+" + second.label, first.periods};
  out.periods.insert(out.periods.end(), second.periods.begin(), second.periods.end());
  return out;
}

}  // namespace glinvest
