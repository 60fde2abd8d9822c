#include "glinvest/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "glinvest/error.hpp"

namespace glinvest {

namespace {

void check_search_range(double z_max) {
  if (!std::isfinite(z_max) || z_max <= 0.0) {
    throw DomainError("z_max must be > 0 (got " + std::to_string(z_max) + ")");
  }
}

double checked_enbis(double z, const PeriodSpec& period) {
  const double value = detail::enbis_unchecked(z, period);
  if (!std::isfinite(value)) {
    throw NumericError("objective is not finite at z = " + std::to_string(z));
  }
  return value;
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::closed_form:
      return "closed_form";
    case Method::golden_section:
      return "golden_section";
    case Method::grid:
      return "grid";
  }
  return "unknown";
}

double closed_form_optimum(const PeriodSpec& period) {
  validate(period);
  const double alpha = period.technology.alpha;
  const double k = period.technology.exponent();
  const double marginal_at_zero = alpha * k * period.expected_loss();
  if (!(marginal_at_zero > 1.0)) return 0.0;
  // (x^(1/(k+1)) - 1) written with expm1 so the result stays accurate when x -> 1+.
  const double z = std::expm1(std::log(marginal_at_zero) / (k + 1.0)) / alpha;
  return std::max(0.0, z);
}

double golden_section_optimum(const PeriodSpec& period, double z_max, double tol) {
  validate(period);
  check_search_range(z_max);
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw DomainError("tol must be > 0 (got " + std::to_string(tol) + ")");
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = z_max;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = checked_enbis(x1, period);
  double f2 = checked_enbis(x2, period);

  // The cap only matters when tol is below the spacing of doubles near z_max.
  for (int iter = 0; hi - lo > tol && iter < 256; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = checked_enbis(x2, period);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = checked_enbis(x1, period);
    }
  }

  const double z = 0.5 * (lo + hi);
  // Concave objective: if the bracket collapsed onto the corner, take it exactly.
  if (checked_enbis(0.0, period) >= checked_enbis(z, period)) return 0.0;
  return z;
}

double grid_oracle(const PeriodSpec& period, double z_max, std::size_t steps) {
  validate(period);
  check_search_range(z_max);
  if (steps < 2) throw DomainError("steps must be >= 2 (got " + std::to_string(steps) + ")");

  double best_z = 0.0;
  double best = detail::enbis_unchecked(0.0, period);
  const double n = static_cast<double>(steps);
  for (std::size_t i = 1; i <= steps; ++i) {
    const double z = z_max * (static_cast<double>(i) / n);
    const double value = detail::enbis_unchecked(z, period);
    if (value > best) {
      best = value;
      best_z = z;
    }
  }
  return best_z;
}

PeriodOptimum optimize_period(const PeriodSpec& period) {
  PeriodOptimum out;
  out.z_star = closed_form_optimum(period);
  out.method = Method::closed_form;
  const CurvePoint at = curve_point(out.z_star, period);
  out.breach_probability_at_optimum = at.breach_probability;
  out.ebis_at_optimum = at.ebis;
  return out;
}

OptimizationResult optimize_scenario(const Scenario& scenario) {
  validate(scenario);
  OptimizationResult result;
  result.per_period.reserve(scenario.horizon());
  result.plan.amounts.reserve(scenario.horizon());
  for (const PeriodSpec& period : scenario.periods) {
    result.per_period.push_back(optimize_period(period));
    result.plan.amounts.push_back(result.per_period.back().z_star);
  }
  result.enbis_total = enbis_eval(result.plan, scenario);
  return result;
}

}  // namespace glinvest
