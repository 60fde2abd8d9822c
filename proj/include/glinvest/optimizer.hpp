#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "glinvest/model.hpp"

namespace glinvest {

enum class Method { closed_form, golden_section, grid };

[[nodiscard]] std::string_view to_string(Method method) noexcept;

struct PeriodOptimum {
  double z_star = 0.0;
  double breach_probability_at_optimum = 0.0;
  double ebis_at_optimum = 0.0;
  Method method = Method::closed_form;

  [[nodiscard]] double enbis_at_optimum() const noexcept { return ebis_at_optimum - z_star; }
};

struct OptimizationResult {
  InvestmentPlan plan;
  double enbis_total = 0.0;
  std::vector<PeriodOptimum> per_period;
};

/// Maximizer of [v - S(z, v)] * L - z over z >= 0 for the class-I breach function.
///
/// Setting the derivative alpha*k*v*L*(alpha*z + 1)^-(k+1) - 1 to zero, with
/// k = beta + d, gives
///
///     z* = ((alpha*k*v*L)^(1/(k+1)) - 1) / alpha
///
/// whenever alpha*k*v*L > 1. Otherwise the objective is nonincreasing on
/// [0, inf) and the corner z* = 0 is returned.
[[nodiscard]] double closed_form_optimum(const PeriodSpec& period);

/// Golden-section maximization of per-period ENBIS on [0, z_max]. The result is
/// compared against the left endpoint so that flat or decreasing objectives
/// return exactly 0. Throws NumericError if the objective is not finite.
[[nodiscard]] double golden_section_optimum(const PeriodSpec& period, double z_max, double tol);

/// Exhaustive search over {0, z_max/steps, ..., z_max}. Ties go to the smallest z.
[[nodiscard]] double grid_oracle(const PeriodSpec& period, double z_max, std::size_t steps);

[[nodiscard]] PeriodOptimum optimize_period(const PeriodSpec& period);

/// The multi-period objective has an independent z_i in every term, so the
/// scenario optimum is the vector of per-period optima.
[[nodiscard]] OptimizationResult optimize_scenario(const Scenario& scenario);

}  // namespace glinvest
