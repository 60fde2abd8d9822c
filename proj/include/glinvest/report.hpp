#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glinvest/analysis.hpp"
#include "glinvest/model.hpp"
#include "glinvest/optimizer.hpp"

namespace glinvest {

/// Fixed notation, 6 fractional digits, '.' separator. Negative zero prints as 0.
[[nodiscard]] std::string format_fixed(double value);

/// CSV `z,ebis_0,enbis_0[,ebis_d,enbis_d]` with steps + 1 uniformly spaced rows.
/// The `_0` columns force d = 0 and the `_d` columns d = 1, whatever the
/// period's own flag. Footer rows `# z_star_0,...` (and `# z_star_d,...`).
[[nodiscard]] std::string emit_curve_csv(const PeriodSpec& period, double z_min, double z_max,
                                         std::size_t steps, bool include_disrupted);

/// CSV `index,branch,z,ebis` of ebis_mix_curve, followed by
/// `# switch_index,<t1>` and, when the switch falls on the grid,
/// `# jump,<EBIS_post - EBIS_pre at the switch>`.
[[nodiscard]] std::string emit_mix_csv(const PeriodSpec& pre, const PeriodSpec& post,
                                       std::size_t switch_index, std::span<const double> z_grid);

[[nodiscard]] std::string emit_sweep_csv(std::span<const SweepRecord> records);

/// `key: value` lines describing an optimization result.
[[nodiscard]] std::string format_optimization(const Scenario& scenario,
                                              const OptimizationResult& result);

struct DeltaZSummary {
  std::string label_a;
  std::string label_b;
  bool optimized = false;
  DeltaZReport report;
  InvestmentPlan plan_a;
  InvestmentPlan plan_b;
};

/// `key: value` lines for a Δ_Z comparison, including the investment ratio
/// sum(z_B) / sum(z_A) when A invests anything.
[[nodiscard]] std::string format_delta_z(const DeltaZSummary& summary);

struct Polyline {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Minimal SVG line chart of the given series on shared axes.
[[nodiscard]] std::string render_svg(std::span<const Polyline> series, const std::string& title);

}  // namespace glinvest
