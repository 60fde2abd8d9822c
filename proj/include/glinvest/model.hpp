#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace glinvest {

/// Productivity parameters of one security technology plus the disruption dummy.
///
/// The breach probability falls as (alpha*z + 1)^-(beta + d); a disruptive
/// technology (d = 1) raises the exponent by one. Alpha must be positive and
/// beta at least one.
struct TechnologyProfile {
  double alpha = 1.0;
  double beta = 1.0;
  bool disruptive = false;

  /// beta + d, the exponent of the breach probability function.
  [[nodiscard]] double exponent() const noexcept { return beta + (disruptive ? 1.0 : 0.0); }

  friend bool operator==(const TechnologyProfile&, const TechnologyProfile&) = default;
};

/// One period of the horizon: vulnerability v in [0, 1], potential loss L >= 0
/// and the technology in force.
struct PeriodSpec {
  double vulnerability = 0.0;
  double loss = 0.0;
  TechnologyProfile technology;

  /// v * L, the expected loss without any investment.
  [[nodiscard]] double expected_loss() const noexcept { return vulnerability * loss; }

  friend bool operator==(const PeriodSpec&, const PeriodSpec&) = default;
};

struct Scenario {
  std::string label;
  std::vector<PeriodSpec> periods;

  [[nodiscard]] std::size_t horizon() const noexcept { return periods.size(); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// One investment amount z_i per period.
struct InvestmentPlan {
  std::vector<double> amounts;

  [[nodiscard]] double total() const noexcept;

  friend bool operator==(const InvestmentPlan&, const InvestmentPlan&) = default;
};

struct CurvePoint {
  double z = 0.0;
  double ebis = 0.0;
  double enbis = 0.0;
  double breach_probability = 0.0;
};

enum class Branch { pre, post };

[[nodiscard]] std::string_view to_string(Branch branch) noexcept;

/// A point of the mixed curve: the pre-switch technology governs indices below
/// the switch, the post-switch technology from the switch on. `jump` is
/// EBIS_post(z) - EBIS_pre(z) at the same z, i.e. the height of the
/// discontinuity if the switch happened at this point.
struct MixPoint {
  std::size_t index = 0;
  Branch branch = Branch::pre;
  CurvePoint point;
  double jump = 0.0;
};

// Validation. `field` prefixes the message, e.g. "periods[2]" yields
// "periods[2].beta must be >= 1".
void validate(const TechnologyProfile& tech, std::string_view field = "technology");
void validate(const PeriodSpec& period, std::string_view field = "period");
void validate(const Scenario& scenario);
void validate(const InvestmentPlan& plan, const Scenario& scenario);

/// Class-I breach probability v / (alpha*z + 1)^(beta + d).
[[nodiscard]] double sbpf_eval(double z, double vulnerability, const TechnologyProfile& tech);

/// Expected benefit [v - S(z, v)] * L.
[[nodiscard]] double ebis_eval(double z, const PeriodSpec& period);

/// Expected net benefit of one period, EBIS(z) - z.
[[nodiscard]] double period_enbis(double z, const PeriodSpec& period);

/// Full curve point for one period at investment z.
[[nodiscard]] CurvePoint curve_point(double z, const PeriodSpec& period);

/// Sum over periods of [v_i - S(z_i, v_i)] * L_i - z_i.
[[nodiscard]] double enbis_eval(const InvestmentPlan& plan, const Scenario& scenario);

/// Piecewise EBIS curve over `z_grid`: indices below `switch_index` follow
/// `pre`, the rest follow `post`. `pre` must be non-disruptive. A switch index
/// at or beyond the grid size leaves every point on the pre branch.
[[nodiscard]] std::vector<MixPoint> ebis_mix_curve(const PeriodSpec& pre, const PeriodSpec& post,
                                                   std::size_t switch_index,
                                                   std::span<const double> z_grid);

/// `steps + 1` points spaced uniformly over [z_min, z_max], endpoints exact.
[[nodiscard]] std::vector<double> uniform_grid(double z_min, double z_max, std::size_t steps);

/// Copy of `period` with the disruption dummy forced to `disruptive`.
[[nodiscard]] PeriodSpec with_disruption(PeriodSpec period, bool disruptive) noexcept;

/// Scenario holding the periods of `first` followed by those of `second`.
[[nodiscard]] Scenario concat(const Scenario& first, const Scenario& second);

namespace detail {

// Unchecked kernels for hot loops; callers validate once up front.
[[nodiscard]] double protected_share(double z, const TechnologyProfile& tech) noexcept;
[[nodiscard]] inline double enbis_unchecked(double z, const PeriodSpec& period) noexcept {
  return period.vulnerability * protected_share(z, period.technology) * period.loss - z;
}

}  // namespace detail

}  // namespace glinvest
