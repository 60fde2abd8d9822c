#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "glinvest/model.hpp"

namespace glinvest {

/// Relative ENBIS gain above which a technology counts as disruptive.
inline constexpr double kDefaultDisruptionThreshold = 0.10;

/// Optima closer than this are reported as no shift.
inline constexpr double kShiftTolerance = 1e-9;

/// A scenario together with the investments realized in it.
struct PlannedScenario {
  Scenario scenario;
  InvestmentPlan plan;
};

/// ENBIS comparison of two windows of equal duration. Positive delta_z means
/// window A (without the novel technology) yielded more net benefit.
struct DeltaZReport {
  double delta_z = 0.0;
  double enbis_a = 0.0;
  double enbis_b = 0.0;
  std::size_t period_count = 0;
  bool classified_disruptive = false;
  double threshold_used = kDefaultDisruptionThreshold;
};

enum class ShiftDirection { left, right, none };

[[nodiscard]] std::string_view to_string(ShiftDirection direction) noexcept;

struct SweepParameters {
  double alpha = 1.0;
  double beta = 1.0;
  double vulnerability = 0.0;
  double loss = 0.0;

  friend auto operator<=>(const SweepParameters&, const SweepParameters&) = default;
};

struct SweepRecord {
  SweepParameters parameters;
  double z_star_baseline = 0.0;
  double z_star_disrupted = 0.0;
  ShiftDirection shift_direction = ShiftDirection::none;
};

/// Axis values of a sweep; the sweep visits their Cartesian product.
struct SweepGrid {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<double> vulnerabilities;
  std::vector<double> losses;
};

/// delta_z = ENBIS(A) - ENBIS(B). Both windows must span the same number of
/// periods. The classification fields are left at their defaults; see
/// classify_disruptive.
[[nodiscard]] DeltaZReport delta_z(const PlannedScenario& a, const PlannedScenario& b);

/// True iff B improves on A by more than `threshold`: relative to enbis_a when
/// it is positive, otherwise as an absolute gap scaled by max(1, |enbis_a|).
/// Stores the verdict and threshold in `report`.
bool classify_disruptive(DeltaZReport& report, double threshold = kDefaultDisruptionThreshold);

/// Sum of B's investments over sum of A's.
[[nodiscard]] double productivity_ratio(const InvestmentPlan& a, const InvestmentPlan& b);

/// Checks EBIS_disrupted(z) >= EBIS_baseline(z) on every grid point, strictly
/// for z > 0 whenever v and L are positive. The two periods may differ only in
/// the disruption flag; `disrupted` must carry d = 1 and `baseline` d = 0.
[[nodiscard]] bool dominance_check(const PeriodSpec& baseline, const PeriodSpec& disrupted,
                                   std::span<const double> z_grid);

/// Direction of the optimum's move when d goes 0 -> 1.
[[nodiscard]] ShiftDirection classify_shift(double z_star_baseline, double z_star_disrupted) noexcept;

/// Optimal investment with and without disruption for every grid tuple.
/// Cells run concurrently; records come back sorted by parameter tuple.
[[nodiscard]] std::vector<SweepRecord> proposition_sweep(const SweepGrid& grid);

/// Throws ContractError unless both scenarios have identical (v_i, L_i)
/// sequences. Used when comparing windows that must differ only in technology.
void require_same_exposure(const Scenario& a, const Scenario& b);

}  // namespace glinvest
