#include "glinvest/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "glinvest/analysis.hpp"
#include "glinvest/error.hpp"
#include "glinvest/optimizer.hpp"
#include "glinvest/report.hpp"
#include "glinvest/scenario_io.hpp"

namespace glinvest {

namespace {

struct PeriodArgs {
  double vulnerability = 0.0;
  double loss = 0.0;
  double alpha = 1.0;
  double beta = 1.0;

  [[nodiscard]] PeriodSpec period(bool disruptive) const {
    return PeriodSpec{vulnerability, loss, TechnologyProfile{alpha, beta, disruptive}};
  }
};

struct RangeArgs {
  double z_min = 0.0;
  std::optional<double> z_max;
  std::size_t steps = 1000;
  std::string svg;

  // Defaults to [0, v*L], the range where any optimum lies.
  [[nodiscard]] std::vector<double> grid(const PeriodSpec& period) const {
    return uniform_grid(z_min, z_max.value_or(period.expected_loss()), steps);
  }
};

void add_period_options(CLI::App& cmd, PeriodArgs& p) {
  cmd.add_option("--vulnerability,-v", p.vulnerability, "Vulnerability v in [0, 1]")->required();
  cmd.add_option("--loss,-L", p.loss, "Potential loss L >= 0")->required();
  cmd.add_option("--alpha", p.alpha, "Productivity parameter alpha > 0")->capture_default_str();
  cmd.add_option("--beta", p.beta, "Productivity parameter beta >= 1")->capture_default_str();
}

void add_range_options(CLI::App& cmd, RangeArgs& r) {
  cmd.add_option("--z-min", r.z_min, "Lower end of the investment grid")->capture_default_str();
  cmd.add_option("--z-max", r.z_max, "Upper end of the investment grid (default v*L)");
  cmd.add_option("--steps", r.steps, "Number of grid intervals")->capture_default_str();
  cmd.add_option("--svg", r.svg, "Also draw the curves to this SVG file");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << content)) throw Error("cannot write '" + path + "'");
}

std::vector<std::pair<double, double>> column(const std::vector<double>& grid,
                                              const PeriodSpec& period, bool net) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(grid.size());
  for (const double z : grid) {
    const CurvePoint p = curve_point(z, period);
    pts.emplace_back(z, net ? p.enbis : p.ebis);
  }
  return pts;
}

int run_optimize(const std::string& path, std::ostream& out) {
  const ScenarioDocument doc = load_scenario_file(path);
  out << format_optimization(doc.scenario, optimize_scenario(doc.scenario));
  return kExitOk;
}

int run_curve(const PeriodArgs& args, const RangeArgs& range, bool with_disrupted,
              std::ostream& out) {
  const PeriodSpec period = args.period(false);
  validate(period);
  const double z_max = range.z_max.value_or(period.expected_loss());
  out << emit_curve_csv(period, range.z_min, z_max, range.steps, with_disrupted);
  if (!range.svg.empty()) {
    const std::vector<double> grid = range.grid(period);
    std::vector<Polyline> series{{"EBIS_0", column(grid, period, false)},
                                 {"investment z", {}}};
    for (const double z : grid) series[1].points.emplace_back(z, z);
    if (with_disrupted) series.push_back({"EBIS_d", column(grid, with_disruption(period, true), false)});
    write_file(range.svg, render_svg(series, "Expected benefit of security investment"));
  }
  return kExitOk;
}

int run_mix_curve(const PeriodArgs& args, const RangeArgs& range, std::optional<double> post_alpha,
                  std::optional<double> post_beta, int post_disruptive, std::size_t switch_index,
                  std::ostream& out) {
  const PeriodSpec pre = args.period(false);
  validate(pre, "pre");
  PeriodSpec post = args.period(post_disruptive == 1);
  post.technology.alpha = post_alpha.value_or(args.alpha);
  post.technology.beta = post_beta.value_or(args.beta);
  const std::vector<double> grid = range.grid(pre);
  out << emit_mix_csv(pre, post, switch_index, grid);
  if (!range.svg.empty()) {
    Polyline pre_line{"EBIS pre", {}};
    Polyline post_line{"EBIS post", {}};
    for (const MixPoint& m : ebis_mix_curve(pre, post, switch_index, grid)) {
      (m.branch == Branch::pre ? pre_line : post_line).points.emplace_back(m.point.z, m.point.ebis);
    }
    const std::vector<Polyline> series{pre_line, post_line};
    write_file(range.svg, render_svg(series, "Expected benefit across a technology switch"));
  }
  return kExitOk;
}

int run_delta_z(const std::string& path_a, const std::string& path_b, bool optimize, bool strict,
                double threshold, std::ostream& out) {
  const ScenarioDocument a = load_scenario_file(path_a);
  const ScenarioDocument b = load_scenario_file(path_b);
  if (a.scenario.horizon() != b.scenario.horizon()) {
    throw ContractError("time spans A (" + std::to_string(a.scenario.horizon()) +
                        " periods) and B (" + std::to_string(b.scenario.horizon()) +
                        " periods) must be equal in order to proceed to the comparison");
  }
  if (strict) require_same_exposure(a.scenario, b.scenario);

  // A file without investments is compared at its optimum.
  const bool optimized = optimize || !a.plan || !b.plan;
  const auto plan_for = [&](const ScenarioDocument& doc) {
    return optimized ? optimize_scenario(doc.scenario).plan : *doc.plan;
  };

  DeltaZSummary summary;
  summary.label_a = a.scenario.label;
  summary.label_b = b.scenario.label;
  summary.optimized = optimized;
  summary.plan_a = plan_for(a);
  summary.plan_b = plan_for(b);
  summary.report = delta_z(PlannedScenario{a.scenario, summary.plan_a},
                           PlannedScenario{b.scenario, summary.plan_b});
  classify_disruptive(summary.report, threshold);
  out << format_delta_z(summary);
  return kExitOk;
}

int run_sweep(const SweepGrid& grid, std::ostream& out) {
  const std::vector<SweepRecord> records = proposition_sweep(grid);
  out << emit_sweep_csv(records);
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal security investment under breach-probability models with disruptive "
               "technologies",
               "glinvest"};
  app.require_subcommand(1);

  std::string optimize_file;
  auto* optimize = app.add_subcommand("optimize", "Optimal investment for every period of a scenario");
  optimize->add_option("scenario", optimize_file, "Scenario JSON file")->required();

  PeriodArgs curve_period;
  RangeArgs curve_range;
  bool curve_disrupted = false;
  auto* curve = app.add_subcommand("curve", "EBIS/ENBIS curve of one period as CSV");
  add_period_options(*curve, curve_period);
  add_range_options(*curve, curve_range);
  curve->add_flag("--with-disrupted,-d", curve_disrupted, "Add the d = 1 columns");

  PeriodArgs mix_period;
  RangeArgs mix_range;
  std::optional<double> post_alpha;
  std::optional<double> post_beta;
  int post_disruptive = 1;
  std::size_t switch_index = 0;
  auto* mix = app.add_subcommand("mix-curve", "EBIS curve across a technology switch as CSV");
  add_period_options(*mix, mix_period);
  add_range_options(*mix, mix_range);
  mix->add_option("--switch", switch_index, "Grid index t1 at which the new technology takes over")
      ->required();
  mix->add_option("--post-alpha", post_alpha, "alpha after the switch (default: --alpha)");
  mix->add_option("--post-beta", post_beta, "beta after the switch (default: --beta)");
  mix->add_option("--post-disruptive", post_disruptive, "Disruption dummy after the switch")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();

  std::string file_a;
  std::string file_b;
  bool dz_optimize = false;
  bool dz_strict = false;
  double threshold = kDefaultDisruptionThreshold;
  auto* dz = app.add_subcommand("delta-z", "Compare cumulative ENBIS of two equal-length windows");
  dz->add_option("scenario-a", file_a, "Window A (no novel technology)")->required();
  dz->add_option("scenario-b", file_b, "Window B (novel technology in force)")->required();
  dz->add_flag("--optimize", dz_optimize, "Compare at the optimal plans instead of given investments");
  dz->add_flag("--strict", dz_strict, "Require identical vulnerability and loss sequences");
  dz->add_option("--threshold", threshold, "Relative ENBIS gain that counts as disruptive")
      ->capture_default_str();

  SweepGrid sweep_grid{{1.0}, {1.0}, {0.5}, {4.0, 20.0}};
  auto* sweep = app.add_subcommand("sweep", "Direction of the optimum shift when d goes 0 -> 1");
  sweep->add_option("--alpha", sweep_grid.alphas, "alpha values")->delimiter(',')->capture_default_str();
  sweep->add_option("--beta", sweep_grid.betas, "beta values")->delimiter(',')->capture_default_str();
  sweep->add_option("--vulnerability", sweep_grid.vulnerabilities, "v values")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--loss", sweep_grid.losses, "L values")->delimiter(',')->capture_default_str();

  std::vector<const char*> argv{"glinvest"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  try {
    if (*optimize) return run_optimize(optimize_file, out);
    if (*curve) return run_curve(curve_period, curve_range, curve_disrupted, out);
    if (*mix) {
      return run_mix_curve(mix_period, mix_range, post_alpha, post_beta, post_disruptive,
                           switch_index, out);
    }
    if (*dz) return run_delta_z(file_a, file_b, dz_optimize, dz_strict, threshold, out);
    if (*sweep) return run_sweep(sweep_grid, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << app.help();
  return kExitUsageError;
}

}  // namespace glinvest
