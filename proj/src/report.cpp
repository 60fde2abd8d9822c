#include "glinvest/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "glinvest/error.hpp"

namespace glinvest {

namespace {

const char* bool_text(bool value) { return value ? "true" : "false"; }

}  // namespace

std::string format_fixed(double value) {
  if (!std::isfinite(value)) throw NumericError("cannot format non-finite value");
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string out(buf, static_cast<std::size_t>(n));
  if (out == "-0.000000") out.erase(0, 1);
  return out;
}

std::string emit_curve_csv(const PeriodSpec& period, double z_min, double z_max,
                           std::size_t steps, bool include_disrupted) {
  const std::vector<double> grid = uniform_grid(z_min, z_max, steps);
  const PeriodSpec baseline = with_disruption(period, false);
  const PeriodSpec disrupted = with_disruption(period, true);

  std::ostringstream out;
  out << (include_disrupted ? "z,ebis_0,enbis_0,ebis_d,enbis_d\n" : "z,ebis_0,enbis_0\n");
  for (const double z : grid) {
    const CurvePoint p0 = curve_point(z, baseline);
    out << format_fixed(z) << ',' << format_fixed(p0.ebis) << ',' << format_fixed(p0.enbis);
    if (include_disrupted) {
      const CurvePoint pd = curve_point(z, disrupted);
      out << ',' << format_fixed(pd.ebis) << ',' << format_fixed(pd.enbis);
    }
    out << '\n';
  }
  out << "# z_star_0," << format_fixed(closed_form_optimum(baseline)) << '\n';
  if (include_disrupted) {
    out << "# z_star_d," << format_fixed(closed_form_optimum(disrupted)) << '\n';
  }
  return out.str();
}

std::string emit_mix_csv(const PeriodSpec& pre, const PeriodSpec& post, std::size_t switch_index,
                         std::span<const double> z_grid) {
  const std::vector<MixPoint> curve = ebis_mix_curve(pre, post, switch_index, z_grid);
  std::ostringstream out;
  out << "index,branch,z,ebis\n";
  for (const MixPoint& m : curve) {
    out << m.index << ',' << to_string(m.branch) << ',' << format_fixed(m.point.z) << ','
        << format_fixed(m.point.ebis) << '\n';
  }
  out << "# switch_index," << switch_index << '\n';
  if (switch_index < curve.size()) {
    out << "# jump," << format_fixed(curve[switch_index].jump) << '\n';
  }
  return out.str();
}

std::string emit_sweep_csv(std::span<const SweepRecord> records) {
  std::ostringstream out;
  out << "alpha,beta,vulnerability,loss,z_star_baseline,z_star_disrupted,shift_direction\n";
  for (const SweepRecord& r : records) {
    out << format_fixed(r.parameters.alpha) << ',' << format_fixed(r.parameters.beta) << ','
        << format_fixed(r.parameters.vulnerability) << ',' << format_fixed(r.parameters.loss)
        << ',' << format_fixed(r.z_star_baseline) << ',' << format_fixed(r.z_star_disrupted)
        << ',' << to_string(r.shift_direction) << '\n';
  }
  return out.str();
}

std::string format_optimization(const Scenario& scenario, const OptimizationResult& result) {
  std::ostringstream out;
  out << "label: " << scenario.label << '\n';
  out << "periods: " << scenario.horizon() << '\n';
  out << "enbis_total: " << format_fixed(result.enbis_total) << '\n';
  for (std::size_t i = 0; i < result.per_period.size(); ++i) {
    const PeriodOptimum& p = result.per_period[i];
    const std::string key = "period[" + std::to_string(i) + "].";
    out << key << "z_star: " << format_fixed(p.z_star) << '\n';
    out << key << "breach_probability: " << format_fixed(p.breach_probability_at_optimum) << '\n';
    out << key << "ebis: " << format_fixed(p.ebis_at_optimum) << '\n';
    out << key << "enbis: " << format_fixed(p.enbis_at_optimum()) << '\n';
    out << key << "method: " << to_string(p.method) << '\n';
  }
  return out.str();
}

std::string format_delta_z(const DeltaZSummary& s) {
  std::ostringstream out;
  out << "label_a: " << s.label_a << '\n';
  out << "label_b: " << s.label_b << '\n';
  out << "mode: " << (s.optimized ? "optimized" : "given") << '\n';
  out << "period_count: " << s.report.period_count << '\n';
  out << "enbis_a: " << format_fixed(s.report.enbis_a) << '\n';
  out << "enbis_b: " << format_fixed(s.report.enbis_b) << '\n';
  out << "delta_z: " << format_fixed(s.report.delta_z) << '\n';
  out << "investment_a: " << format_fixed(s.plan_a.total()) << '\n';
  out << "investment_b: " << format_fixed(s.plan_b.total()) << '\n';
  if (s.plan_a.total() > 0.0) {
    out << "productivity_ratio: " << format_fixed(productivity_ratio(s.plan_a, s.plan_b)) << '\n';
  } else {
    out << "productivity_ratio: n/a\n";
  }
  out << "threshold: " << format_fixed(s.report.threshold_used) << '\n';
  out << "classified_disruptive: " << bool_text(s.report.classified_disruptive) << '\n';
  return out.str();
}

std::string render_svg(std::span<const Polyline> series, const std::string& title) {
  constexpr double width = 640.0;
  constexpr double height = 400.0;
  constexpr double margin = 40.0;
  constexpr std::array<const char*, 4> colors{"#1f77b4", "#d62728", "#7f7f7f", "#2ca02c"};

  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const Polyline& line : series) {
    for (const auto& [x, y] : line.points) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
  if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;
  const auto sx = [&](double x) { return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin); };
  const auto sy = [&](double y) {
    return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  out << "<title>" << title << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = colors[i % colors.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (const auto& [x, y] : series[i].points) out << sx(x) << ',' << sy(y) << ' ';
    out << "\"/>\n";
    out << "<text x=\"" << width - margin - 120 << "\" y=\"" << margin + 16.0 * static_cast<double>(i)
        << "\" fill=\"" << color << "\" font-size=\"12\">" << series[i].name << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace glinvest
