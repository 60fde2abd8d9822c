#pragma once

// Test-only helpers: seeded samplers and a brute-force oracle that evaluates
// the breach function with std::pow, independent of the library's kernels.

#include <cmath>
#include <cstddef>
#include <random>
#include <string>

#include "glinvest/model.hpp"

namespace glinvest::testing {

inline std::string data_path(const std::string& name) {
  return std::string(GLINVEST_TEST_DATA_DIR) + "/data/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(GLINVEST_TEST_DATA_DIR) + "/golden/" + name;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return std::bernoulli_distribution(0.5)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  /// alpha in [0.01, 10], beta in [1, 5], v in [0, 1], L in [0, 1e6], d in {0, 1}.
  PeriodSpec period() {
    PeriodSpec p;
    p.technology.alpha = uniform(0.01, 10.0);
    p.technology.beta = uniform(1.0, 5.0);
    p.technology.disruptive = coin();
    p.vulnerability = uniform(0.0, 1.0);
    p.loss = uniform(0.0, 1e6);
    return p;
  }

  /// As period() but with v and L bounded away from zero.
  PeriodSpec exposed_period() {
    PeriodSpec p = period();
    p.vulnerability = uniform(0.01, 1.0);
    p.loss = uniform(1.0, 1e6);
    return p;
  }

  Scenario scenario(std::size_t min_periods, std::size_t max_periods) {
    Scenario s;
    s.label = "random";
    const std::size_t n = index(min_periods, max_periods);
    for (std::size_t i = 0; i < n; ++i) s.periods.push_back(period());
    return s;
  }

  InvestmentPlan plan(const Scenario& s) {
    InvestmentPlan plan;
    for (const PeriodSpec& p : s.periods) plan.amounts.push_back(uniform(0.0, p.expected_loss() + 1.0));
    return plan;
  }

 private:
  std::mt19937_64 rng_;
};

/// ENBIS written out directly: [v - v/(alpha*z + 1)^(beta + d)] * L - z.
inline double naive_enbis(double z, double v, double loss, double alpha, double beta, int d) {
  return (v - v / std::pow(alpha * z + 1.0, beta + d)) * loss - z;
}

inline double naive_enbis(double z, const PeriodSpec& p) {
  return naive_enbis(z, p.vulnerability, p.loss, p.technology.alpha, p.technology.beta,
                     p.technology.disruptive ? 1 : 0);
}

/// Brute-force argmax of naive_enbis over {0, h, 2h, ...} up to z_max; smallest z wins ties.
inline double brute_force_argmax(const PeriodSpec& p, double z_max, double step) {
  double best_z = 0.0;
  double best = naive_enbis(0.0, p);
  const auto n = static_cast<std::size_t>(std::llround(z_max / step));
  for (std::size_t i = 1; i <= n; ++i) {
    const double z = static_cast<double>(i) * step;
    const double value = naive_enbis(z, p);
    if (value > best) {
      best = value;
      best_z = z;
    }
  }
  return best_z;
}

inline PeriodSpec make_period(double v, double loss, double alpha, double beta, bool disruptive) {
  return PeriodSpec{v, loss, TechnologyProfile{alpha, beta, disruptive}};
}

}  // namespace glinvest::testing
