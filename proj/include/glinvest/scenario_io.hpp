#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "glinvest/model.hpp"

namespace glinvest {

/// A parsed scenario file. Periods may optionally carry an `investment`
/// field; when every period does, `plan` holds those amounts.
struct ScenarioDocument {
  Scenario scenario;
  std::optional<InvestmentPlan> plan;
};

/// Parses and validates a scenario document:
///
///     {"label": "...",
///      "periods": [{"vulnerability": 0.5, "loss": 100, "alpha": 1, "beta": 1,
///                   "disruptive": 0, "investment": 1.0}]}
///
/// `investment` is optional but must then be present on all periods or none.
/// Unknown fields are rejected. Syntax errors raise ParseError with the line
/// and column; schema and range errors name the field, e.g. `periods[0].beta`.
[[nodiscard]] ScenarioDocument parse_scenario_document(std::string_view text);

/// parse_scenario_document without the investment plan.
[[nodiscard]] Scenario parse_scenario(std::string_view text);

[[nodiscard]] ScenarioDocument load_scenario_file(const std::filesystem::path& path);

/// Serializes to the same schema. Numbers are written with round-trip precision.
[[nodiscard]] std::string emit_scenario(const Scenario& scenario,
                                        const std::optional<InvestmentPlan>& plan = std::nullopt);

}  // namespace glinvest
