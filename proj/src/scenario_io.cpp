#include "glinvest/scenario_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "glinvest/error.hpp"

namespace glinvest {

namespace {

using nlohmann::json;

constexpr std::array kRootFields{"label", "periods"};
constexpr std::array kPeriodFields{"vulnerability", "loss", "alpha", "beta", "disruptive",
                                   "investment"};

template <std::size_t N>
void reject_unknown(const json& object, const std::array<const char*, N>& allowed,
                    std::string_view where) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || item.key() == name;
    if (!known) {
      throw ParseError(std::string(where) + ": unknown field '" + item.key() + "'");
    }
  }
}

const json& require(const json& object, const char* key, std::string_view where) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(std::string(where) + "." + key + " is missing");
  }
  return *it;
}

double number_field(const json& object, const char* key, std::string_view where) {
  const json& value = require(object, key, where);
  if (!value.is_number()) {
    throw ParseError(std::string(where) + "." + key + " must be a number");
  }
  return value.get<double>();
}

bool disruption_field(const json& object, std::string_view where) {
  const json& value = require(object, "disruptive", where);
  const std::string field = std::string(where) + ".disruptive";
  if (!value.is_number()) throw ParseError(field + " must be a number (0 or 1)");
  const double d = value.get<double>();
  if (d != 0.0 && d != 1.0) {
    std::ostringstream msg;
    msg << field << " must be 0 or 1: the disruption dummy is 0 when no disruptive "
        << "technology is used and 1 otherwise (got " << value.dump() << ")";
    throw DomainError(msg.str());
  }
  return d == 1.0;
}

}  // namespace

ScenarioDocument parse_scenario_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario syntax error: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("scenario document must be a JSON object");
  reject_unknown(root, kRootFields, "scenario");

  const json& label = require(root, "label", "scenario");
  if (!label.is_string()) throw ParseError("scenario.label must be a string");
  const json& periods = require(root, "periods", "scenario");
  if (!periods.is_array()) throw ParseError("scenario.periods must be an array");

  ScenarioDocument doc;
  doc.scenario.label = label.get<std::string>();
  InvestmentPlan plan;
  std::size_t with_investment = 0;

  for (std::size_t i = 0; i < periods.size(); ++i) {
    const std::string where = "periods[" + std::to_string(i) + "]";
    const json& p = periods[i];
    if (!p.is_object()) throw ParseError(where + " must be an object");
    reject_unknown(p, kPeriodFields, where);

    PeriodSpec period;
    period.vulnerability = number_field(p, "vulnerability", where);
    period.loss = number_field(p, "loss", where);
    period.technology.alpha = number_field(p, "alpha", where);
    period.technology.beta = number_field(p, "beta", where);
    period.technology.disruptive = disruption_field(p, where);
    validate(period, where);
    doc.scenario.periods.push_back(period);

    if (p.contains("investment")) {
      const double z = number_field(p, "investment", where);
      if (!(z >= 0.0)) throw DomainError(where + ".investment must be >= 0");
      plan.amounts.push_back(z);
      ++with_investment;
    }
  }

  validate(doc.scenario);
  if (with_investment == doc.scenario.horizon()) {
    doc.plan = std::move(plan);
  } else if (with_investment != 0) {
    throw ParseError("investment must be given for every period or for none (" +
                     std::to_string(with_investment) + " of " +
                     std::to_string(doc.scenario.horizon()) + " periods have it)");
  }
  return doc;
}

Scenario parse_scenario(std::string_view text) { return parse_scenario_document(text).scenario; }

ScenarioDocument load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scenario_document(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

std::string emit_scenario(const Scenario& scenario, const std::optional<InvestmentPlan>& plan) {
  if (plan) validate(*plan, scenario);
  json periods = json::array();
  for (std::size_t i = 0; i < scenario.horizon(); ++i) {
    const PeriodSpec& p = scenario.periods[i];
    json entry = {{"vulnerability", p.vulnerability},
                  {"loss", p.loss},
                  {"alpha", p.technology.alpha},
                  {"beta", p.technology.beta},
                  {"disruptive", p.technology.disruptive ? 1 : 0}};
    if (plan) entry["investment"] = plan->amounts[i];
    periods.push_back(std::move(entry));
  }
  const json root = {{"label", scenario.label}, {"periods", std::move(periods)}};
  return root.dump(2) + "\n";
}

}  // namespace glinvest
