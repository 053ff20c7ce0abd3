#include "wordmaps/battery.hpp"

#include <fstream>

#include <json.hpp>

#include "wordmaps/groups.hpp"

namespace wordmaps {

const std::vector<std::string>& default_battery() {
  static const std::vector<std::string> battery = {
      "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "S3", "S4", "A4", "D4", "D6", "S3xZ2"};
  return battery;
}

BatteryConfig load_battery_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("battery config: cannot open " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("battery config: invalid JSON in " + path + ": " + e.what());
  }
  BatteryConfig cfg;
  if (!j.contains("groups") || !j["groups"].is_array() || j["groups"].empty()) {
    throw std::invalid_argument("battery config: \"groups\" must be a nonempty array");
  }
  for (const auto& g : j["groups"]) {
    if (!g.is_string()) {
      throw std::invalid_argument("battery config: group specs must be strings");
    }
    const std::string spec = g.get<std::string>();
    check_group_spec(spec);
    cfg.groups.push_back(spec);
  }
  if (j.contains("budgets")) {
    const auto& b = j["budgets"];
    if (b.contains("max_tuples")) cfg.budgets.max_tuples = b["max_tuples"].get<std::uint64_t>();
    if (b.contains("max_hom_assignments")) {
      cfg.budgets.max_hom_assignments = b["max_hom_assignments"].get<std::uint64_t>();
    }
  }
  if (cfg.budgets.max_tuples == 0 || cfg.budgets.max_hom_assignments == 0) {
    throw std::invalid_argument("battery config: budgets must be positive");
  }
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("format")) {
    cfg.format = j["format"].get<std::string>();
    if (cfg.format != "json" && cfg.format != "csv") {
      throw std::invalid_argument("battery config: format must be json or csv");
    }
  }
  return cfg;
}

}  // namespace wordmaps
