#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wordmaps {

struct Budgets {
  std::uint64_t max_tuples = 10'000'000;
  std::uint64_t max_hom_assignments = 10'000'000;
};

/// CLI/config-file battery description. Loading validates every group spec
/// and requires positive budgets.
struct BatteryConfig {
  std::vector<std::string> groups;
  Budgets budgets;
  std::string output = "-";  // "-" means stdout
  std::string format = "json";
};

/// Z2..Z8, S3, S4, A4, D4, D6, S3xZ2.
const std::vector<std::string>& default_battery();

BatteryConfig load_battery_config(const std::string& path);

}  // namespace wordmaps
