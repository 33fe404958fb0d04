#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "heatfix/metrics.hpp"

namespace heatfix {

struct ReportParams {
  std::optional<int> window;
  std::size_t cell_size = 1;
  std::optional<double> idle_cap_ms;
  std::optional<double> epsilon;
};

nlohmann::json to_json(const ComparisonReport& report, const ReportParams& params);

// Correlation to 4 decimals, coordinates and distance to 1 decimal.
void print_comparison(std::ostream& out, const ComparisonReport& report,
                      const std::string& name_a, const std::string& name_b);

}  // namespace heatfix
