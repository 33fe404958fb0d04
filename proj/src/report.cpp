#include "heatfix/report.hpp"

#include <fmt/format.h>

namespace heatfix {

nlohmann::json to_json(const ComparisonReport& report, const ReportParams& params) {
  auto optional = [](const auto& v) -> nlohmann::json {
    if (v) return *v;
    return nullptr;
  };
  return {
      {"correlation", report.correlation},
      {"cog_a", {{"x", report.cog_a.x}, {"y", report.cog_a.y}}},
      {"cog_b", {{"x", report.cog_b.x}, {"y", report.cog_b.y}}},
      {"distance", report.distance},
      {"params",
       {{"window", optional(params.window)},
        {"cell_size", params.cell_size},
        {"idle_cap", optional(params.idle_cap_ms)},
        {"epsilon", optional(params.epsilon)}}},
  };
}

void print_comparison(std::ostream& out, const ComparisonReport& report, const std::string& name_a,
                      const std::string& name_b) {
  const std::size_t width = std::max<std::size_t>({8, name_a.size(), name_b.size()});
  out << "Centers of gravity\n";
  out << fmt::format("  {:<{}} {:>10} {:>10}\n", "", width, "x", "y");
  out << fmt::format("  {:<{}} {:>10.1f} {:>10.1f}\n", name_a, width, report.cog_a.x, report.cog_a.y);
  out << fmt::format("  {:<{}} {:>10.1f} {:>10.1f}\n", name_b, width, report.cog_b.x, report.cog_b.y);
  out << fmt::format("Euclidean distance  {:.1f}\n", report.distance);
  out << fmt::format("Correlation         {:.4f}\n", report.correlation);
}

}  // namespace heatfix
