#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "retailsim/cli/results_csv.hpp"

namespace retailsim::cli {

struct ChartPoint {
  double x = 0.0;
  double mean = 0.0;
  double stddev = 0.0;
};

class UnknownKpiError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Groups rows by arm_value (ascending) and averages the named KPI.
/// Throws UnknownKpiError for a column that is not a KPI.
std::vector<ChartPoint> chart_series(const ResultsTable& table, std::string_view kpi);

/// Index of the highest mean; first one wins ties.
std::size_t argmax(std::span<const ChartPoint> series);

/// Static SVG line chart: mean line over a mean +/- one standard deviation
/// band. Output depends only on the inputs, so re-rendering is byte-identical.
/// The root element carries data-argmax with the x value of the peak.
std::string render_chart_svg(std::span<const ChartPoint> series, std::string_view kpi,
                             std::string_view x_label);

}  // namespace retailsim::cli
