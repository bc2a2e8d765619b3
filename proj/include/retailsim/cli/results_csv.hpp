#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "retailsim/metrics/kpi.hpp"
#include "retailsim/scenario/experiment.hpp"

namespace retailsim::cli {

/// Fixed column order of every per-replication results file.
std::vector<std::string> results_header();

/// Numbers are written with six decimals in the C locale.
std::string format_number(double value);

/// One row per (arm, replication), ordered by arm then replication.
void write_results_csv(std::ostream& out, const scenario::ExperimentResult& result);

/// Per-arm mean and sample standard deviation of every KPI column.
void write_summary_csv(std::ostream& out, const scenario::ExperimentResult& result);

/// Weekly series of each replication of a single arm.
void write_weekly_csv(std::ostream& out, std::span<const metrics::KpiReport> reports);

class CsvError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ResultsTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column position, or -1.
  [[nodiscard]] int column(std::string_view name) const;
};

/// Reads a results file written by write_results_csv. Throws CsvError on a
/// wrong header, ragged rows or non-numeric cells.
ResultsTable read_results_csv(std::istream& in);

}  // namespace retailsim::cli
