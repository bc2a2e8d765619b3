#include "retailsim/cli/results_csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace retailsim::cli {

std::vector<std::string> results_header() {
  std::vector<std::string> h{"arm_value", "replication"};
  for (auto c : metrics::kKpiColumns) h.emplace_back(c);
  return h;
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

namespace {

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

void write_results_csv(std::ostream& out, const scenario::ExperimentResult& result) {
  write_row(out, results_header());
  for (const auto& arm : result.arms) {
    for (std::size_t rep = 0; rep < arm.reports.size(); ++rep) {
      std::vector<std::string> cells{std::to_string(arm.value), std::to_string(rep)};
      for (auto c : metrics::kKpiColumns) cells.push_back(format_number(*metrics::kpi_value(arm.reports[rep], c)));
      write_row(out, cells);
    }
  }
}

void write_summary_csv(std::ostream& out, const scenario::ExperimentResult& result) {
  std::vector<std::string> header{"arm_value", "replications"};
  for (auto c : metrics::kKpiColumns) {
    header.push_back(std::string(c) + "_mean");
    header.push_back(std::string(c) + "_sd");
  }
  write_row(out, header);
  for (const auto& arm : result.arms) {
    std::vector<std::string> cells{std::to_string(arm.value), std::to_string(arm.reports.size())};
    for (auto c : metrics::kKpiColumns) {
      const auto s = arm.stats(c);
      cells.push_back(format_number(s.mean));
      cells.push_back(format_number(s.stddev));
    }
    write_row(out, cells);
  }
}

void write_weekly_csv(std::ostream& out, std::span<const metrics::KpiReport> reports) {
  write_row(out, {"replication", "week", "customers_arrived", "transactions", "service_level_index",
                  "abandoned_help", "abandoned_till", "mean_till_wait"});
  for (std::size_t rep = 0; rep < reports.size(); ++rep) {
    const auto& weekly = reports[rep].weekly;
    for (std::size_t w = 0; w < weekly.size(); ++w) {
      const auto& k = weekly[w];
      write_row(out, {std::to_string(rep), std::to_string(w), std::to_string(k.customers_arrived),
                      std::to_string(k.transactions), format_number(k.service_level_index),
                      std::to_string(k.abandoned_help), std::to_string(k.abandoned_till),
                      format_number(k.mean_till_wait)});
    }
  }
}

int ResultsTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

ResultsTable read_results_csv(std::istream& in) {
  ResultsTable t;
  std::string line;
  if (!std::getline(in, line)) throw CsvError("results file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  t.header = split(line);
  if (t.header != results_header()) throw CsvError("unexpected header: " + line);

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != t.header.size()) {
      throw CsvError("line " + std::to_string(line_no) + ": expected " + std::to_string(t.header.size()) +
                     " cells, got " + std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        throw CsvError("line " + std::to_string(line_no) + ": not a number: '" + cell + "'");
      }
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace retailsim::cli
