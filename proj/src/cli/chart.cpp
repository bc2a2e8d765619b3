#include "retailsim/cli/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "retailsim/metrics/kpi.hpp"

namespace retailsim::cli {

std::vector<ChartPoint> chart_series(const ResultsTable& table, std::string_view kpi) {
  const bool known = std::find(metrics::kKpiColumns.begin(), metrics::kKpiColumns.end(), kpi) !=
                     metrics::kKpiColumns.end();
  const int col = table.column(kpi);
  if (!known || col < 0) throw UnknownKpiError("unknown KPI '" + std::string(kpi) + "'");

  std::map<double, std::vector<double>> groups;
  for (const auto& row : table.rows) groups[row[0]].push_back(row[static_cast<std::size_t>(col)]);

  std::vector<ChartPoint> out;
  for (const auto& [x, values] : groups) {
    ChartPoint p;
    p.x = x;
    for (double v : values) p.mean += v;
    p.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - p.mean) * (v - p.mean);
      p.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    out.push_back(p);
  }
  return out;
}

std::size_t argmax(std::span<const ChartPoint> series) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (series[i].mean > series[best].mean) best = i;
  }
  return best;
}

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

std::string fmt(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (s.rfind("-0.", 0) == 0 && std::strtod(buf, nullptr) == 0.0) s.erase(0, 1);
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_chart_svg(std::span<const ChartPoint> series, std::string_view kpi,
                             std::string_view x_label) {
  if (series.empty()) throw std::invalid_argument("cannot chart an empty series");

  double x_lo = series.front().x;
  double x_hi = series.back().x;
  double y_lo = HUGE_VAL;
  double y_hi = -HUGE_VAL;
  for (const auto& p : series) {
    y_lo = std::min(y_lo, p.mean - p.stddev);
    y_hi = std::max(y_hi, p.mean + p.stddev);
  }
  if (x_hi <= x_lo) {
    x_lo -= 1.0;
    x_hi += 1.0;
  }
  const double pad = y_hi > y_lo ? 0.08 * (y_hi - y_lo) : std::max(1.0, std::abs(y_hi) * 0.1);
  y_lo -= pad;
  y_hi += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto sy = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  const auto peak = argmax(series);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth, 0) << "\" height=\""
      << fmt(kHeight, 0) << "\" viewBox=\"0 0 " << fmt(kWidth, 0) << ' ' << fmt(kHeight, 0)
      << "\" data-kpi=\"" << escape(kpi) << "\" data-argmax=\"" << fmt(series[peak].x, 6) << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kWidth, 0) << "\" height=\"" << fmt(kHeight, 0)
      << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << escape(kpi) << " vs " << escape(x_label) << "</text>\n";

  // Axes and grid.
  svg << "<g stroke=\"#444\" stroke-width=\"1\">\n";
  svg << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\"" << fmt(kLeft + plot_w)
      << "\" y2=\"" << fmt(kTop + plot_h) << "\"/>\n";
  svg << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
      << fmt(kTop + plot_h) << "\"/>\n";
  svg << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">\n";
  for (const auto& p : series) {
    svg << "<text x=\"" << fmt(sx(p.x)) << "\" y=\"" << fmt(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\">" << fmt(p.x, 0) << "</text>\n";
  }
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double y = y_lo + (y_hi - y_lo) * i / kTicks;
    svg << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(sy(y) + 4) << "\" text-anchor=\"end\">"
        << fmt(y, 3) << "</text>\n";
    svg << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(sy(y)) << "\" x2=\"" << fmt(kLeft + plot_w)
        << "\" y2=\"" << fmt(sy(y)) << "\" stroke=\"#ddd\"/>\n";
  }
  svg << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 15)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(x_label) << "</text>\n";
  svg << "</g>\n";

  // Band: upper edge left to right, lower edge back.
  svg << "<polygon class=\"band\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\" points=\"";
  for (const auto& p : series) svg << fmt(sx(p.x)) << ',' << fmt(sy(p.mean + p.stddev)) << ' ';
  for (auto it = series.rbegin(); it != series.rend(); ++it) {
    svg << fmt(sx(it->x)) << ',' << fmt(sy(it->mean - it->stddev)) << ' ';
  }
  svg << "\"/>\n";

  svg << "<polyline class=\"mean\" fill=\"none\" stroke=\"#08519c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) svg << ' ';
    svg << fmt(sx(series[i].x)) << ',' << fmt(sy(series[i].mean));
  }
  svg << "\"/>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& p = series[i];
    svg << "<circle" << (i == peak ? " class=\"argmax\"" : "") << " cx=\"" << fmt(sx(p.x)) << "\" cy=\""
        << fmt(sy(p.mean)) << "\" r=\"" << (i == peak ? "5" : "3") << "\" fill=\""
        << (i == peak ? "#d62728" : "#08519c") << "\" data-x=\"" << fmt(p.x, 6) << "\" data-mean=\""
        << fmt(p.mean, 6) << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace retailsim::cli
