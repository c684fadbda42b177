#include "twopath/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "twopath/error.hpp"

namespace twopath {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 30, kBottom = 60;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double finite_or(double v, double fallback) { return std::isfinite(v) ? v : fallback; }

std::string trend_label(const std::vector<ExperimentRow>& rows) {
  if (rows.size() < 2) return "single point";
  std::vector<double> means;
  for (const auto& r : rows) means.push_back(r.mean_ratio);
  const bool up = follows_trend(means, Trend::NonDecreasing);
  const bool down = follows_trend(means, Trend::NonIncreasing);
  if (up && !down) return "non-decreasing";
  if (down && !up) return "non-increasing";
  if (up && down) {
    // Short sweeps pass both checks with the slack; decide strictly.
    const bool strict_up = follows_trend(means, Trend::NonDecreasing, 0);
    const bool strict_down = follows_trend(means, Trend::NonIncreasing, 0);
    if (strict_up && !strict_down) return "non-decreasing";
    if (strict_down && !strict_up) return "non-increasing";
    return "flat";
  }
  return "no monotone trend";
}

}  // namespace

std::string render_ratio_plot(const std::vector<ExperimentRow>& rows, const std::string& x_label) {
  if (rows.empty()) throw Error(ErrorKind::Parse, "no rows to plot");

  double x_min = rows.front().param, x_max = x_min;
  double y_max = 0;
  for (const auto& r : rows) {
    x_min = std::min(x_min, r.param);
    x_max = std::max(x_max, r.param);
    for (double y : {r.mean_ratio, r.p90}) if (std::isfinite(y)) y_max = std::max(y_max, y);
  }
  if (x_max == x_min) {
    x_min -= 1;
    x_max += 1;
  }
  if (y_max <= 0) y_max = 1;
  y_max *= 1.1;

  const double plot_w = kWidth - kLeft - kRight, plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) { return kTop + plot_h - std::clamp(finite_or(y, y_max), 0.0, y_max) / y_max * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"14\" text-anchor=\"middle\">Ratio vs. " << x_label << " ("
      << trend_label(rows) << ")</text>\n";

  if (rows.size() > 1) {
    svg << "<polygon fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\" points=\"";
    for (const auto& r : rows) svg << num(sx(r.param)) << ',' << num(sy(r.p90)) << ' ';
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) svg << num(sx(it->param)) << ',' << num(sy(it->p10)) << ' ';
    svg << "\"/>\n";
  }

  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
      << kTop + plot_h << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = y_max * i / 4;
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(sy(y) + 4) << "\" text-anchor=\"end\">" << num(y)
        << "</text>\n";
  }
  for (const auto& r : rows)
    svg << "<text x=\"" << num(sx(r.param)) << "\" y=\"" << kTop + plot_h + 16 << "\" text-anchor=\"middle\">"
        << num(r.param) << "</text>\n";
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  svg << "<text transform=\"translate(18," << kTop + plot_h / 2
      << ") rotate(-90)\" text-anchor=\"middle\">I* / E[I(selected)]</text>\n";

  svg << "<polyline fill=\"none\" stroke=\"#08519c\" stroke-width=\"2\" points=\"";
  for (const auto& r : rows) svg << num(sx(r.param)) << ',' << num(sy(r.mean_ratio)) << ' ';
  svg << "\"/>\n";
  for (const auto& r : rows)
    svg << "<circle cx=\"" << num(sx(r.param)) << "\" cy=\"" << num(sy(r.mean_ratio)) << "\" r=\"3\" fill=\"#08519c\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string plot_experiment_csv(const std::string& csv_path, const std::string& svg_path, const std::string& x_label) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + csv_path);
  std::ostringstream text;
  text << in.rdbuf();
  if (text.str().rfind("# status: incomplete", 0) == 0)
    throw Error(ErrorKind::Parse, csv_path + " is from an unfinished run");
  auto rows = parse_experiment_csv(text.str());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.param < b.param; });
  const std::string svg = render_ratio_plot(rows, x_label);

  std::string out_path = svg_path;
  if (out_path.empty()) {
    const auto dot = csv_path.rfind('.');
    out_path = (dot == std::string::npos ? csv_path : csv_path.substr(0, dot)) + ".svg";
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + out_path);
  out << svg;
  return out_path;
}

}  // namespace twopath
