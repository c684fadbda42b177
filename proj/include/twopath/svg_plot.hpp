#pragma once

#include <string>
#include <vector>

#include "twopath/experiment.hpp"

namespace twopath {

// Line plot of mean ratio against the swept parameter with the p10-p90 band
// shaded (omitted for a single row). The title names the trend of the mean
// ratio (one adjacent inversion tolerated). Throws Error{Parse} on empty input.
std::string render_ratio_plot(const std::vector<ExperimentRow>& rows, const std::string& x_label);

// Reads an experiment CSV and writes an SVG next to it (or to svg_path).
// Nothing is written on error.
std::string plot_experiment_csv(const std::string& csv_path, const std::string& svg_path = {},
                                const std::string& x_label = "parameter");

}  // namespace twopath
