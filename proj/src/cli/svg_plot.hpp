#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace driftmax::cli {

/// Static SVG line chart of (N, ratio) points with a log2 N axis.
void write_ratio_plot(std::ostream& out, const std::vector<std::pair<double, double>>& points, const std::string& title);

}  // namespace driftmax::cli
