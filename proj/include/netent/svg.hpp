#pragma once

#include <string>
#include <utility>
#include <vector>

namespace netent {

/// One named polyline of a chart.
struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

/// Renders a static line chart: one <path> per series, axes, tick labels, and
/// a legend. Output is fully determined by the input (no timestamps or
/// generator metadata). Throws std::invalid_argument when no series has a
/// point.
std::string render_line_chart(const ChartSpec& spec);

/// render_line_chart straight to a file. Throws netent::io_error on write
/// failure.
void write_line_chart(const ChartSpec& spec, const std::string& path);

}  // namespace netent
