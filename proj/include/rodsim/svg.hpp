#pragma once

#include <string>
#include <vector>

namespace rodsim {

/// One polyline of a chart.
struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Self-contained SVG line chart; optional log scaling per axis.
void write_svg_chart(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<SvgSeries>& series, bool log_x = false,
                     bool log_y = false);

}  // namespace rodsim
