#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cosserat::cli {

struct PlotSeries {
    std::string label;
    std::vector<double> x, y;
    bool dashed = false;
    bool markers = false;  ///< points instead of a polyline
};

/// Minimal standalone SVG line chart.  Non-finite points are dropped and
/// break the polyline.
void write_svg_plot(std::ostream& os, const std::string& title, const std::string& xlabel, const std::string& ylabel,
                    const std::vector<PlotSeries>& series);

}  // namespace cosserat::cli
