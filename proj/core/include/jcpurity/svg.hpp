#pragma once

#include <string>
#include <vector>

#include "jcpurity/io.hpp"

namespace jcpurity {

struct EmptySeries : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Default series plotted by the figure-reproduction commands.
inline const std::vector<std::string> kDefaultSeries = {
    "tan_phi", "concurrence", "excitation"};

/// Standalone SVG line chart: x axis tau, y axis fixed to [0, 1.05], one
/// polyline per series (tan_phi blue, concurrence red, excitation green),
/// axis labels and a legend. Byte-deterministic for fixed input. Requires
/// >= 2 records and schema series names; throws EmptySeries otherwise.
std::string render_svg_string(const std::vector<ScanRecord>& records,
                              const std::vector<std::string>& series);

void render_svg(const std::vector<ScanRecord>& records,
                const std::vector<std::string>& series,
                const std::string& path);

}  // namespace jcpurity
