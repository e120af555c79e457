#include "jcpurity/svg.hpp"

#include <cstdio>
#include <fstream>

namespace jcpurity {

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 60.0;
constexpr double kYMax = 1.05;

std::string series_color(const std::string& name) {
    // Fixed caption colors for the canonical trio, a stable palette otherwise.
    if (name == "tan_phi") return "blue";
    if (name == "concurrence") return "red";
    if (name == "excitation") return "green";
    static const char* palette[] = {"darkorange", "purple",  "teal",
                                    "brown",      "magenta", "olive"};
    return palette[static_cast<std::size_t>(column_index(name)) %
                   (sizeof(palette) / sizeof(palette[0]))];
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

std::string render_svg_string(const std::vector<ScanRecord>& records,
                              const std::vector<std::string>& series) {
    if (records.size() < 2) {
        throw EmptySeries("SVG rendering requires at least 2 records");
    }
    if (series.empty()) {
        throw EmptySeries("no series selected");
    }
    std::vector<int> columns;
    for (const auto& name : series) {
        const int idx = column_index(name);
        if (idx <= 0) {  // tau itself is the x axis, not a series
            throw EmptySeries("unknown series name: " + name);
        }
        columns.push_back(idx);
    }

    const double tau_min = records.front().tau;
    const double tau_max = records.back().tau;
    const double span = tau_max - tau_min;
    if (!(span > 0.0)) {
        throw EmptySeries("records must span an increasing tau range");
    }
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const auto x_of = [&](double tau) {
        return kMarginLeft + (tau - tau_min) / span * plot_w;
    };
    const auto y_of = [&](double v) {
        return kMarginTop + (kYMax - v) / kYMax * plot_h;
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<rect width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"white\"/>\n";

    // frame
    svg += "<rect x=\"" + num(kMarginLeft) + "\" y=\"" + num(kMarginTop) +
           "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"black\"/>\n";

    // x ticks
    const int x_ticks = 10;
    for (int i = 0; i <= x_ticks; ++i) {
        const double tau = tau_min + span * i / x_ticks;
        const double x = x_of(tau);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kMarginTop + plot_h) +
               "\" x2=\"" + num(x) + "\" y2=\"" +
               num(kMarginTop + plot_h + 6) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" +
               num(kMarginTop + plot_h + 22) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + tick_label(tau) +
               "</text>\n";
    }
    // y ticks
    for (int i = 0; i <= 5; ++i) {
        const double v = 0.2 * i;
        const double y = y_of(v);
        svg += "<line x1=\"" + num(kMarginLeft - 6) + "\" y1=\"" + num(y) +
               "\" x2=\"" + num(kMarginLeft) + "\" y2=\"" + num(y) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(kMarginLeft - 10) + "\" y=\"" + num(y + 4) +
               "\" font-size=\"12\" text-anchor=\"end\">" + tick_label(v) +
               "</text>\n";
    }

    // axis labels
    svg += "<text x=\"" + num(kMarginLeft + plot_w / 2) + "\" y=\"" +
           num(kHeight - 15) +
           "\" font-size=\"14\" text-anchor=\"middle\">scaled time "
           "&#964; = gt</text>\n";
    svg += "<text x=\"18\" y=\"" + num(kMarginTop + plot_h / 2) +
           "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 "
           "18 " + num(kMarginTop + plot_h / 2) + ")\">value</text>\n";

    // polylines
    for (std::size_t s = 0; s < columns.size(); ++s) {
        svg += "<polyline fill=\"none\" stroke=\"" + series_color(series[s]) +
               "\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (i) svg += ' ';
            const double v = record_field(records[i], columns[s]);
            svg += num(x_of(records[i].tau)) + "," + num(y_of(v));
        }
        svg += "\"/>\n";
    }

    // legend
    for (std::size_t s = 0; s < series.size(); ++s) {
        const double y = kMarginTop + 14 + 18.0 * s;
        const double x = kMarginLeft + plot_w - 150;
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(x + 28) + "\" y2=\"" + num(y) + "\" stroke=\"" +
               series_color(series[s]) + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(x + 34) + "\" y=\"" + num(y + 4) +
               "\" font-size=\"12\">" + series[s] + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

void render_svg(const std::vector<ScanRecord>& records,
                const std::vector<std::string>& series,
                const std::string& path) {
    const std::string body = render_svg_string(records, series);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    out << body;
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

}  // namespace jcpurity
