#include "rodsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace rodsim {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                         "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

double transform(double v, bool log_scale) { return log_scale ? std::log10(v) : v; }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

}  // namespace

void write_svg_chart(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<SvgSeries>& series, bool log_x, bool log_y) {
    constexpr double width = 720, height = 480;
    constexpr double ml = 80, mr = 30, mt = 40, mb = 60;

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (log_x && s.x[i] <= 0.0) continue;
            if (log_y && s.y[i] <= 0.0) continue;
            x_lo = std::min(x_lo, transform(s.x[i], log_x));
            x_hi = std::max(x_hi, transform(s.x[i], log_x));
            y_lo = std::min(y_lo, transform(s.y[i], log_y));
            y_hi = std::max(y_hi, transform(s.y[i], log_y));
        }
    if (!(x_lo < x_hi)) {
        x_lo -= 0.5;
        x_hi += 0.5;
    }
    if (!(y_lo < y_hi)) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    const double x_pad = 0.03 * (x_hi - x_lo), y_pad = 0.05 * (y_hi - y_lo);
    x_lo -= x_pad;
    x_hi += x_pad;
    y_lo -= y_pad;
    y_hi += y_pad;

    auto px = [&](double v) { return ml + (transform(v, log_x) - x_lo) / (x_hi - x_lo) * (width - ml - mr); };
    auto py = [&](double v) { return height - mb - (transform(v, log_y) - y_lo) / (y_hi - y_lo) * (height - mt - mb); };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double fx = x_lo + (x_hi - x_lo) * i / 5.0;
        const double fy = y_lo + (y_hi - y_lo) * i / 5.0;
        const double gx = ml + (width - ml - mr) * i / 5.0;
        const double gy = height - mb - (height - mt - mb) * i / 5.0;
        const double vx = log_x ? std::pow(10.0, fx) : fx;
        const double vy = log_y ? std::pow(10.0, fy) : fy;
        out << "<line x1=\"" << gx << "\" y1=\"" << height - mb << "\" x2=\"" << gx << "\" y2=\""
            << height - mb + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << gx << "\" y=\"" << height - mb + 20
            << "\" text-anchor=\"middle\" font-size=\"11\">" << num(vx) << "</text>\n"
            << "<line x1=\"" << ml - 5 << "\" y1=\"" << gy << "\" x2=\"" << ml << "\" y2=\"" << gy
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << ml - 8 << "\" y=\"" << gy + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << num(vy) << "</text>\n";
    }
    out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 15
        << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n"
        << "<text x=\"18\" y=\"" << (mt + height - mb) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
        << (mt + height - mb) / 2 << ")\">" << y_label << "</text>\n";

    int color = 0;
    double legend_y = mt + 8;
    for (const auto& s : series) {
        const char* c = kColors[color++ % 8];
        out << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (log_x && s.x[i] <= 0.0) continue;
            if (log_y && s.y[i] <= 0.0) continue;
            out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
        }
        out << "\"/>\n";
        if (!s.label.empty()) {
            out << "<line x1=\"" << width - mr - 150 << "\" y1=\"" << legend_y << "\" x2=\""
                << width - mr - 120 << "\" y2=\"" << legend_y << "\" stroke=\"" << c
                << "\" stroke-width=\"1.5\"/>\n"
                << "<text x=\"" << width - mr - 114 << "\" y=\"" << legend_y + 4
                << "\" font-size=\"12\">" << s.label << "</text>\n";
            legend_y += 18;
        }
    }
    out << "</svg>\n";
}

}  // namespace rodsim
