#include "netent/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "netent/dataset_io.hpp"

namespace netent {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

std::string tick_label(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", x);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    void widen(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
};

}  // namespace

std::string render_line_chart(const ChartSpec& spec) {
    bool any = false;
    Range x_range{std::numeric_limits<double>::infinity(),
                  -std::numeric_limits<double>::infinity()};
    Range y_range = x_range;
    for (const Series& s : spec.series) {
        for (const auto& [x, y] : s.points) {
            x_range.widen(x);
            y_range.widen(y);
            any = true;
        }
    }
    if (!any) {
        throw std::invalid_argument("nothing to plot");
    }
    if (x_range.hi - x_range.lo < 1e-12) {
        x_range.lo -= 0.5;
        x_range.hi += 0.5;
    }
    if (y_range.hi - y_range.lo < 1e-12) {
        y_range.lo -= 0.5;
        y_range.hi += 0.5;
    }
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - x_range.lo) / (x_range.hi - x_range.lo) * plot_w; };
    auto sy = [&](double y) {
        return kTop + plot_h - (y - y_range.lo) / (y_range.hi - y_range.lo) * plot_h;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << escape(spec.title) << "</text>\n";

    out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\""
        << fmt(kLeft + plot_w) << "\" y2=\"" << fmt(kTop + plot_h)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft)
        << "\" y2=\"" << fmt(kTop + plot_h) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    const int ticks = 5;
    for (int t = 0; t <= ticks; ++t) {
        const double frac = static_cast<double>(t) / ticks;
        const double xv = x_range.lo + frac * (x_range.hi - x_range.lo);
        const double yv = y_range.lo + frac * (y_range.hi - y_range.lo);
        out << "<line x1=\"" << fmt(sx(xv)) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\""
            << fmt(sx(xv)) << "\" y2=\"" << fmt(kTop + plot_h + 5)
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(sx(xv)) << "\" y=\"" << fmt(kTop + plot_h + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << tick_label(xv) << "</text>\n";
        out << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(sy(yv)) << "\" x2=\""
            << fmt(kLeft) << "\" y2=\"" << fmt(sy(yv))
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(kLeft - 9) << "\" y=\"" << fmt(sy(yv) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << tick_label(yv) << "</text>\n";
    }
    out << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 14)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << escape(spec.x_label) << "</text>\n";
    out << "<text x=\"20\" y=\"" << fmt(kTop + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 20 " << fmt(kTop + plot_h / 2) << ")\">"
        << escape(spec.y_label) << "</text>\n";

    std::size_t color = 0;
    for (const Series& s : spec.series) {
        if (s.points.empty()) {
            continue;
        }
        out << "<path class=\"series\" fill=\"none\" stroke=\""
            << kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))]
            << "\" stroke-width=\"1.5\" d=\"";
        for (std::size_t pt = 0; pt < s.points.size(); ++pt) {
            out << (pt == 0 ? "M" : " L") << fmt(sx(s.points[pt].first)) << ' '
                << fmt(sy(s.points[pt].second));
        }
        out << "\"/>\n";
        ++color;
    }

    double legend_y = kTop + 8.0;
    color = 0;
    for (const Series& s : spec.series) {
        if (s.points.empty()) {
            continue;
        }
        out << "<rect x=\"" << fmt(kLeft + plot_w - 150) << "\" y=\"" << fmt(legend_y - 8)
            << "\" width=\"14\" height=\"4\" fill=\""
            << kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))] << "\"/>\n";
        out << "<text x=\"" << fmt(kLeft + plot_w - 130) << "\" y=\"" << fmt(legend_y - 2)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.label)
            << "</text>\n";
        legend_y += 18.0;
        ++color;
    }
    out << "</svg>\n";
    return out.str();
}

void write_line_chart(const ChartSpec& spec, const std::string& path) {
    const std::string body = render_line_chart(spec);
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write " + path);
    }
    out << body;
    out.flush();
    if (!out) {
        throw io_error("write failed for " + path);
    }
}

}  // namespace netent
