#include "nfl_lab/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "nfl_lab/csv.hpp"

namespace nfl_lab {

namespace {

std::string num(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6g", v);
    return buffer;
}

std::string escape(const std::string& text) {
    std::string out;
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

}  // namespace

void SvgPlot::add_line(std::vector<double> xs, std::vector<double> ys, std::string color,
                       std::string label) {
    if (xs.size() != ys.size()) throw std::invalid_argument("svg line: size mismatch");
    series_.push_back({Series::Kind::kLine, std::move(xs), std::move(ys), {}, 0.0,
                       std::move(color), std::move(label)});
}

void SvgPlot::add_points(std::vector<double> xs, std::vector<double> ys, std::vector<double> y_err,
                         std::string color, std::string label) {
    if (xs.size() != ys.size() || (!y_err.empty() && y_err.size() != ys.size()))
        throw std::invalid_argument("svg points: size mismatch");
    series_.push_back({Series::Kind::kPoints, std::move(xs), std::move(ys), std::move(y_err), 0.0,
                       std::move(color), std::move(label)});
}

void SvgPlot::add_hline(double y, std::string color, std::string label) {
    series_.push_back({Series::Kind::kHline, {}, {}, {}, y, std::move(color), std::move(label)});
}

std::string SvgPlot::render(int width, int height) const {
    const double margin_left = 72, margin_right = 16, margin_top = 40, margin_bottom = 52;
    const double plot_w = width - margin_left - margin_right;
    const double plot_h = height - margin_top - margin_bottom;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool any = false;
    for (const Series& s : series_) {
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            const double lo = s.ys[i] - (i < s.y_err.size() ? s.y_err[i] : 0.0);
            const double hi = s.ys[i] + (i < s.y_err.size() ? s.y_err[i] : 0.0);
            if (!any) {
                x_min = x_max = s.xs[i];
                y_min = lo;
                y_max = hi;
                any = true;
            } else {
                x_min = std::min(x_min, s.xs[i]);
                x_max = std::max(x_max, s.xs[i]);
                y_min = std::min(y_min, lo);
                y_max = std::max(y_max, hi);
            }
        }
        if (s.kind == Series::Kind::kHline && any) {
            y_min = std::min(y_min, s.level);
            y_max = std::max(y_max, s.level);
        }
    }
    if (x_max == x_min) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (y_max == y_min) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const double x_pad = 0.05 * (x_max - x_min);
    const double y_pad = 0.08 * (y_max - y_min);
    x_min -= x_pad;
    x_max += x_pad;
    y_min -= y_pad;
    y_max += y_pad;

    const auto sx = [&](double x) {
        return margin_left + (x - x_min) / (x_max - x_min) * plot_w;
    };
    const auto sy = [&](double y) {
        return margin_top + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(width / 2.0) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\" "
           "font-family=\"sans-serif\">" + escape(title_) + "</text>\n";

    // Axes with five ticks per side.
    svg += "<g stroke=\"#444\" stroke-width=\"1\" font-size=\"11\" font-family=\"sans-serif\">\n";
    svg += "<line x1=\"" + num(margin_left) + "\" y1=\"" + num(margin_top) + "\" x2=\"" +
           num(margin_left) + "\" y2=\"" + num(margin_top + plot_h) + "\"/>\n";
    svg += "<line x1=\"" + num(margin_left) + "\" y1=\"" + num(margin_top + plot_h) + "\" x2=\"" +
           num(margin_left + plot_w) + "\" y2=\"" + num(margin_top + plot_h) + "\"/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const double fx = x_min + (x_max - x_min) * tick / 4.0;
        const double fy = y_min + (y_max - y_min) * tick / 4.0;
        svg += "<line x1=\"" + num(sx(fx)) + "\" y1=\"" + num(margin_top + plot_h) + "\" x2=\"" +
               num(sx(fx)) + "\" y2=\"" + num(margin_top + plot_h + 4) + "\"/>\n";
        svg += "<text x=\"" + num(sx(fx)) + "\" y=\"" + num(margin_top + plot_h + 18) +
               "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#222\">" + num(fx) + "</text>\n";
        svg += "<line x1=\"" + num(margin_left - 4) + "\" y1=\"" + num(sy(fy)) + "\" x2=\"" +
               num(margin_left) + "\" y2=\"" + num(sy(fy)) + "\"/>\n";
        svg += "<text x=\"" + num(margin_left - 8) + "\" y=\"" + num(sy(fy) + 4) +
               "\" text-anchor=\"end\" stroke=\"none\" fill=\"#222\">" + num(fy) + "</text>\n";
    }
    svg += "</g>\n";
    svg += "<text x=\"" + num(margin_left + plot_w / 2) + "\" y=\"" + num(height - 10.0) +
           "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" +
           escape(x_label_) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + num(margin_top + plot_h / 2) +
           "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\" transform=\"rotate(-90 16 " +
           num(margin_top + plot_h / 2) + ")\">" + escape(y_label_) + "</text>\n";

    double legend_y = margin_top + 6;
    for (const Series& s : series_) {
        if (s.kind == Series::Kind::kHline) {
            svg += "<line x1=\"" + num(margin_left) + "\" y1=\"" + num(sy(s.level)) + "\" x2=\"" +
                   num(margin_left + plot_w) + "\" y2=\"" + num(sy(s.level)) + "\" stroke=\"" +
                   s.color + "\" stroke-dasharray=\"6 4\" stroke-width=\"1.2\"/>\n";
        } else if (s.kind == Series::Kind::kLine) {
            std::string points;
            for (std::size_t i = 0; i < s.xs.size(); ++i)
                points += num(sx(s.xs[i])) + "," + num(sy(s.ys[i])) + " ";
            svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.6\" points=\"" +
                   points + "\"/>\n";
        } else {
            for (std::size_t i = 0; i < s.xs.size(); ++i) {
                const double px = sx(s.xs[i]);
                const double py = sy(s.ys[i]);
                if (i < s.y_err.size() && s.y_err[i] > 0.0) {
                    const double lo = sy(s.ys[i] - s.y_err[i]);
                    const double hi = sy(s.ys[i] + s.y_err[i]);
                    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(lo) + "\" x2=\"" + num(px) +
                           "\" y2=\"" + num(hi) + "\" stroke=\"" + s.color + "\" stroke-width=\"1\"/>\n";
                    svg += "<line x1=\"" + num(px - 3) + "\" y1=\"" + num(lo) + "\" x2=\"" +
                           num(px + 3) + "\" y2=\"" + num(lo) + "\" stroke=\"" + s.color +
                           "\" stroke-width=\"1\"/>\n";
                    svg += "<line x1=\"" + num(px - 3) + "\" y1=\"" + num(hi) + "\" x2=\"" +
                           num(px + 3) + "\" y2=\"" + num(hi) + "\" stroke=\"" + s.color +
                           "\" stroke-width=\"1\"/>\n";
                }
                svg += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"2.6\" fill=\"" +
                       s.color + "\"/>\n";
            }
        }
        if (!s.label.empty()) {
            svg += "<rect x=\"" + num(margin_left + plot_w - 150) + "\" y=\"" + num(legend_y) +
                   "\" width=\"10\" height=\"10\" fill=\"" + s.color + "\"/>\n";
            svg += "<text x=\"" + num(margin_left + plot_w - 135) + "\" y=\"" + num(legend_y + 9) +
                   "\" font-size=\"11\" font-family=\"sans-serif\">" + escape(s.label) + "</text>\n";
            legend_y += 16;
        }
    }
    svg += "</svg>\n";
    return svg;
}

void SvgPlot::write(const std::filesystem::path& path) const { write_text_file(path, render()); }

}  // namespace nfl_lab
