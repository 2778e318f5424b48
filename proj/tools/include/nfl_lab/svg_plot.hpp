#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace nfl_lab {

// Minimal static SVG chart: lines, scatter points with optional error bars,
// horizontal reference lines. No dependencies, deterministic output bytes.
class SvgPlot {
  public:
    SvgPlot(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    void add_line(std::vector<double> xs, std::vector<double> ys, std::string color,
                  std::string label);
    void add_points(std::vector<double> xs, std::vector<double> ys, std::vector<double> y_err,
                    std::string color, std::string label);
    void add_hline(double y, std::string color, std::string label);

    std::string render(int width = 720, int height = 480) const;
    void write(const std::filesystem::path& path) const;

  private:
    struct Series {
        enum class Kind { kLine, kPoints, kHline } kind;
        std::vector<double> xs, ys, y_err;
        double level{0.0};
        std::string color;
        std::string label;
    };

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

}  // namespace nfl_lab
