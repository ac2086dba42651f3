#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signet/network.hpp"

namespace signet::cli {

/// Minimal SVG chart writer: polylines, scatter points and reference lines
/// on linear or log-log axes. No timestamps or external resources, so equal
/// inputs give byte-identical files.
class SvgFigure {
public:
    SvgFigure(std::string title, std::string xlabel, std::string ylabel);

    void useLogLog() { loglog_ = true; }

    void addLine(std::vector<double> xs, std::vector<double> ys, std::string color,
                 bool dashed = false);
    void addScatter(std::vector<double> xs, std::vector<double> ys, std::string color);
    void addVLine(double x, std::string color);

    void write(const std::string& path) const;

private:
    struct Series {
        std::vector<double> xs, ys;
        std::string color;
        bool dashed = false;
        bool scatter = false;
    };
    std::string title_, xlabel_, ylabel_;
    bool loglog_ = false;
    std::vector<Series> series_;
    std::vector<std::pair<double, std::string>> vlines_;
};

/// Diverging blue-white-red heatmap of a signed matrix with node labels.
void write_heatmap_svg(const std::string& path, const SignedNetwork& net,
                       const std::string& title);

} // namespace signet::cli
