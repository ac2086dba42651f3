#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "signet/errors.hpp"

namespace signet::cli {

namespace {

constexpr double W = 760, H = 520;
constexpr double ML = 70, MR = 25, MT = 45, MB = 55;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<double> linear_ticks(double lo, double hi) {
    if (!(hi > lo)) return {lo};
    const double span = hi - lo;
    double step = std::pow(10.0, std::floor(std::log10(span / 4.0)));
    if (span / step > 8.0) step *= 2.0;
    if (span / step > 8.0) step *= 2.5;
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12 * span; t += step)
        ticks.push_back(t);
    return ticks;
}

} // namespace

SvgFigure::SvgFigure(std::string title, std::string xlabel, std::string ylabel)
    : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

void SvgFigure::addLine(std::vector<double> xs, std::vector<double> ys, std::string color,
                        bool dashed) {
    series_.push_back({std::move(xs), std::move(ys), std::move(color), dashed, false});
}

void SvgFigure::addScatter(std::vector<double> xs, std::vector<double> ys, std::string color) {
    series_.push_back({std::move(xs), std::move(ys), std::move(color), false, true});
}

void SvgFigure::addVLine(double x, std::string color) { vlines_.push_back({x, std::move(color)}); }

void SvgFigure::write(const std::string& path) const {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    auto usable = [&](double v) { return !loglog_ || v > 0.0; };
    for (const auto& s : series_)
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
            if (!usable(s.xs[i]) || !usable(s.ys[i])) continue;
            xmin = std::min(xmin, s.xs[i]);
            xmax = std::max(xmax, s.xs[i]);
            ymin = std::min(ymin, s.ys[i]);
            ymax = std::max(ymax, s.ys[i]);
        }
    for (const auto& [x, c] : vlines_)
        if (usable(x)) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
        }
    if (!(xmax >= xmin)) {
        xmin = 0;
        xmax = 1;
        ymin = 0;
        ymax = 1;
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    auto txx = [&](double v) { return loglog_ ? std::log10(v) : v; };
    const double pxmin = txx(xmin), pxmax = txx(xmax);
    const double pymin = txx(ymin), pymax = txx(ymax);
    auto sx = [&](double v) {
        return ML + (txx(v) - pxmin) / (pxmax - pxmin) * (W - ML - MR);
    };
    auto sy = [&](double v) {
        return H - MB - (txx(v) - pymin) / (pymax - pymin) * (H - MT - MB);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title_ << "</text>\n";

    // axes
    out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
        << H - MB << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 14
        << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel_ << "</text>\n";
    out << "<text x=\"18\" y=\"" << (MT + H - MB) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
        << (MT + H - MB) / 2 << ")\">" << ylabel_ << "</text>\n";

    auto tick_values = [&](double lo, double hi) {
        if (!loglog_) return linear_ticks(lo, hi);
        std::vector<double> ticks;
        for (int e = static_cast<int>(std::floor(std::log10(lo)));
             e <= static_cast<int>(std::ceil(std::log10(hi))); ++e)
            ticks.push_back(std::pow(10.0, e));
        return ticks;
    };
    for (double t : tick_values(xmin, xmax)) {
        if (t < xmin || t > xmax) continue;
        out << "<line x1=\"" << sx(t) << "\" y1=\"" << H - MB << "\" x2=\"" << sx(t) << "\" y2=\""
            << H - MB + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << sx(t) << "\" y=\"" << H - MB + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(t) << "</text>\n";
    }
    for (double t : tick_values(ymin, ymax)) {
        if (t < ymin || t > ymax) continue;
        out << "<line x1=\"" << ML - 5 << "\" y1=\"" << sy(t) << "\" x2=\"" << ML << "\" y2=\""
            << sy(t) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ML - 8 << "\" y=\"" << sy(t) + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(t) << "</text>\n";
    }

    for (const auto& [x, color] : vlines_) {
        if (!usable(x) || x < xmin || x > xmax) continue;
        out << "<line x1=\"" << sx(x) << "\" y1=\"" << MT << "\" x2=\"" << sx(x) << "\" y2=\""
            << H - MB << "\" stroke=\"" << color << "\" stroke-dasharray=\"5,4\"/>\n";
    }

    for (const auto& s : series_) {
        if (s.scatter) {
            for (std::size_t i = 0; i < s.xs.size(); ++i) {
                if (!usable(s.xs[i]) || !usable(s.ys[i])) continue;
                out << "<circle cx=\"" << sx(s.xs[i]) << "\" cy=\"" << sy(s.ys[i])
                    << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
            }
        } else {
            out << "<polyline fill=\"none\" stroke=\"" << s.color << "\"";
            if (s.dashed) out << " stroke-dasharray=\"6,4\"";
            out << " stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < s.xs.size(); ++i) {
                if (!usable(s.xs[i]) || !usable(s.ys[i])) continue;
                out << sx(s.xs[i]) << ',' << sy(s.ys[i]) << ' ';
            }
            out << "\"/>\n";
        }
    }
    out << "</svg>\n";

    std::ofstream file(path);
    if (!file) throw IoError("cannot write SVG '" + path + "'");
    file << out.str();
}

void write_heatmap_svg(const std::string& path, const SignedNetwork& net,
                       const std::string& title) {
    const int n = net.size();
    const double cell = std::min(420.0 / n, 60.0);
    const double ml = 90, mt = 70;
    const double w = ml + n * cell + 30, h = mt + n * cell + 30;
    const double vmax = std::max(net.weights().cwiseAbs().maxCoeff(), 1e-12);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        << title << "</text>\n";
    for (int i = 0; i < n; ++i) {
        out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + (i + 0.65) * cell
            << "\" text-anchor=\"end\" font-size=\"11\">" << net.labelOf(i) << "</text>\n";
        out << "<text x=\"" << ml + (i + 0.5) * cell << "\" y=\"" << mt - 8
            << "\" text-anchor=\"middle\" font-size=\"11\">" << net.labelOf(i) << "</text>\n";
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double v = net(i, j) / vmax;
            int rch, gch, bch;
            if (v >= 0) { // white -> red
                rch = 255;
                gch = bch = static_cast<int>(std::lround(255 * (1.0 - v)));
            } else { // white -> blue
                bch = 255;
                rch = gch = static_cast<int>(std::lround(255 * (1.0 + v)));
            }
            out << "<rect x=\"" << ml + j * cell << "\" y=\"" << mt + i * cell << "\" width=\""
                << cell << "\" height=\"" << cell << "\" fill=\"rgb(" << rch << ',' << gch << ','
                << bch << ")\" stroke=\"#ccc\" stroke-width=\"0.5\"/>\n";
        }
    out << "</svg>\n";

    std::ofstream file(path);
    if (!file) throw IoError("cannot write SVG '" + path + "'");
    file << out.str();
}

} // namespace signet::cli
