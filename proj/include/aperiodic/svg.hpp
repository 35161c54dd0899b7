// Deterministic SVG drawings of tile sets, tilings, partitions and coded orbits.
#pragma once

#include "pet.hpp"
#include "wangtiles.hpp"

#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace aperiodic::svg {

inline std::vector<std::string> palette(unsigned seed = 0) {
    std::vector<std::string> p{"#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
                               "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8",
                               "#800000", "#aaffc3", "#808000", "#ffd8b1", "#a9a9a9"};
    if (seed) {
        std::mt19937 g(seed);
        for (std::size_t i = p.size() - 1; i > 0; --i) std::swap(p[i], p[g() % (i + 1)]);
    }
    return p;
}

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

namespace detail {

inline std::string header(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " +
           num(w) + " " + num(h) + "\">\n";
}

inline std::string text(double x, double y, const std::string& s, int size) {
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + std::to_string(size) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"sans-serif\">" + s + "</text>\n";
}

inline std::string poly(const std::vector<std::pair<double, double>>& pts, const std::string& fill, const std::string& extra = "") {
    std::string s = "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + num(pts[i].first) + "," + num(pts[i].second);
    return s + "\" fill=\"" + fill + "\" stroke=\"black\" stroke-width=\"1\"" + extra + "/>\n";
}

// tile with lower-left corner at (x,y) in screen units of size s
inline std::string tile(const WangTile& t, double x, double y, double s, const std::map<std::string, std::string>& color) {
    double cx = x + s / 2, cy = y - s / 2;
    std::pair<double, double> ll{x, y}, lr{x + s, y}, ur{x + s, y - s}, ul{x, y - s}, c{cx, cy};
    std::string out;
    out += poly({lr, ur, c}, color.at(t.right()));
    out += poly({ur, ul, c}, color.at(t.top()));
    out += poly({ul, ll, c}, color.at(t.left()));
    out += poly({ll, lr, c}, color.at(t.bottom()));
    int fs = static_cast<int>(s / 6);
    out += text(x + s * 0.85, cy, t.right(), fs);
    out += text(cx, y - s * 0.85, t.top(), fs);
    out += text(x + s * 0.15, cy, t.left(), fs);
    out += text(cx, y - s * 0.15, t.bottom(), fs);
    return out;
}

inline std::map<std::string, std::string> color_map(const WangTileSet& T, unsigned seed) {
    std::set<std::string> all = T.vertical_colors();
    for (auto& c : T.horizontal_colors()) all.insert(c);
    auto pal = palette(seed);
    std::map<std::string, std::string> m;
    std::size_t i = 0;
    for (auto& c : all) m[c] = pal[i++ % pal.size()];
    return m;
}

}  // namespace detail

// the tiles in a row, index below each
inline std::string render_tiles(const WangTileSet& T, unsigned seed = 0, int per_row = 10) {
    const double s = 60, gap = 20;
    int n = static_cast<int>(T.size());
    int rows = n ? (n + per_row - 1) / per_row : 0;
    int cols = std::min(n, per_row);
    double W = cols * (s + gap) + gap, H = rows * (s + 2 * gap) + gap;
    std::string out = detail::header(W, H);
    auto color = detail::color_map(T, seed);
    for (int i = 0; i < n; ++i) {
        double x = gap + (i % per_row) * (s + gap), y = gap + (i / per_row) * (s + 2 * gap) + s;
        out += detail::tile(T[i], x, y, s, color);
        out += detail::text(x + s / 2, y + gap / 2 + 2, std::to_string(i), 10);
    }
    return out + "</svg>\n";
}

inline std::string render_tiling(const WangTileSet& T, const Word2d& w, unsigned seed = 0) {
    const double s = 40;
    std::string out = detail::header(w.width() * s, w.height() * s);
    auto color = detail::color_map(T, seed);
    for (int x = 0; x < w.width(); ++x)
        for (int y = 0; y < w.height(); ++y) out += detail::tile(T[w(x, y)], x * s, (w.height() - y) * s, s, color);
    return out + "</svg>\n";
}

namespace detail {

struct Frame {
    double scale, height;
    std::pair<double, double> operator()(const Point& p) const {
        return {p.x.to_double() * scale, height - p.y.to_double() * scale};
    }
};

inline std::string partition_body(const TorusPartition& p, const Frame& f, unsigned seed) {
    auto pal = palette(seed);
    std::string out;
    for (auto& [k, r] : p.atoms()) {
        const std::string& fill = pal[static_cast<std::size_t>(k) % pal.size()];
        const Polygon* biggest = nullptr;
        double best = -1;
        for (auto& c : r.cells) {
            std::vector<std::pair<double, double>> pts;
            for (auto& v : c.v) pts.push_back(f(v));
            out += poly(pts, fill, " fill-opacity=\"0.7\"");
            double a = area(c).to_double();
            if (a > best) best = a, biggest = &c;
        }
        if (biggest) {
            auto [x, y] = f(biggest->centroid_hint());
            out += text(x, y, std::to_string(k), 12);
        }
    }
    return out;
}

}  // namespace detail

inline std::string render_partition(const TorusPartition& p, unsigned seed = 0) {
    const double size = 500;
    double l1 = p.lattice().l1.to_double(), l2 = p.lattice().l2.to_double();
    double scale = size / std::max(l1, l2);
    detail::Frame f{scale, l2 * scale};
    return detail::header(l1 * scale, l2 * scale) + detail::partition_body(p, f, seed) + "</svg>\n";
}

// partition with the orbit points R^n(x), n in the shape, and their codes
inline std::string render_coded_orbit(const TorusPartition& p, const Z2Action& a, const Point& x, Shape shape,
                                      unsigned seed = 0) {
    const double size = 500;
    double l1 = p.lattice().l1.to_double(), l2 = p.lattice().l2.to_double();
    double scale = size / std::max(l1, l2);
    detail::Frame f{scale, l2 * scale};
    std::string out = detail::header(l1 * scale, l2 * scale) + detail::partition_body(p, f, seed);
    for (int i = 0; i < shape.w; ++i)
        for (int j = 0; j < shape.h; ++j) {
            Point y = a.act(x, i, j);
            auto [sx, sy] = f(y);
            out += "<circle cx=\"" + num(sx) + "\" cy=\"" + num(sy) + "\" r=\"2.5\" fill=\"black\"/>\n";
            std::string lab;
            try {
                lab = std::to_string(p.code(y));
            } catch (const BoundaryHit&) {
                lab = "?";
            }
            out += "<text x=\"" + num(sx + 4) + "\" y=\"" + num(sy - 4) + "\" font-size=\"9\" font-family=\"sans-serif\">" +
                   lab + "</text>\n";
        }
    return out + "</svg>\n";
}

}  // namespace aperiodic::svg
