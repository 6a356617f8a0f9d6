#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "splinefit/geometry.hpp"

namespace fixtures {

using splinefit::Point;
using splinefit::PointChain;

struct Named {
    std::string name;
    PointChain chain;
};

inline PointChain from_rows(const std::vector<std::vector<double>>& rows) {
    std::vector<Point> pts;
    for (const auto& r : rows) pts.push_back(Eigen::Map<const Eigen::VectorXd>(r.data(), Eigen::Index(r.size())));
    return PointChain(std::move(pts));
}

inline PointChain zigzag(int n) {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < n; ++i) rows.push_back({double(i), i % 2 ? 1.0 : 0.0});
    return from_rows(rows);
}

inline PointChain square_wave() {
    return from_rows({{0, 0}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 2}, {3, 2}, {3, 0}, {4, 0}, {4, 2}, {5, 2}});
}

// Densely sampled sine with a sharp kink in the middle.
inline PointChain kinked_wave() {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i <= 30; ++i) {
        const double x = 0.25 * i;
        rows.push_back({x, std::sin(x) + (i > 15 ? 0.15 * (i - 15) : 0.0)});
    }
    return from_rows(rows);
}

inline PointChain spiral() {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 36; ++i) {
        const double th = 0.3 * i;
        const double r = 1.0 + 0.25 * th;
        rows.push_back({r * std::cos(th), r * std::sin(th)});
    }
    return from_rows(rows);
}

// Rounded outline with a few corners, open at the seam.
inline PointChain blob() {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 40; ++i) {
        const double th = 2 * std::numbers::pi * i / 42.0;
        const double r = 3.0 + 0.8 * std::cos(3 * th) + 0.3 * std::sin(7 * th);
        rows.push_back({r * std::cos(th), r * std::sin(th)});
    }
    return from_rows(rows);
}

// (cos t, t, sin t) at n uniform t in [0, 2 pi].
inline PointChain helix(int n = 10) {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < n; ++i) {
        const double t = 2 * std::numbers::pi * i / (n - 1);
        rows.push_back({std::cos(t), t, std::sin(t)});
    }
    return from_rows(rows);
}

inline PointChain curve4d() {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 9; ++i) {
        const double t = 0.5 * i;
        rows.push_back({t, std::cos(t), std::sin(t), 0.25 * t * t});
    }
    return from_rows(rows);
}

inline std::vector<Named> planar_corpus() {
    return {{"zigzag12", zigzag(12)},
            {"square_wave", square_wave()},
            {"kinked_wave", kinked_wave()},
            {"spiral", spiral()},
            {"blob", blob()}};
}

inline std::vector<Named> space_corpus() { return {{"helix10", helix(10)}, {"curve4d", curve4d()}}; }

inline std::vector<Named> corpus() {
    auto all = planar_corpus();
    for (auto& f : space_corpus()) all.push_back(std::move(f));
    return all;
}

inline std::vector<double> to_vec(const Point& p) { return {p.data(), p.data() + p.size()}; }

}  // namespace fixtures
