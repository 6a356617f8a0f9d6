#include "splinefit/cardinal.hpp"

#include <cmath>
#include <string>

#include "splinefit/errors.hpp"

namespace splinefit {

namespace {

void check_unit_parameter(double u) {
    if (!(u >= 0.0 && u <= 1.0))
        throw std::out_of_range("segment parameter " + std::to_string(u) + " outside [0, 1]");
}

void check_window(const CardinalSegment& s) {
    const auto d = s.controls[0].size();
    for (const auto& c : s.controls)
        if (c.size() != d) throw InputError("cardinal window controls differ in dimension");
}

// Rows are the four window points.
Eigen::MatrixXd window_matrix(const CardinalSegment& s) {
    Eigen::MatrixXd g(4, s.controls[0].size());
    for (int r = 0; r < 4; ++r) g.row(r) = s.controls[static_cast<std::size_t>(r)].transpose();
    return g;
}

}  // namespace

Tension::Tension(double value) : value_(value) {
    if (!std::isfinite(value)) throw InputError("tension must be finite");
}

PointChain extend_chain(const PointChain& chain) {
    if (chain.size() < 2) throw InputError("chain needs at least 2 points, got " + std::to_string(chain.size()));
    std::vector<Point> pts;
    pts.reserve(chain.size() + 2);
    pts.push_back(chain.front());
    pts.insert(pts.end(), chain.begin(), chain.end());
    pts.push_back(chain.back());
    return PointChain(std::move(pts));
}

std::vector<CardinalSegment> cardinal_segments(const PointChain& chain, Tension tension) {
    const auto ext = extend_chain(chain);
    std::vector<CardinalSegment> segments;
    segments.reserve(chain.size() - 1);
    for (std::size_t k = 2; k + 1 < ext.size(); ++k)
        segments.push_back({{ext[k - 2], ext[k - 1], ext[k], ext[k + 1]}, tension});
    return segments;
}

std::pair<Point, Point> segment_tangents(const CardinalSegment& s) {
    check_window(s);
    const double tau = s.tension.value();
    return {tau * (s.controls[2] - s.controls[0]), tau * (s.controls[3] - s.controls[1])};
}

Eigen::Matrix4d cardinal_geometry_matrix(double tau) {
    Eigen::Matrix4d m;
    // clang-format off
    m << -tau,       2.0 - tau, tau - 2.0,       tau,
         2.0 * tau,  tau - 3.0, 3.0 - 2.0 * tau, -tau,
         -tau,       0.0,       tau,             0.0,
         0.0,        1.0,       0.0,             0.0;
    // clang-format on
    return m;
}

Point eval_cardinal(const CardinalSegment& s, double u) {
    check_unit_parameter(u);
    check_window(s);
    const Eigen::RowVector4d powers(u * u * u, u * u, u, 1.0);
    return (powers * cardinal_geometry_matrix(s.tension.value()) * window_matrix(s)).transpose();
}

Point cardinal_derivative(const CardinalSegment& s, double u) {
    check_unit_parameter(u);
    check_window(s);
    const Eigen::RowVector4d powers(3.0 * u * u, 2.0 * u, 1.0, 0.0);
    return (powers * cardinal_geometry_matrix(s.tension.value()) * window_matrix(s)).transpose();
}

}  // namespace splinefit
