#include "splinefit/bezier.hpp"

#include <cmath>
#include <string>

#include "splinefit/errors.hpp"

namespace splinefit {

namespace {

void check_unit_parameter(double u) {
    if (!(u >= 0.0 && u <= 1.0))
        throw std::out_of_range("segment parameter " + std::to_string(u) + " outside [0, 1]");
}

}  // namespace

Point eval_bezier(const BezierSegment& seg, double u) {
    check_unit_parameter(u);
    const double v = 1.0 - u;
    const auto& c = seg.controls;
    return v * v * v * c[0] + 3.0 * v * v * u * c[1] + 3.0 * v * u * u * c[2] + u * u * u * c[3];
}

Point bezier_derivative(const BezierSegment& seg, double u) {
    check_unit_parameter(u);
    const double v = 1.0 - u;
    const auto& c = seg.controls;
    return 3.0 * (v * v * (c[1] - c[0]) + 2.0 * v * u * (c[2] - c[1]) + u * u * (c[3] - c[2]));
}

Point bezier_second_derivative(const BezierSegment& seg, double u) {
    check_unit_parameter(u);
    const auto& c = seg.controls;
    return 6.0 * ((1.0 - u) * (c[2] - 2.0 * c[1] + c[0]) + u * (c[3] - 2.0 * c[2] + c[1]));
}

BezierSegment to_bezier(const CardinalSegment& segment) {
    const auto [start_tangent, end_tangent] = segment_tangents(segment);
    const Point& start = segment.controls[1];
    const Point& end = segment.controls[2];
    return {{start, start + start_tangent / 3.0, end - end_tangent / 3.0, end}};
}

PiecewiseBezier cardinal_to_bezier(const PointChain& chain, Tension tension) {
    PiecewiseBezier pw;
    for (const auto& s : cardinal_segments(chain, tension)) pw.segments.push_back(to_bezier(s));
    return pw;
}

Point PiecewiseBezier::evaluate(double t) const {
    if (segments.empty()) throw InputError("empty piecewise curve");
    const double n = static_cast<double>(segments.size());
    if (!(t >= 0.0 && t <= n)) throw std::out_of_range("parameter " + std::to_string(t) + " outside curve domain");
    auto s = static_cast<std::size_t>(std::floor(t));
    if (s == segments.size()) --s;
    return eval_bezier(segments[s], t - static_cast<double>(s));
}

std::vector<Point> PiecewiseBezier::joined_controls() const {
    std::vector<Point> out;
    if (segments.empty()) return out;
    out.reserve(3 * segments.size() + 1);
    out.push_back(segments.front().controls[0]);
    for (const auto& s : segments) {
        out.push_back(s.controls[1]);
        out.push_back(s.controls[2]);
        out.push_back(s.controls[3]);
    }
    return out;
}

bool PiecewiseBezier::is_continuous() const {
    for (std::size_t s = 1; s < segments.size(); ++s)
        if (segments[s].controls[0] != segments[s - 1].controls[3]) return false;
    return true;
}

}  // namespace splinefit
