#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "splinefit/cardinal.hpp"
#include "splinefit/geometry.hpp"

namespace splinefit {

struct BezierSegment {
    std::array<Point, 4> controls;

    std::size_t dim() const noexcept { return static_cast<std::size_t>(controls[0].size()); }
};

// Ordered cubic pieces; piece s+1 starts where piece s ends.
struct PiecewiseBezier {
    std::vector<BezierSegment> segments;

    std::size_t size() const noexcept { return segments.size(); }
    std::size_t dim() const noexcept { return segments.empty() ? 0 : segments.front().dim(); }

    // Global parameter in [0, size()]; piece s covers [s, s+1].
    Point evaluate(double t) const;

    // Controls with shared junction points listed once: 3 * size() + 1 points.
    std::vector<Point> joined_controls() const;

    // True when every junction is positionally exact.
    bool is_continuous() const;
};

Point eval_bezier(const BezierSegment& seg, double u);
Point bezier_derivative(const BezierSegment& seg, double u);
Point bezier_second_derivative(const BezierSegment& seg, double u);

// Bezier form of one cardinal segment: same end points and end tangents.
BezierSegment to_bezier(const CardinalSegment& segment);

// One cubic piece per consecutive pair of data points.
PiecewiseBezier cardinal_to_bezier(const PointChain& chain, Tension tension);

}  // namespace splinefit
