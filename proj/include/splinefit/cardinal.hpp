#pragma once

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "splinefit/geometry.hpp"

namespace splinefit {

// Scalar multiplying the neighbour-difference tangents. 0.5 is Catmull-Rom.
class Tension {
public:
    constexpr Tension() = default;
    explicit Tension(double value);

    double value() const noexcept { return value_; }

private:
    double value_ = 0.5;
};

// Window (p[k-2], p[k-1], p[k], p[k+1]); the segment runs from p[k-1] to p[k].
struct CardinalSegment {
    std::array<Point, 4> controls;
    Tension tension;
};

// Repeats the first and last points so every consecutive pair of the
// original chain has a four-point window.
PointChain extend_chain(const PointChain& chain);

// One window per consecutive pair of the chain (size() - 1 segments).
std::vector<CardinalSegment> cardinal_segments(const PointChain& chain, Tension tension);

// Tangents at the segment start and end.
std::pair<Point, Point> segment_tangents(const CardinalSegment& segment);

// Geometry matrix mapping the window onto power-basis coefficients (a, b, c, d).
Eigen::Matrix4d cardinal_geometry_matrix(double tau);

Point eval_cardinal(const CardinalSegment& segment, double u);
Point cardinal_derivative(const CardinalSegment& segment, double u);

}  // namespace splinefit
