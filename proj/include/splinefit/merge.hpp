#pragma once

#include <span>
#include <string>
#include <vector>

#include "splinefit/bezier.hpp"
#include "splinefit/geometry.hpp"

namespace splinefit {

// Independent-coordinate intervals of one segment's inner legs, per plane,
// and their means.
struct MergeLeg {
    std::vector<double> start_intervals;  // indep(P1) - indep(P0)
    std::vector<double> end_intervals;    // indep(P2) - indep(P3)
    double start_mean = 0.0;              // p
    double end_mean = 0.0;                // q
};

struct MergeResult {
    // Controls in R^(planes + 1), coordinates in the original axis order.
    PiecewiseBezier curve;
    // Per-plane curves after the inner controls were slid onto the shared
    // independent coordinates.
    std::vector<PiecewiseBezier> adjusted_planes;
    std::vector<MergeLeg> legs;
    std::vector<std::string> warnings;
};

// Each plane curve is 2D with (independent, dependent) coordinates. The
// inner controls of every segment are slid along their original legs to
// the mean independent interval across planes, then the coordinates are
// assembled into one control point per slot.
MergeResult merge_plane_controls(std::span<const PiecewiseBezier> plane_curves, std::span<const PlaneAxes> axes);

}  // namespace splinefit
