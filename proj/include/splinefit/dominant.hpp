#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "splinefit/bezier.hpp"
#include "splinefit/geometry.hpp"

namespace splinefit {

enum class Tier {
    Endpoint,   // first or last chain point, always kept
    Primary,    // large turn angle
    Support,    // chain neighbour of a primary point
    Secondary,  // filler from the turn-angle ranking, or added by the search
};

struct TurnAngleEntry {
    std::size_t index;
    double angle;
};

struct DominantSelection {
    std::vector<std::size_t> indices;  // strictly increasing, holds 0 and n
    std::vector<Tier> tiers;           // parallel to indices
    std::size_t primary_count = 0;
    std::size_t support_count = 0;
    double error = 0.0;

    std::size_t size() const noexcept { return indices.size(); }
};

// Exterior angle at `cur`, in [0, pi]. Throws NumericError if either leg has
// zero length.
double turn_angle(const Point& prev, const Point& cur, const Point& next);

// Angles at every interior index. Planar chains use the angle directly;
// higher dimensions sum the planar angles over the coordinate planes that
// share `independent_axis`. A zero-length leg contributes 0.
std::vector<TurnAngleEntry> turn_angles(const PointChain& chain, std::size_t independent_axis = 0);

// Descending by angle, ties by ascending index.
std::vector<TurnAngleEntry> rank_by_turn_angle(std::vector<TurnAngleEntry> entries);

struct CurveMapping {
    double t;
    Point mapped;
};

// Maps `pt` onto `piece` at the clamped ratio of its projection onto the
// chord from `chord_start` to `chord_end`.
CurveMapping map_to_curve(const Point& pt, const Point& chord_start, const Point& chord_end, const BezierSegment& piece);

struct SquareError {
    double total = 0.0;
    std::vector<double> gap_errors;    // one per consecutive pair of dominant indices
    std::vector<double> point_errors;  // one per chain point; 0 for dominant points
};

// Sum of squared distances of every skipped point to its mapped point on the
// piece fitted between the surrounding dominant points. `fitted` has one
// segment per gap.
SquareError square_error(const PointChain& chain, std::span<const std::size_t> indices, const PiecewiseBezier& fitted);

// Fits the piecewise curve used to score a dominant subchain.
using SubsetFitter = std::function<PiecewiseBezier(const PointChain&)>;

SquareError selection_error(const PointChain& chain, std::span<const std::size_t> indices, const SubsetFitter& fitter);

// Default (m1, m2): m1 = ceil(m / 4), m2 = min(2 * m1, m - m1).
std::pair<std::size_t, std::size_t> default_tier_counts(std::size_t m);

// Seeds m dominant points: both endpoints, the m1 highest turn angles as
// primaries, up to m2 chain neighbours of primaries as supports, then the
// next ranked angles as secondaries. The error field is left at 0.
DominantSelection initial_guess(const PointChain& chain, std::size_t m, std::size_t m1, std::size_t m2,
                                std::size_t independent_axis = 0);

struct SearchTrace {
    std::vector<double> errors;  // error of the guess, then of each accepted move
    std::size_t iterations = 0;  // accepted moves
};

// Local search: add a skipped point from the worst gap, drop a point next to
// the cheapest gap, keep the swap only if the error strictly decreases. The
// heuristic pair is tried first; other pairs are tried in the same ranked
// order before the search stops.
DominantSelection optimize(const PointChain& chain, const DominantSelection& guess, const SubsetFitter& fitter,
                           SearchTrace* trace = nullptr);

}  // namespace splinefit
