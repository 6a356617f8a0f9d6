#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "splinefit/bezier.hpp"
#include "splinefit/bspline.hpp"
#include "splinefit/cardinal.hpp"
#include "splinefit/dominant.hpp"
#include "splinefit/geometry.hpp"

namespace splinefit {

struct FitConfig {
    Tension tension;
    std::size_t independent_axis = 0;
    double dominant_fraction = 1.0;
    int samples_per_segment = 32;
    bool bezier_exact_knots = false;
    // Overrides for the primary/support split of the initial guess.
    std::optional<std::size_t> primary_count;
    std::optional<std::size_t> support_count;

    void validate() const;
    KnotMode knot_mode() const noexcept { return bezier_exact_knots ? KnotMode::BezierExact : KnotMode::Uniform; }
};

struct FitResult {
    PointChain data;                    // full input chain
    std::size_t independent_axis = 0;
    std::vector<Point> cardinal_samples;
    PiecewiseBezier piecewise;
    BSplineCurve curve;
    // Per-plane piecewise curves after merging (empty for planar fits).
    std::vector<PiecewiseBezier> plane_curves;
    std::vector<PlaneAxes> plane_axes;
    std::optional<DominantSelection> selection;
    std::optional<double> error;
    std::vector<double> gap_errors;
    double fraction = 1.0;
    std::vector<std::string> warnings;
};

// Planar fit: cardinal spline, C1 piecewise Bezier, cubic B-spline.
FitResult fc2(const PointChain& chain, const FitConfig& config);

// Fit in R^n (n >= 3): planar fits on each coordinate plane sharing the
// independent axis, merged into one piecewise Bezier and promoted to a
// B-spline.
FitResult fcn(const PointChain& chain, const FitConfig& config);

// fc2 for planar chains, fcn otherwise.
FitResult fit(const PointChain& chain, const FitConfig& config);

// Piecewise Bezier that fit() would produce for `chain`.
PiecewiseBezier fit_piecewise(const PointChain& chain, const FitConfig& config);

// m = round(fraction * size) clamped to [2, size]; selects m dominant points
// by local search and fits the curve through them.
FitResult approximate_with_fraction(const PointChain& chain, const FitConfig& config);

std::size_t dominant_count(std::size_t chain_size, double fraction);

// samples_per_segment points per knot span, plus the domain end.
std::vector<std::pair<double, Point>> sample_bspline(const BSplineCurve& curve, int samples_per_segment);

std::vector<Point> sample_cardinal(const PointChain& chain, Tension tension, int samples_per_segment);

}  // namespace splinefit
