#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "splinefit/bezier.hpp"
#include "splinefit/geometry.hpp"

namespace splinefit {

class KnotVector {
public:
    KnotVector() = default;
    // Throws unless non-decreasing and finite.
    explicit KnotVector(std::vector<double> knots);

    std::size_t size() const noexcept { return knots_.size(); }
    double operator[](std::size_t i) const { return knots_[i]; }
    const std::vector<double>& values() const noexcept { return knots_; }

    friend bool operator==(const KnotVector&, const KnotVector&) = default;

private:
    std::vector<double> knots_;
};

enum class KnotMode {
    // Clamped ends, simple unit-spaced interior knots. C2, approximates the
    // interior Bezier junctions.
    Uniform,
    // Interior knots of multiplicity 3. Reproduces the piecewise Bezier
    // exactly; C1 only.
    BezierExact,
};

// t[i] = 0 for i < order, i - order + 1 for order <= i <= n, n - order + 2
// for i > n, where n = num_controls - 1.
KnotVector build_knot_vector(std::size_t num_controls, int order);

// Knots for a cubic over `num_segments` Bezier pieces in BezierExact mode.
KnotVector build_bezier_exact_knot_vector(std::size_t num_segments);

// Index i of the knot span [t_i, t_i+1) holding u. The last non-empty span
// is closed on the right so the domain end is included.
std::size_t find_span(const KnotVector& knots, int order, double u);

// Cox-de Boor value of N_{i,order}(u); 0/0 terms count as 0.
double basis(std::size_t i, int order, double u, const KnotVector& knots);

// Same recursion evaluated as the polynomial of a fixed span, which gives
// one-sided limits at knots.
double basis_in_span(std::size_t i, int order, double u, const KnotVector& knots, std::size_t span);

struct BSplineCurve {
    std::vector<Point> controls;
    int order = 4;
    KnotVector knots;

    std::size_t dim() const noexcept {
        return controls.empty() ? 0 : static_cast<std::size_t>(controls.front().size());
    }
    std::pair<double, double> domain() const;
    // Number of non-empty knot spans.
    std::size_t span_count() const;
    // Throws if counts or dimensions are inconsistent.
    void validate() const;
};

Point eval_bspline(const BSplineCurve& curve, double u);

// Polynomial piece of `span` evaluated at u (u need not lie inside the span).
Point eval_bspline_in_span(const BSplineCurve& curve, std::size_t span, double u);

// Hodograph: a curve of order - 1 whose value is the derivative.
BSplineCurve derivative(const BSplineCurve& curve);

// Promotes Bezier controls to a cubic B-spline. Throws if a junction is not
// positionally continuous.
BSplineCurve bspline_from_bezier_controls(const PiecewiseBezier& pw, KnotMode mode = KnotMode::Uniform);

}  // namespace splinefit
