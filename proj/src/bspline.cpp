#include "splinefit/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splinefit/errors.hpp"

namespace splinefit {

namespace {

double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

std::size_t num_controls_for(const KnotVector& knots, int order) {
    if (order < 1) throw InputError("order must be positive");
    if (knots.size() < 2 * static_cast<std::size_t>(order))
        throw InputError("knot vector too short for order " + std::to_string(order));
    return knots.size() - static_cast<std::size_t>(order);
}

}  // namespace

KnotVector::KnotVector(std::vector<double> knots) : knots_(std::move(knots)) {
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (!std::isfinite(knots_[i])) throw InputError("knot values must be finite");
        if (i > 0 && knots_[i] < knots_[i - 1]) throw InputError("knot vector must be non-decreasing");
    }
}

KnotVector build_knot_vector(std::size_t num_controls, int order) {
    if (order < 1) throw InputError("order must be positive");
    const auto k = static_cast<std::size_t>(order);
    if (num_controls < k)
        throw InputError("need at least " + std::to_string(k) + " controls, got " + std::to_string(num_controls));
    const std::size_t n = num_controls - 1;
    std::vector<double> t(n + k + 1);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i < k)
            t[i] = 0.0;
        else if (i <= n)
            t[i] = static_cast<double>(i - k + 1);
        else
            t[i] = static_cast<double>(n + 2 - k);
    }
    return KnotVector(std::move(t));
}

KnotVector build_bezier_exact_knot_vector(std::size_t num_segments) {
    if (num_segments == 0) throw InputError("need at least one segment");
    std::vector<double> t(4, 0.0);
    for (std::size_t s = 1; s < num_segments; ++s) t.insert(t.end(), 3, static_cast<double>(s));
    t.insert(t.end(), 4, static_cast<double>(num_segments));
    return KnotVector(std::move(t));
}

std::size_t find_span(const KnotVector& knots, int order, double u) {
    const std::size_t n = num_controls_for(knots, order) - 1;
    const auto k = static_cast<std::size_t>(order);
    const double lo = knots[k - 1];
    const double hi = knots[n + 1];
    if (!(u >= lo && u <= hi) || lo == hi)
        throw std::out_of_range("parameter " + std::to_string(u) + " outside domain [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    if (u == hi) {
        std::size_t span = n;
        while (knots[span] == knots[span + 1]) --span;
        return span;
    }
    // Last i in [k-1, n] with t_i <= u.
    const auto& t = knots.values();
    const auto it = std::upper_bound(t.begin() + static_cast<std::ptrdiff_t>(k - 1),
                                     t.begin() + static_cast<std::ptrdiff_t>(n + 1), u);
    return static_cast<std::size_t>(it - t.begin()) - 1;
}

double basis_in_span(std::size_t i, int order, double u, const KnotVector& knots, std::size_t span) {
    if (order == 1) return i == span ? 1.0 : 0.0;
    const auto k = static_cast<std::size_t>(order);
    const double left = basis_in_span(i, order - 1, u, knots, span);
    const double right = basis_in_span(i + 1, order - 1, u, knots, span);
    return safe_ratio((u - knots[i]) * left, knots[i + k - 1] - knots[i]) +
           safe_ratio((knots[i + k] - u) * right, knots[i + k] - knots[i + 1]);
}

double basis(std::size_t i, int order, double u, const KnotVector& knots) {
    const std::size_t count = num_controls_for(knots, order);
    if (i >= count) throw std::out_of_range("basis index " + std::to_string(i) + " out of range");
    return basis_in_span(i, order, u, knots, find_span(knots, order, u));
}

std::pair<double, double> BSplineCurve::domain() const {
    validate();
    const auto k = static_cast<std::size_t>(order);
    return {knots[k - 1], knots[controls.size()]};
}

std::size_t BSplineCurve::span_count() const {
    validate();
    std::size_t spans = 0;
    for (std::size_t i = static_cast<std::size_t>(order) - 1; i < controls.size(); ++i)
        if (knots[i] < knots[i + 1]) ++spans;
    return spans;
}

void BSplineCurve::validate() const {
    if (order < 1) throw InputError("order must be positive");
    if (controls.size() < static_cast<std::size_t>(order))
        throw InputError("B-spline needs at least " + std::to_string(order) + " controls");
    if (knots.size() != controls.size() + static_cast<std::size_t>(order))
        throw InputError("knot count must equal control count plus order");
    for (const auto& c : controls)
        if (c.size() != controls.front().size()) throw InputError("B-spline controls differ in dimension");
}

Point eval_bspline_in_span(const BSplineCurve& curve, std::size_t span, double u) {
    curve.validate();
    const auto k = static_cast<std::size_t>(curve.order);
    if (span + 1 < k || span >= curve.controls.size()) throw std::out_of_range("span index out of range");
    Point out = Point::Zero(curve.controls.front().size());
    for (std::size_t i = span + 1 - k; i <= span; ++i)
        out += basis_in_span(i, curve.order, u, curve.knots, span) * curve.controls[i];
    return out;
}

Point eval_bspline(const BSplineCurve& curve, double u) {
    curve.validate();
    return eval_bspline_in_span(curve, find_span(curve.knots, curve.order, u), u);
}

BSplineCurve derivative(const BSplineCurve& curve) {
    curve.validate();
    if (curve.order < 2) throw InputError("cannot differentiate an order-1 curve");
    const auto k = static_cast<std::size_t>(curve.order);
    const auto& t = curve.knots;
    BSplineCurve d;
    d.order = curve.order - 1;
    for (std::size_t i = 0; i + 1 < curve.controls.size(); ++i) {
        const double den = t[i + k] - t[i + 1];
        const Point diff = curve.controls[i + 1] - curve.controls[i];
        d.controls.push_back(den == 0.0 ? Point(Point::Zero(diff.size())) : Point(double(k - 1) * diff / den));
    }
    d.knots = KnotVector(std::vector<double>(t.values().begin() + 1, t.values().end() - 1));
    return d;
}

BSplineCurve bspline_from_bezier_controls(const PiecewiseBezier& pw, KnotMode mode) {
    if (pw.segments.empty()) throw InputError("piecewise curve has no segments");
    for (std::size_t s = 1; s < pw.segments.size(); ++s)
        if (pw.segments[s].controls[0] != pw.segments[s - 1].controls[3])
            throw InputError("junction " + std::to_string(s) + " is not positionally continuous");
    BSplineCurve curve;
    curve.order = 4;
    curve.controls = pw.joined_controls();
    curve.knots = mode == KnotMode::Uniform ? build_knot_vector(curve.controls.size(), curve.order)
                                            : build_bezier_exact_knot_vector(pw.size());
    curve.validate();
    return curve;
}

}  // namespace splinefit
