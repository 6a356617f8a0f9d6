#include "splinefit/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splinefit/errors.hpp"
#include "splinefit/merge.hpp"

namespace splinefit {

namespace {

void require_chain(const PointChain& chain) {
    if (chain.size() < 2) throw InputError("chain needs at least 2 points, got " + std::to_string(chain.size()));
}

struct SpaceFit {
    PiecewiseBezier piecewise;
    std::vector<PiecewiseBezier> planes;
    std::vector<PlaneAxes> axes;
    std::vector<std::string> warnings;
};

SpaceFit fit_space_piecewise(const PointChain& chain, const FitConfig& config) {
    SpaceFit out;
    std::vector<PiecewiseBezier> plane_fits;
    for (const auto& plane : project_to_planes(chain, config.independent_axis)) {
        plane_fits.push_back(cardinal_to_bezier(plane.as_points(), config.tension));
        out.axes.push_back(plane.axes);
    }
    auto merged = merge_plane_controls(plane_fits, out.axes);
    out.piecewise = std::move(merged.curve);
    out.planes = std::move(merged.adjusted_planes);
    out.warnings = std::move(merged.warnings);
    return out;
}

}  // namespace

void FitConfig::validate() const {
    if (!(dominant_fraction > 0.0 && dominant_fraction <= 1.0))
        throw InputError("dominant fraction must lie in (0, 1], got " + std::to_string(dominant_fraction));
    if (samples_per_segment < 2) throw InputError("samples per segment must be at least 2");
}

std::vector<Point> sample_cardinal(const PointChain& chain, Tension tension, int samples_per_segment) {
    std::vector<Point> out;
    const auto segments = cardinal_segments(chain, tension);
    for (std::size_t s = 0; s < segments.size(); ++s) {
        for (int i = 0; i < samples_per_segment; ++i)
            out.push_back(eval_cardinal(segments[s], static_cast<double>(i) / samples_per_segment));
    }
    out.push_back(eval_cardinal(segments.back(), 1.0));
    return out;
}

std::vector<std::pair<double, Point>> sample_bspline(const BSplineCurve& curve, int samples_per_segment) {
    if (samples_per_segment < 1) throw InputError("samples per segment must be positive");
    std::vector<std::pair<double, Point>> out;
    const auto& t = curve.knots;
    const auto k = static_cast<std::size_t>(curve.order);
    for (std::size_t span = k - 1; span < curve.controls.size(); ++span) {
        if (t[span] == t[span + 1]) continue;
        for (int i = 0; i < samples_per_segment; ++i) {
            const double u = t[span] + (t[span + 1] - t[span]) * i / samples_per_segment;
            out.emplace_back(u, eval_bspline_in_span(curve, span, u));
        }
    }
    const double end = curve.domain().second;
    out.emplace_back(end, eval_bspline(curve, end));
    return out;
}

FitResult fc2(const PointChain& chain, const FitConfig& config) {
    config.validate();
    require_chain(chain);
    if (chain.dim() != 2) throw InputError("planar fit needs 2D points, got dimension " + std::to_string(chain.dim()));
    if (config.independent_axis > 1) throw InputError("independent axis out of range for a planar chain");
    FitResult r;
    r.data = chain;
    r.independent_axis = config.independent_axis;
    r.cardinal_samples = sample_cardinal(chain, config.tension, config.samples_per_segment);
    r.piecewise = cardinal_to_bezier(chain, config.tension);
    r.curve = bspline_from_bezier_controls(r.piecewise, config.knot_mode());
    return r;
}

FitResult fcn(const PointChain& chain, const FitConfig& config) {
    config.validate();
    require_chain(chain);
    if (chain.dim() < 3) throw InputError("space fit needs dimension >= 3, got " + std::to_string(chain.dim()));
    auto space = fit_space_piecewise(chain, config);
    FitResult r;
    r.data = chain;
    r.independent_axis = config.independent_axis;
    r.cardinal_samples = sample_cardinal(chain, config.tension, config.samples_per_segment);
    r.piecewise = std::move(space.piecewise);
    r.plane_curves = std::move(space.planes);
    r.plane_axes = std::move(space.axes);
    r.warnings = std::move(space.warnings);
    r.curve = bspline_from_bezier_controls(r.piecewise, config.knot_mode());
    return r;
}

FitResult fit(const PointChain& chain, const FitConfig& config) {
    return chain.dim() == 2 ? fc2(chain, config) : fcn(chain, config);
}

PiecewiseBezier fit_piecewise(const PointChain& chain, const FitConfig& config) {
    require_chain(chain);
    if (chain.dim() == 2) return cardinal_to_bezier(chain, config.tension);
    return fit_space_piecewise(chain, config).piecewise;
}

std::size_t dominant_count(std::size_t chain_size, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw InputError("dominant fraction must lie in (0, 1], got " + std::to_string(fraction));
    const auto m = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(chain_size)));
    return std::clamp<std::size_t>(m, 2, chain_size);
}

FitResult approximate_with_fraction(const PointChain& chain, const FitConfig& config) {
    config.validate();
    require_chain(chain);
    const std::size_t m = dominant_count(chain.size(), config.dominant_fraction);
    auto [m1, m2] = default_tier_counts(m);
    if (config.primary_count) m1 = *config.primary_count;
    if (config.support_count) m2 = *config.support_count;

    const SubsetFitter fitter = [&config](const PointChain& sub) { return fit_piecewise(sub, config); };
    const auto guess = initial_guess(chain, m, m1, m2, config.independent_axis);
    auto selection = optimize(chain, guess, fitter);

    const auto sub = chain.subchain(selection.indices);
    FitResult r = fit(sub, config);
    const auto err = square_error(chain, selection.indices, r.piecewise);
    r.data = chain;
    r.error = err.total;
    r.gap_errors = err.gap_errors;
    r.fraction = config.dominant_fraction;
    selection.error = err.total;
    r.selection = std::move(selection);
    return r;
}

}  // namespace splinefit
