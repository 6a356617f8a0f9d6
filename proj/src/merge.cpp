#include "splinefit/merge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splinefit/errors.hpp"

namespace splinefit {

namespace {

constexpr double kEndpointTolerance = 1e-9;
constexpr double kDegenerateLeg = 1e-12;

void check_axes(std::span<const PlaneAxes> axes, std::size_t dim) {
    std::vector<std::size_t> deps;
    for (const auto& a : axes) {
        if (a.independent != axes.front().independent) throw InputError("planes do not share an independent axis");
        deps.push_back(a.dependent);
    }
    deps.push_back(axes.front().independent);
    std::sort(deps.begin(), deps.end());
    for (std::size_t i = 0; i < deps.size(); ++i)
        if (deps[i] != i)
            throw InputError("plane axes must cover each of the " + std::to_string(dim) + " axes exactly once");
}

// Moves `inner` along the line anchor->inner until its independent coordinate
// equals anchor_x + interval.
Point slide(const Point& anchor, const Point& inner, double interval, std::string_view what, std::size_t segment,
            std::size_t plane, std::vector<std::string>& warnings) {
    const double own = inner[0] - anchor[0];
    Point out(2);
    out[0] = anchor[0] + interval;
    if (std::abs(own) < kDegenerateLeg) {
        out[1] = inner[1];
        warnings.push_back("segment " + std::to_string(segment) + ", plane " + std::to_string(plane) + ": " +
                           std::string(what) + " leg has no independent extent; dependent coordinate kept");
    } else {
        out[1] = anchor[1] + (inner[1] - anchor[1]) * (interval / own);
    }
    return out;
}

}  // namespace

MergeResult merge_plane_controls(std::span<const PiecewiseBezier> plane_curves, std::span<const PlaneAxes> axes) {
    if (plane_curves.empty()) throw InputError("no plane curves to merge");
    if (plane_curves.size() != axes.size()) throw InputError("one axis pair is needed per plane curve");
    const std::size_t planes = plane_curves.size();
    const std::size_t dim = planes + 1;
    check_axes(axes, dim);
    const std::size_t segments = plane_curves.front().size();
    if (segments == 0) throw InputError("plane curves have no segments");
    for (std::size_t a = 0; a < planes; ++a) {
        if (plane_curves[a].size() != segments)
            throw InputError("plane " + std::to_string(a) + " has " + std::to_string(plane_curves[a].size()) +
                             " segments, expected " + std::to_string(segments));
        if (plane_curves[a].dim() != 2) throw InputError("plane curves must be two-dimensional");
    }

    const auto indep_axis = static_cast<Eigen::Index>(axes.front().independent);
    MergeResult result;
    result.adjusted_planes.resize(planes);
    for (std::size_t s = 0; s < segments; ++s) {
        const auto& ref = plane_curves[0].segments[s].controls;
        MergeLeg leg;
        for (std::size_t a = 0; a < planes; ++a) {
            const auto& c = plane_curves[a].segments[s].controls;
            if (std::abs(c[0][0] - ref[0][0]) > kEndpointTolerance || std::abs(c[3][0] - ref[3][0]) > kEndpointTolerance)
                throw InputError("segment " + std::to_string(s) + ": plane " + std::to_string(a) +
                                 " disagrees on the independent coordinate of an end control");
            leg.start_intervals.push_back(c[1][0] - c[0][0]);
            leg.end_intervals.push_back(c[2][0] - c[3][0]);
        }
        for (std::size_t a = 0; a < planes; ++a) {
            leg.start_mean += leg.start_intervals[a];
            leg.end_mean += leg.end_intervals[a];
        }
        leg.start_mean /= static_cast<double>(planes);
        leg.end_mean /= static_cast<double>(planes);

        BezierSegment merged;
        for (auto& c : merged.controls) c = Point::Zero(static_cast<Eigen::Index>(dim));
        merged.controls[0][indep_axis] = ref[0][0];
        merged.controls[1][indep_axis] = ref[0][0] + leg.start_mean;
        merged.controls[2][indep_axis] = ref[3][0] + leg.end_mean;
        merged.controls[3][indep_axis] = ref[3][0];
        for (std::size_t a = 0; a < planes; ++a) {
            const auto& c = plane_curves[a].segments[s].controls;
            BezierSegment adjusted{{c[0], slide(c[0], c[1], leg.start_mean, "start", s, a, result.warnings),
                                    slide(c[3], c[2], leg.end_mean, "end", s, a, result.warnings), c[3]}};
            const auto dep = static_cast<Eigen::Index>(axes[a].dependent);
            for (std::size_t j = 0; j < 4; ++j) merged.controls[j][dep] = adjusted.controls[j][1];
            result.adjusted_planes[a].segments.push_back(std::move(adjusted));
        }
        result.curve.segments.push_back(std::move(merged));
        result.legs.push_back(std::move(leg));
    }
    return result;
}

}  // namespace splinefit
