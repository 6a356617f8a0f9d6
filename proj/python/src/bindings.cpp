#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "splinefit/bezier.hpp"
#include "splinefit/bspline.hpp"
#include "splinefit/cardinal.hpp"
#include "splinefit/dominant.hpp"
#include "splinefit/errors.hpp"
#include "splinefit/io.hpp"
#include "splinefit/pipeline.hpp"

namespace py = pybind11;
using namespace splinefit;

namespace {

using Rows = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Rows to_rows(const std::vector<Point>& pts) {
    if (pts.empty()) return Rows(0, 0);
    Rows out(static_cast<Eigen::Index>(pts.size()), pts.front().size());
    for (std::size_t i = 0; i < pts.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = pts[i].transpose();
    return out;
}

FitConfig make_config(double tension, std::size_t axis, int samples, bool bezier_exact, double fraction,
                      std::optional<std::size_t> primary, std::optional<std::size_t> support) {
    FitConfig cfg;
    cfg.tension = Tension(tension);
    cfg.independent_axis = axis;
    cfg.samples_per_segment = samples;
    cfg.bezier_exact_knots = bezier_exact;
    cfg.dominant_fraction = fraction;
    cfg.primary_count = primary;
    cfg.support_count = support;
    return cfg;
}

const char* tier_name(Tier t) {
    switch (t) {
        case Tier::Endpoint: return "endpoint";
        case Tier::Primary: return "primary";
        case Tier::Support: return "support";
        case Tier::Secondary: return "secondary";
    }
    return "";
}

py::dict result_dict(const FitResult& r, int samples) {
    py::dict d;
    d["controls"] = to_rows(r.curve.controls);
    d["knots"] = r.curve.knots.values();
    d["order"] = r.curve.order;
    py::list segs;
    for (const auto& s : r.piecewise.segments) {
        segs.append(to_rows({s.controls.begin(), s.controls.end()}));
    }
    d["bezier_segments"] = segs;
    std::vector<double> params;
    std::vector<Point> pts;
    for (const auto& [u, p] : sample_bspline(r.curve, samples)) {
        params.push_back(u);
        pts.push_back(p);
    }
    d["parameters"] = params;
    d["samples"] = to_rows(pts);
    d["warnings"] = r.warnings;
    if (r.selection) {
        d["indices"] = r.selection->indices;
        std::vector<std::string> tiers;
        for (Tier t : r.selection->tiers) tiers.emplace_back(tier_name(t));
        d["tiers"] = tiers;
    }
    if (r.error) {
        d["error"] = *r.error;
        d["gap_errors"] = r.gap_errors;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_splinefit, m) {
    m.doc() = "Cubic B-spline fitting through ordered points";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    m.def(
        "fit",
        [](const Eigen::MatrixXd& points, double tension, std::size_t independent_axis, int samples,
           bool bezier_exact) {
            const auto cfg = make_config(tension, independent_axis, samples, bezier_exact, 1.0, {}, {});
            return result_dict(fit(PointChain::from_matrix(points), cfg), samples);
        },
        py::arg("points"), py::arg("tension") = 0.5, py::arg("independent_axis") = 0, py::arg("samples") = 32,
        py::arg("bezier_exact") = false);

    m.def(
        "approximate",
        [](const Eigen::MatrixXd& points, double fraction, double tension, std::size_t independent_axis,
           int samples, std::optional<std::size_t> primary, std::optional<std::size_t> support) {
            const auto cfg = make_config(tension, independent_axis, samples, false, fraction, primary, support);
            return result_dict(approximate_with_fraction(PointChain::from_matrix(points), cfg), samples);
        },
        py::arg("points"), py::arg("fraction"), py::arg("tension") = 0.5, py::arg("independent_axis") = 0,
        py::arg("samples") = 32, py::arg("primary") = py::none(), py::arg("support") = py::none());

    m.def("dominant_count", &dominant_count, py::arg("size"), py::arg("fraction"));

    m.def(
        "eval_cardinal",
        [](const Eigen::MatrixXd& window, double tension, double u) -> Point {
            if (window.rows() != 4) throw InputError("cardinal window needs 4 points");
            CardinalSegment seg{{}, Tension(tension)};
            for (int i = 0; i < 4; ++i) seg.controls[i] = window.row(i).transpose();
            return eval_cardinal(seg, u);
        },
        py::arg("window"), py::arg("tension"), py::arg("u"));

    m.def(
        "eval_bezier",
        [](const Eigen::MatrixXd& controls, double u) -> Point {
            if (controls.rows() != 4) throw InputError("cubic Bezier needs 4 controls");
            BezierSegment seg;
            for (int i = 0; i < 4; ++i) seg.controls[i] = controls.row(i).transpose();
            return eval_bezier(seg, u);
        },
        py::arg("controls"), py::arg("u"));

    m.def(
        "knot_vector",
        [](std::size_t num_controls, int order) { return build_knot_vector(num_controls, order).values(); },
        py::arg("num_controls"), py::arg("order") = 4);

    m.def(
        "basis",
        [](std::size_t i, int order, double u, const std::vector<double>& knots) {
            return basis(i, order, u, KnotVector(knots));
        },
        py::arg("i"), py::arg("order"), py::arg("u"), py::arg("knots"));

    m.def(
        "eval_bspline",
        [](const Eigen::MatrixXd& controls, const std::vector<double>& knots, double u, int order) -> Point {
            BSplineCurve curve;
            curve.order = order;
            curve.knots = KnotVector(knots);
            for (Eigen::Index i = 0; i < controls.rows(); ++i) curve.controls.push_back(controls.row(i).transpose());
            curve.validate();
            return eval_bspline(curve, u);
        },
        py::arg("controls"), py::arg("knots"), py::arg("u"), py::arg("order") = 4);

    m.def(
        "turn_angle", [](const Point& a, const Point& b, const Point& c) { return turn_angle(a, b, c); },
        py::arg("prev"), py::arg("cur"), py::arg("next"));

    m.def(
        "load_points",
        [](const std::string& path, std::optional<std::string> format) {
            const auto fmt = format ? parse_point_format(*format) : infer_point_format(path);
            return PointChain(load_points(path, fmt)).to_matrix();
        },
        py::arg("path"), py::arg("format") = py::none());
}
