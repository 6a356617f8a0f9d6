#include <catch_amalgamated.hpp>

#include <random>

#include "splinefit/bspline.hpp"
#include "splinefit/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace splinefit;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<Point> random_controls(std::mt19937& rng, std::size_t count, int dim = 2) {
    std::uniform_real_distribution<double> coord(-10, 10);
    std::vector<Point> out(count);
    for (auto& p : out) {
        p.resize(dim);
        for (int d = 0; d < dim; ++d) p[d] = coord(rng);
    }
    return out;
}

BSplineCurve clamped(std::vector<Point> controls) {
    BSplineCurve c;
    c.knots = build_knot_vector(controls.size(), 4);
    c.controls = std::move(controls);
    return c;
}

}  // namespace

TEST_CASE("knot vectors follow the clamped unit-spacing rules", "[bspline]") {
    CHECK(build_knot_vector(7, 4).values() == std::vector<double>{0, 0, 0, 0, 1, 2, 3, 4, 4, 4, 4});
    CHECK(build_knot_vector(4, 4).values() == std::vector<double>{0, 0, 0, 0, 1, 1, 1, 1});
    CHECK_THROWS_AS(build_knot_vector(3, 4), InputError);
    CHECK(build_bezier_exact_knot_vector(2).values() == std::vector<double>{0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 2});
    CHECK_THROWS_AS(KnotVector({0, 1, 0.5}), InputError);
}

TEST_CASE("basis function values", "[bspline]") {
    const auto t = build_knot_vector(7, 4);
    CHECK(basis(0, 4, 0.0, t) == 1.0);
    for (std::size_t i = 1; i < 7; ++i) CHECK(basis(i, 4, 0.0, t) == 0.0);

    double sum = 0.0;
    for (std::size_t i = 0; i < 7; ++i) sum += oracle::cox_de_boor(i, 4, 1.7, t.values());
    CHECK_THAT(sum, WithinAbs(1.0, 1e-14));
    for (std::size_t i = 0; i < 7; ++i)
        CHECK_THAT(basis(i, 4, 1.7, t), WithinAbs(oracle::cox_de_boor(i, 4, 1.7, t.values()), 1e-15));

    // Support of N_0 is [0, 1).
    CHECK(basis(0, 4, 2.5, t) == 0.0);
    CHECK_THROWS_AS(basis(0, 4, 4.5, t), std::out_of_range);
    CHECK_THROWS_AS(basis(0, 4, -0.5, t), std::out_of_range);
}

TEST_CASE("basis properties over many knot vectors", "[bspline][property]") {
    for (std::size_t n = 3; n <= 12; ++n) {
        const auto t = build_knot_vector(n + 1, 4);
        const double end = static_cast<double>(n) - 2.0;
        for (int s = 0; s <= 200; ++s) {
            const double u = end * s / 200.0;
            double sum = 0.0;
            for (std::size_t i = 0; i <= n; ++i) {
                const double b = basis(i, 4, u, t);
                CHECK(b >= 0.0);
                if (u < t[i] || u >= t[i + 4]) {
                    if (u != end) CHECK(b == 0.0);
                }
                sum += b;
            }
            CHECK_THAT(sum, WithinAbs(1.0, 1e-12));
        }
    }
}

TEST_CASE("clamped curves interpolate their end controls", "[bspline]") {
    std::mt19937 rng(5);
    for (std::size_t count = 4; count <= 13; ++count) {
        const auto curve = clamped(random_controls(rng, count));
        const auto [lo, hi] = curve.domain();
        CHECK(lo == 0.0);
        CHECK(hi == static_cast<double>(count) - 3.0);
        CHECK((eval_bspline(curve, lo) - curve.controls.front()).norm() <= 1e-12);
        CHECK((eval_bspline(curve, hi) - curve.controls.back()).norm() <= 1e-12);
    }
}

TEST_CASE("single-segment curve equals the Bernstein form", "[bspline]") {
    std::mt19937 rng(9);
    const auto ctrl = random_controls(rng, 4, 3);
    const auto curve = clamped(ctrl);
    const std::array<oracle::Vec, 4> vecs{fixtures::to_vec(ctrl[0]), fixtures::to_vec(ctrl[1]),
                                          fixtures::to_vec(ctrl[2]), fixtures::to_vec(ctrl[3])};
    for (int i = 0; i <= 50; ++i) {
        const double u = i / 50.0;
        const auto expected = oracle::bernstein_sum(vecs, u);
        const auto got = eval_bspline(curve, u);
        for (int d = 0; d < 3; ++d) CHECK_THAT(got[d], WithinAbs(expected[std::size_t(d)], 1e-12));
    }
}

TEST_CASE("constant controls give a constant curve", "[bspline]") {
    const auto curve = clamped(std::vector<Point>(9, make_point({1.5, -2})));
    for (int i = 0; i <= 60; ++i) CHECK((eval_bspline(curve, 6.0 * i / 60) - make_point({1.5, -2})).norm() <= 1e-12);
}

TEST_CASE("points stay inside the active control box", "[bspline][property]") {
    std::mt19937 rng(21);
    const auto curve = clamped(random_controls(rng, 10));
    for (int i = 0; i <= 300; ++i) {
        const double u = 7.0 * i / 300;
        const auto span = find_span(curve.knots, 4, u);
        const auto p = eval_bspline(curve, u);
        for (int d = 0; d < 2; ++d) {
            double lo = 1e300, hi = -1e300;
            for (std::size_t j = span - 3; j <= span; ++j) {
                lo = std::min(lo, curve.controls[j][d]);
                hi = std::max(hi, curve.controls[j][d]);
            }
            CHECK(p[d] >= lo - 1e-12);
            CHECK(p[d] <= hi + 1e-12);
        }
    }
}

TEST_CASE("curve is C2 at interior knots", "[bspline]") {
    std::mt19937 rng(17);
    const auto curve = clamped(random_controls(rng, 11));
    const auto second = derivative(derivative(curve));
    for (std::size_t i = 4; i < curve.controls.size(); ++i) {
        const double knot = curve.knots[i];
        // Span i of the curve is span i - 2 of its second derivative.
        const auto left = eval_bspline_in_span(second, i - 3, knot);
        const auto right = eval_bspline_in_span(second, i - 2, knot);
        CHECK((left - right).norm() <= 1e-4);
    }
    // The hodograph matches finite differences.
    const auto first = derivative(curve);
    for (double u : {0.3, 2.5, 6.6}) {
        const Point fd = (eval_bspline(curve, u + 1e-6) - eval_bspline(curve, u - 1e-6)) / 2e-6;
        CHECK((eval_bspline(first, u) - fd).norm() <= 1e-5 * std::max(1.0, fd.norm()));
    }
}

TEST_CASE("promotion from Bezier controls", "[bspline]") {
    const PiecewiseBezier one{{{{make_point({0, 0}), make_point({1, 2}), make_point({2, 2}), make_point({3, 0})}}}};
    const auto c1 = bspline_from_bezier_controls(one);
    CHECK(c1.controls.size() == 4);
    CHECK(c1.knots.values() == std::vector<double>{0, 0, 0, 0, 1, 1, 1, 1});
    for (int i = 0; i <= 20; ++i)
        CHECK((eval_bspline(c1, i / 20.0) - eval_bezier(one.segments[0], i / 20.0)).norm() <= 1e-12);

    const auto pw = cardinal_to_bezier(PointChain{{0, 0}, {1, 1}, {2, 0}}, Tension(0.5));
    const auto c2 = bspline_from_bezier_controls(pw);
    CHECK(c2.controls.size() == 7);
    CHECK(c2.knots.values() == std::vector<double>{0, 0, 0, 0, 1, 2, 3, 4, 4, 4, 4});

    auto broken = pw;
    broken.segments[1].controls[0] = make_point({1, 1.5});
    CHECK_THROWS_AS(bspline_from_bezier_controls(broken), InputError);
}

TEST_CASE("exact knot mode reproduces the piecewise Bezier", "[bspline]") {
    for (const auto& f : fixtures::corpus()) {
        const auto pw = cardinal_to_bezier(f.chain, Tension(0.5));
        const auto curve = bspline_from_bezier_controls(pw, KnotMode::BezierExact);
        CHECK(curve.domain().second == static_cast<double>(pw.size()));
        for (std::size_t s = 0; s < pw.size(); ++s)
            for (int i = 0; i <= 10; ++i) {
                const double u = i / 10.0;
                CHECK((eval_bspline(curve, double(s) + u) - eval_bezier(pw.segments[s], u)).norm() <= 1e-9);
            }
    }
}
