#include <catch_amalgamated.hpp>

#include <random>

#include "splinefit/errors.hpp"
#include "splinefit/geometry.hpp"

using namespace splinefit;

TEST_CASE("project_to_planes splits a 3D chain around the independent axis", "[geometry]") {
    const PointChain chain{{1, 2, 3}, {4, 5, 6}};
    const auto planes = project_to_planes(chain, 1);
    REQUIRE(planes.size() == 2);
    CHECK(planes[0].axes == PlaneAxes{1, 0});
    CHECK(planes[0].independent == std::vector<double>{2, 5});
    CHECK(planes[0].dependent == std::vector<double>{1, 4});
    CHECK(planes[1].axes == PlaneAxes{1, 2});
    CHECK(planes[1].independent == std::vector<double>{2, 5});
    CHECK(planes[1].dependent == std::vector<double>{3, 6});
}

TEST_CASE("4D chain gives three planes sharing the independent axis", "[geometry]") {
    const PointChain chain{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
    const auto planes = project_to_planes(chain, 0);
    REQUIRE(planes.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(planes[k].axes.independent == 0);
        CHECK(planes[k].axes.dependent == k + 1);
    }
}

TEST_CASE("projection preconditions", "[geometry]") {
    CHECK_THROWS_AS(project_to_planes(PointChain{{0, 0}, {1, 1}}, 0), InputError);
    CHECK_THROWS_AS(project_to_planes(PointChain{{0, 0, 0}, {1, 1, 1}}, 3), InputError);
}

TEST_CASE("chain construction rejects bad points", "[geometry]") {
    CHECK_THROWS_AS(PointChain({make_point({0, 0}), make_point({1, 1, 1})}), InputError);
    CHECK_THROWS_AS(PointChain({make_point({0, std::nan("")}), make_point({1, 1})}), InputError);
    CHECK_THROWS_AS(PointChain({make_point({0}), make_point({1})}), InputError);
}

TEST_CASE("projection round trip is exact", "[geometry][property]") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-100, 100);
    std::uniform_int_distribution<int> dims(3, 6);
    std::uniform_int_distribution<int> lengths(2, 20);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = dims(rng);
        std::vector<Point> pts(static_cast<std::size_t>(lengths(rng)));
        for (auto& p : pts) {
            p.resize(d);
            for (int i = 0; i < d; ++i) p[i] = coord(rng);
        }
        const PointChain chain(pts);
        const auto axis = static_cast<std::size_t>(trial % d);
        const auto planes = project_to_planes(chain, axis);
        REQUIRE(planes.size() == static_cast<std::size_t>(d - 1));
        for (const auto& plane : planes) CHECK(plane.independent == planes.front().independent);
        const auto back = assemble_from_planes(planes);
        REQUIRE(back.size() == chain.size());
        for (std::size_t i = 0; i < chain.size(); ++i) CHECK(back[i] == chain[i]);
    }
}
