#include "splinefit/geometry.hpp"

#include <cmath>
#include <string>

#include "splinefit/errors.hpp"

namespace splinefit {

Point make_point(std::initializer_list<double> coords) {
    Point p(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double c : coords) p[i++] = c;
    return p;
}

PointChain::PointChain(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) return;
    const auto d = points_.front().size();
    if (d < 2) throw InputError("points must have at least 2 coordinates");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != d)
            throw InputError("point " + std::to_string(i) + " has dimension " +
                             std::to_string(points_[i].size()) + ", expected " + std::to_string(d));
        if (!points_[i].allFinite())
            throw InputError("point " + std::to_string(i) + " has a non-finite coordinate");
    }
}

PointChain::PointChain(std::initializer_list<std::initializer_list<double>> rows)
    : PointChain([&] {
          std::vector<Point> pts;
          pts.reserve(rows.size());
          for (const auto& r : rows) pts.push_back(make_point(r));
          return pts;
      }()) {}

PointChain PointChain::from_matrix(const Eigen::MatrixXd& rows) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(rows.rows()));
    for (Eigen::Index r = 0; r < rows.rows(); ++r) pts.emplace_back(rows.row(r).transpose());
    return PointChain(std::move(pts));
}

Eigen::MatrixXd PointChain::to_matrix() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(dim()));
    for (std::size_t i = 0; i < size(); ++i) m.row(static_cast<Eigen::Index>(i)) = points_[i].transpose();
    return m;
}

PointChain PointChain::subchain(const std::vector<std::size_t>& indices) const {
    std::vector<Point> pts;
    pts.reserve(indices.size());
    for (auto i : indices) {
        if (i >= size()) throw InputError("subchain index " + std::to_string(i) + " out of range");
        pts.push_back(points_[i]);
    }
    return PointChain(std::move(pts));
}

PointChain PlanarChain::as_points() const {
    if (independent.size() != dependent.size())
        throw InputError("planar chain coordinate lists differ in length");
    std::vector<Point> pts;
    pts.reserve(independent.size());
    for (std::size_t i = 0; i < independent.size(); ++i) pts.push_back(make_point({independent[i], dependent[i]}));
    return PointChain(std::move(pts));
}

std::vector<PlaneAxes> plane_axes(std::size_t dim, std::size_t independent_axis) {
    if (independent_axis >= dim)
        throw InputError("independent axis " + std::to_string(independent_axis) + " out of range for dimension " +
                         std::to_string(dim));
    std::vector<PlaneAxes> axes;
    for (std::size_t a = 0; a < dim; ++a)
        if (a != independent_axis) axes.push_back({independent_axis, a});
    return axes;
}

std::vector<PlanarChain> project_to_planes(const PointChain& chain, std::size_t independent_axis) {
    if (chain.dim() < 3)
        throw InputError("projection to coordinate planes needs dimension >= 3, got " + std::to_string(chain.dim()));
    std::vector<PlanarChain> planes;
    for (const auto& axes : plane_axes(chain.dim(), independent_axis)) {
        PlanarChain plane;
        plane.axes = axes;
        plane.independent.reserve(chain.size());
        plane.dependent.reserve(chain.size());
        for (const auto& p : chain) {
            plane.independent.push_back(p[static_cast<Eigen::Index>(axes.independent)]);
            plane.dependent.push_back(p[static_cast<Eigen::Index>(axes.dependent)]);
        }
        planes.push_back(std::move(plane));
    }
    return planes;
}

PointChain assemble_from_planes(const std::vector<PlanarChain>& planes) {
    if (planes.empty()) throw InputError("no planes to assemble");
    const auto n = planes.front().size();
    const auto dim = planes.size() + 1;
    const auto expected = plane_axes(dim, planes.front().axes.independent);
    for (std::size_t k = 0; k < planes.size(); ++k) {
        if (planes[k].size() != n || planes[k].dependent.size() != n)
            throw InputError("planes differ in length");
        if (!(planes[k].axes == expected[k])) throw InputError("plane axes do not form a corresponding set");
    }
    std::vector<Point> pts(n, Point::Zero(static_cast<Eigen::Index>(dim)));
    for (std::size_t i = 0; i < n; ++i) {
        pts[i][static_cast<Eigen::Index>(expected.front().independent)] = planes.front().independent[i];
        for (const auto& plane : planes) {
            if (plane.independent[i] != planes.front().independent[i])
                throw InputError("planes disagree on independent coordinate at point " + std::to_string(i));
            pts[i][static_cast<Eigen::Index>(plane.axes.dependent)] = plane.dependent[i];
        }
    }
    return PointChain(std::move(pts));
}

}  // namespace splinefit
