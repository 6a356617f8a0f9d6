#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Core>

namespace splinefit {

using Point = Eigen::VectorXd;

Point make_point(std::initializer_list<double> coords);

// Ordered sequence of points sharing one dimension (>= 2). The order is the
// fitting order and is never changed by any operation in this library.
class PointChain {
public:
    PointChain() = default;
    explicit PointChain(std::vector<Point> points);
    PointChain(std::initializer_list<std::initializer_list<double>> rows);

    // Rows are points.
    static PointChain from_matrix(const Eigen::MatrixXd& rows);
    Eigen::MatrixXd to_matrix() const;

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    std::size_t dim() const noexcept { return points_.empty() ? 0 : static_cast<std::size_t>(points_.front().size()); }

    const Point& operator[](std::size_t i) const { return points_[i]; }
    const Point& front() const { return points_.front(); }
    const Point& back() const { return points_.back(); }
    const std::vector<Point>& points() const noexcept { return points_; }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    PointChain subchain(const std::vector<std::size_t>& indices) const;

private:
    std::vector<Point> points_;
};

struct PlaneAxes {
    std::size_t independent = 0;
    std::size_t dependent = 1;

    friend bool operator==(const PlaneAxes&, const PlaneAxes&) = default;
};

// One coordinate plane of a chain: the shared independent coordinate paired
// with a single dependent coordinate.
struct PlanarChain {
    std::vector<double> independent;
    std::vector<double> dependent;
    PlaneAxes axes;

    std::size_t size() const noexcept { return independent.size(); }

    // Points as (independent, dependent) pairs.
    PointChain as_points() const;
};

// Splits a chain of dimension >= 3 into dim-1 planes that share
// `independent_axis`; planes are ordered by ascending dependent axis.
std::vector<PlanarChain> project_to_planes(const PointChain& chain, std::size_t independent_axis);

// Inverse of project_to_planes.
PointChain assemble_from_planes(const std::vector<PlanarChain>& planes);

// Axes of every plane for a given dimension and independent axis, in the
// order project_to_planes produces them.
std::vector<PlaneAxes> plane_axes(std::size_t dim, std::size_t independent_axis);

}  // namespace splinefit
