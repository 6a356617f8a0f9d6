#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "splinefit/geometry.hpp"
#include "splinefit/pipeline.hpp"

namespace splinefit {

enum class PointFormat { Csv, Json };

PointFormat parse_point_format(std::string_view name);
// json for a .json extension, csv otherwise.
PointFormat infer_point_format(const std::filesystem::path& path);

// One point per line, comma-separated; blank lines and '#' lines are skipped.
PointChain parse_csv_points(std::istream& in);
// Either [[x, y, ...], ...] or {"points": [[x, y, ...], ...]}.
PointChain parse_json_points(std::string_view text);
PointChain load_points(const std::filesystem::path& path, PointFormat format);

// Axis names: X, Y, Z up to three dimensions, X1..Xn beyond.
std::string axis_name(std::size_t axis, std::size_t dim);

// Plot of one coordinate plane: data, control polygon, sampled curve.
struct PlanePlot {
    PlaneAxes axes;
    std::string title;
    std::vector<Point> data;          // 2D (independent, dependent)
    std::vector<Point> dominant;      // 2D, may be empty
    std::vector<Point> control_polygon;
    std::vector<Point> curve;
};

std::string render_svg(const PlanePlot& plot);

// Plots of `result` on each coordinate plane (one for a planar fit).
std::vector<PlanePlot> plane_plots(const FitResult& result, int samples_per_segment);
std::string plane_file_name(const PlaneAxes& axes, std::size_t dim);

std::string controls_json(const FitResult& result);
std::string samples_csv(const FitResult& result, int samples_per_segment);
std::string report_json(const FitResult& result);

// Writes controls.json, samples.csv, report.json and one plane_*.svg per
// coordinate plane. Returns the written paths.
std::vector<std::filesystem::path> emit_results(const FitResult& result, const std::filesystem::path& out_dir,
                                                int samples_per_segment);

struct SweepRow {
    double fraction;
    std::size_t m;
    double error;
    std::vector<double> gap_errors;
};

// Writes sweep.csv and sweep.json, one row per fraction.
std::vector<std::filesystem::path> emit_sweep(const std::vector<SweepRow>& rows, std::size_t chain_size,
                                              const std::filesystem::path& out_dir);

std::string format_fixed(double value, int digits);

}  // namespace splinefit
