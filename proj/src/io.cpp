#include "splinefit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "splinefit/errors.hpp"

namespace splinefit {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("cannot parse '" + std::string(field) + "' as a number", line);
    if (!std::isfinite(v)) throw ParseError("non-finite value '" + std::string(field) + "'", line);
    return v;
}

PointChain finish_chain(std::vector<Point> pts) {
    if (pts.size() < 2) throw InputError("need at least 2 points, got " + std::to_string(pts.size()));
    return PointChain(std::move(pts));
}

json point_json(const Point& p) {
    json a = json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(p[i]);
    return a;
}

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::Endpoint: return "endpoint";
        case Tier::Primary: return "primary";
        case Tier::Support: return "support";
        case Tier::Secondary: return "secondary";
    }
    return "unknown";
}

Point project(const Point& p, const PlaneAxes& axes) {
    Point out(2);
    out << p[static_cast<Eigen::Index>(axes.independent)], p[static_cast<Eigen::Index>(axes.dependent)];
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("failed writing " + path.string());
}

std::string svg_points(const std::vector<Point>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ' ';
        s += format_fixed(pts[i][0], 6) + "," + format_fixed(-pts[i][1], 6);
    }
    return s;
}

}  // namespace

std::string format_fixed(double value, int digits) {
    if (!std::isfinite(value)) throw NumericError("refusing to emit a non-finite number");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    std::string s(buf);
    // Avoid "-0.000000".
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

PointFormat parse_point_format(std::string_view name) {
    if (name == "csv") return PointFormat::Csv;
    if (name == "json") return PointFormat::Json;
    throw InputError("unknown point format '" + std::string(name) + "' (expected csv or json)");
}

PointFormat infer_point_format(const std::filesystem::path& path) {
    return path.extension() == ".json" ? PointFormat::Json : PointFormat::Csv;
}

PointChain parse_csv_points(std::istream& in) {
    std::vector<Point> pts;
    std::string raw;
    std::size_t line = 0;
    std::size_t columns = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = trim(raw);
        if (text.empty() || text.front() == '#') continue;
        std::vector<double> values;
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            values.push_back(parse_number(text.substr(start, comma - start), line));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (values.size() < 2) throw ParseError("a point needs at least 2 coordinates", line);
        if (columns == 0) columns = values.size();
        if (values.size() != columns)
            throw ParseError("expected " + std::to_string(columns) + " columns, found " + std::to_string(values.size()),
                             line);
        pts.push_back(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())));
    }
    return finish_chain(std::move(pts));
}

PointChain parse_json_points(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
        throw ParseError("invalid JSON", line);
    }
    const json* rows = &doc;
    if (doc.is_object()) {
        if (!doc.contains("points")) throw InputError("JSON object has no \"points\" array");
        rows = &doc["points"];
    }
    if (!rows->is_array()) throw InputError("expected a JSON array of points");
    std::vector<Point> pts;
    std::size_t columns = 0;
    for (std::size_t r = 0; r < rows->size(); ++r) {
        const auto& row = (*rows)[r];
        const std::string where = "point " + std::to_string(r);
        if (!row.is_array() || row.size() < 2) throw InputError(where + ": expected an array of >= 2 numbers");
        if (columns == 0) columns = row.size();
        if (row.size() != columns)
            throw InputError(where + ": expected " + std::to_string(columns) + " coordinates, found " +
                             std::to_string(row.size()));
        Point p(static_cast<Eigen::Index>(columns));
        for (std::size_t c = 0; c < columns; ++c) {
            if (!row[c].is_number()) throw InputError(where + ": non-numeric coordinate");
            p[static_cast<Eigen::Index>(c)] = row[c].get<double>();
        }
        if (!p.allFinite()) throw InputError(where + ": non-finite coordinate");
        pts.push_back(std::move(p));
    }
    return finish_chain(std::move(pts));
}

PointChain load_points(const std::filesystem::path& path, PointFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    if (format == PointFormat::Csv) return parse_csv_points(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_points(buf.str());
}

std::string axis_name(std::size_t axis, std::size_t dim) {
    if (dim <= 3) return std::string(1, "XYZ"[axis]);
    return "X" + std::to_string(axis + 1);
}

std::string plane_file_name(const PlaneAxes& axes, std::size_t dim) {
    const auto sep = dim <= 3 ? "" : "_";
    return "plane_" + axis_name(axes.independent, dim) + sep + axis_name(axes.dependent, dim) + ".svg";
}

std::string render_svg(const PlanePlot& plot) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& p : plot.data) {
        xmin = std::min(xmin, p[0]);
        xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
    double w = xmax - xmin;
    double h = ymax - ymin;
    if (w == 0.0) w = std::max(1.0, h);
    if (h == 0.0) h = std::max(1.0, w);
    const double mx = 0.05 * w;
    const double my = 0.05 * h;
    const double vx = xmin - mx, vy = -(ymax + my), vw = w + 2 * mx, vh = h + 2 * my;
    const double unit = std::max(vw, vh) / 100.0;
    auto f = [](double v) { return format_fixed(v, 6); };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"" + f(vx) + " " + f(vy) +
         " " + f(vw) + " " + f(vh) + "\" preserveAspectRatio=\"xMidYMid meet\">\n";
    s += "<title>" + plot.title + "</title>\n";
    s += "<rect x=\"" + f(vx) + "\" y=\"" + f(vy) + "\" width=\"" + f(vw) + "\" height=\"" + f(vh) +
         "\" fill=\"white\"/>\n";
    if (!plot.control_polygon.empty())
        s += "<polyline fill=\"none\" stroke=\"#888888\" stroke-width=\"" + f(0.2 * unit) + "\" stroke-dasharray=\"" +
             f(unit) + "," + f(unit) + "\" points=\"" + svg_points(plot.control_polygon) + "\"/>\n";
    if (!plot.curve.empty())
        s += "<polyline fill=\"none\" stroke=\"#1f4fbf\" stroke-width=\"" + f(0.3 * unit) + "\" points=\"" +
             svg_points(plot.curve) + "\"/>\n";
    for (const auto& p : plot.data)
        s += "<circle cx=\"" + f(p[0]) + "\" cy=\"" + f(-p[1]) + "\" r=\"" + f(0.6 * unit) + "\" fill=\"#d02020\"/>\n";
    for (const auto& p : plot.dominant)
        s += "<circle cx=\"" + f(p[0]) + "\" cy=\"" + f(-p[1]) + "\" r=\"" + f(unit) +
             "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" + f(0.15 * unit) + "\"/>\n";
    s += "<text x=\"" + f(vx + vw - 3 * unit) + "\" y=\"" + f(vy + vh - unit) + "\" font-size=\"" + f(3 * unit) +
         "\">" + plot.title.substr(0, plot.title.find('/')) + "</text>\n";
    s += "<text x=\"" + f(vx + unit) + "\" y=\"" + f(vy + 3 * unit) + "\" font-size=\"" + f(3 * unit) + "\">" +
         plot.title.substr(plot.title.find('/') + 1) + "</text>\n";
    s += "</svg>\n";
    return s;
}

std::vector<PlanePlot> plane_plots(const FitResult& result, int samples_per_segment) {
    const std::size_t dim = result.data.dim();
    const auto axes = dim == 2 ? std::vector<PlaneAxes>{result.independent_axis == 1 ? PlaneAxes{1, 0} : PlaneAxes{0, 1}}
                               : plane_axes(dim, result.independent_axis);
    const auto samples = sample_bspline(result.curve, samples_per_segment);
    std::vector<PlanePlot> plots;
    for (const auto& a : axes) {
        PlanePlot plot;
        plot.axes = a;
        plot.title = axis_name(a.independent, dim) + "/" + axis_name(a.dependent, dim);
        for (const auto& p : result.data) plot.data.push_back(project(p, a));
        if (result.selection)
            for (auto i : result.selection->indices) plot.dominant.push_back(project(result.data[i], a));
        for (const auto& c : result.curve.controls) plot.control_polygon.push_back(project(c, a));
        for (const auto& [u, p] : samples) plot.curve.push_back(project(p, a));
        plots.push_back(std::move(plot));
    }
    return plots;
}

std::string controls_json(const FitResult& result) {
    json doc;
    doc["dimension"] = result.curve.dim();
    doc["order"] = result.curve.order;
    doc["independent_axis"] = result.independent_axis;
    doc["knots"] = result.curve.knots.values();
    json controls = json::array();
    for (const auto& c : result.curve.controls) controls.push_back(point_json(c));
    doc["controls"] = std::move(controls);
    json segments = json::array();
    for (const auto& s : result.piecewise.segments) {
        json seg = json::array();
        for (const auto& c : s.controls) seg.push_back(point_json(c));
        segments.push_back(std::move(seg));
    }
    doc["bezier_segments"] = std::move(segments);
    return doc.dump(2) + "\n";
}

std::string samples_csv(const FitResult& result, int samples_per_segment) {
    std::string s = "# parameter";
    const std::size_t dim = result.curve.dim();
    for (std::size_t a = 0; a < dim; ++a) s += "," + axis_name(a, dim);
    s += "\n";
    for (const auto& [u, p] : sample_bspline(result.curve, samples_per_segment)) {
        s += format_fixed(u, 9);
        for (Eigen::Index a = 0; a < p.size(); ++a) s += "," + format_fixed(p[a], 9);
        s += "\n";
    }
    return s;
}

std::string report_json(const FitResult& result) {
    json doc;
    doc["points"] = result.data.size();
    doc["dimension"] = result.data.dim();
    doc["fraction"] = result.fraction;
    doc["segments"] = result.piecewise.size();
    if (result.selection) {
        const auto& sel = *result.selection;
        doc["m"] = sel.size();
        doc["m1"] = sel.primary_count;
        doc["m2"] = sel.support_count;
        doc["dominant_indices"] = sel.indices;
        json tiers = json::array();
        for (auto t : sel.tiers) tiers.push_back(tier_name(t));
        doc["tiers"] = std::move(tiers);
    } else {
        doc["m"] = result.data.size();
    }
    doc["e_m"] = result.error.value_or(0.0);
    doc["gap_errors"] = result.gap_errors;
    doc["warnings"] = result.warnings;
    return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> emit_results(const FitResult& result, const std::filesystem::path& out_dir,
                                                int samples_per_segment) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw InputError("cannot create output directory " + out_dir.string() + ": " + ec.message());
    std::vector<std::filesystem::path> written;
    auto put = [&](const std::string& name, const std::string& text) {
        write_file(out_dir / name, text);
        written.push_back(out_dir / name);
    };
    put("controls.json", controls_json(result));
    put("samples.csv", samples_csv(result, samples_per_segment));
    put("report.json", report_json(result));
    for (const auto& plot : plane_plots(result, samples_per_segment))
        put(plane_file_name(plot.axes, result.data.dim()), render_svg(plot));
    return written;
}

std::vector<std::filesystem::path> emit_sweep(const std::vector<SweepRow>& rows, std::size_t chain_size,
                                              const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw InputError("cannot create output directory " + out_dir.string() + ": " + ec.message());
    std::string csv = "# fraction,m,e_m\n";
    json doc;
    doc["points"] = chain_size;
    doc["rows"] = json::array();
    for (const auto& r : rows) {
        csv += format_fixed(r.fraction, 6) + "," + std::to_string(r.m) + "," + format_fixed(r.error, 9) + "\n";
        doc["rows"].push_back({{"fraction", r.fraction}, {"m", r.m}, {"e_m", r.error}, {"gap_errors", r.gap_errors}});
    }
    write_file(out_dir / "sweep.csv", csv);
    write_file(out_dir / "sweep.json", doc.dump(2) + "\n");
    return {out_dir / "sweep.csv", out_dir / "sweep.json"};
}

}  // namespace splinefit
