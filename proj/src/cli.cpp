#include "splinefit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "splinefit/errors.hpp"
#include "splinefit/io.hpp"
#include "splinefit/pipeline.hpp"

namespace splinefit {

namespace {

struct Options {
    std::string input;
    std::string format;
    double tension = 0.5;
    std::size_t independent_axis = 0;
    int samples = 32;
    bool bezier_exact = false;
    std::string out;
    double fraction = 1.0;
    std::vector<double> fractions{1.0, 0.9, 0.8, 0.7};
    std::optional<std::size_t> primary;
    std::optional<std::size_t> support;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--input", o.input, "Point file (one point per row)")->required();
    cmd->add_option("--format", o.format, "csv or json (default: from extension)");
    cmd->add_option("--tension", o.tension, "Cardinal tension")->capture_default_str();
    cmd->add_option("--independent-axis", o.independent_axis, "Axis shared by the coordinate planes")
        ->capture_default_str();
    cmd->add_option("--samples", o.samples, "Samples per curve segment")->capture_default_str();
    cmd->add_flag("--bezier-exact", o.bezier_exact, "Triple interior knots so the B-spline equals the Bezier pieces");
    cmd->add_option("--out", o.out, "Output directory")->required();
}

FitConfig make_config(const Options& o, const PointChain& chain) {
    FitConfig cfg;
    cfg.tension = Tension(o.tension);
    if (o.independent_axis >= chain.dim())
        throw InputError("--independent-axis " + std::to_string(o.independent_axis) + " out of range for dimension " +
                         std::to_string(chain.dim()));
    cfg.independent_axis = o.independent_axis;
    cfg.samples_per_segment = o.samples;
    cfg.bezier_exact_knots = o.bezier_exact;
    cfg.dominant_fraction = o.fraction;
    cfg.primary_count = o.primary;
    cfg.support_count = o.support;
    cfg.validate();
    return cfg;
}

PointChain read_input(const Options& o) {
    const auto format = o.format.empty() ? infer_point_format(o.input) : parse_point_format(o.format);
    return load_points(o.input, format);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cubic B-spline fitting of ordered point chains", "splinefit"};
    app.require_subcommand(1);
    Options o;

    auto* fit_cmd = app.add_subcommand("fit", "Fit a curve through every point");
    add_common(fit_cmd, o);

    auto* approx_cmd = app.add_subcommand("approx", "Approximate with a fraction of dominant points");
    add_common(approx_cmd, o);
    approx_cmd->add_option("--fraction", o.fraction, "Fraction of points kept, in (0, 1]")->required();
    approx_cmd->add_option("--primary", o.primary, "Primary dominant points in the initial guess");
    approx_cmd->add_option("--support", o.support, "Support dominant points in the initial guess");

    auto* sweep_cmd = app.add_subcommand("sweep", "Approximation error over a list of fractions");
    add_common(sweep_cmd, o);
    sweep_cmd->add_option("--fraction", o.fractions, "Comma-separated fractions")->delimiter(',')->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitInputError;
    }

    try {
        const auto chain = read_input(o);
        if (*fit_cmd) {
            const auto cfg = make_config(o, chain);
            const auto result = fit(chain, cfg);
            for (const auto& w : result.warnings) err << "warning: " << w << "\n";
            for (const auto& p : emit_results(result, o.out, cfg.samples_per_segment)) out << p.string() << "\n";
        } else if (*approx_cmd) {
            const auto cfg = make_config(o, chain);
            const auto result = approximate_with_fraction(chain, cfg);
            for (const auto& w : result.warnings) err << "warning: " << w << "\n";
            emit_results(result, o.out, cfg.samples_per_segment);
            out << "m=" << result.selection->size() << " e_m=" << format_fixed(*result.error, 9) << "\n";
        } else {
            if (o.fractions.empty()) throw InputError("--fraction needs at least one value");
            std::vector<SweepRow> rows;
            for (double f : o.fractions) {
                o.fraction = f;
                const auto cfg = make_config(o, chain);
                const auto result = approximate_with_fraction(chain, cfg);
                rows.push_back({f, result.selection->size(), *result.error, result.gap_errors});
                out << "fraction=" << format_fixed(f, 6) << " m=" << result.selection->size()
                    << " e_m=" << format_fixed(*result.error, 9) << "\n";
            }
            emit_sweep(rows, chain.size(), o.out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitNumericError;
    }
    return kExitOk;
}

}  // namespace splinefit
