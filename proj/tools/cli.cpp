#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "carpetlab/ascent.hpp"
#include "carpetlab/boxcount.hpp"
#include "carpetlab/dimension.hpp"
#include "carpetlab/errors.hpp"
#include "carpetlab/invariance.hpp"
#include "carpetlab/render.hpp"
#include "carpetlab/sampler.hpp"
#include "carpetlab/spec_io.hpp"
#include "carpetlab/weights.hpp"

namespace carpetlab::cli {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string g15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

struct WeightChoice {
    std::string file;
    bool uniform = false;
    bool optimal = false;
};

Weights resolve_weights(const CarpetSpec& spec, const WeightChoice& choice,
                        bool default_optimal) {
    if (!choice.file.empty())
        return make_weights(spec, load_weight_vector_file(choice.file));
    if (choice.uniform) return uniform_weights(spec);
    if (choice.optimal) return optimal_weights(row_profile(spec));
    return default_optimal ? optimal_weights(row_profile(spec)) : uniform_weights(spec);
}

void add_weight_flags(CLI::App* cmd, WeightChoice& choice) {
    auto* file = cmd->add_option("--weights", choice.file, "weight vector file (JSON)");
    auto* uni = cmd->add_flag("--uniform", choice.uniform, "uniform digit weights");
    auto* opt = cmd->add_flag("--optimal", choice.optimal, "closed-form optimal weights");
    file->excludes(uni)->excludes(opt);
    uni->excludes(opt);
}

// Writes to --out when given, otherwise to `fallback`. Callers print any
// human summary on the other stream so files stay machine-readable.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw SpecError("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : fallback_; }
    bool to_file() const { return file_ != nullptr; }

private:
    std::ostream& fallback_;
    std::unique_ptr<std::ofstream> file_;
};

void write_count_csv(std::ostream& out, const CountSeries& series) {
    out << "l,side,count\n";
    for (const CountEntry& e : series.entries)
        out << e.level << "," << g17(e.side) << "," << e.count << "\n";
}

void write_entropy_csv(std::ostream& out, const EntropySeries& series) {
    out << "l,H,estimate,collisions\n";
    for (const EntropyLevel& e : series.levels)
        out << e.level << "," << g17(e.entropy) << "," << g17(e.estimate) << ","
            << e.collisions << "\n";
}

void write_trace_csv(std::ostream& out, const AscentTrace& trace) {
    out << "iter,objective\n";
    for (std::size_t i = 0; i < trace.objective.size(); ++i)
        out << i << "," << g17(trace.objective[i]) << "\n";
}

void print_fit(std::ostream& out, const SlopeFit& fit, double closed_form) {
    out << "slope " << g15(fit.slope) << "\n"
        << "std_error " << g15(fit.std_error) << "\n"
        << "intercept " << g15(fit.intercept) << "\n"
        << "levels " << fit.l_min << ".." << fit.l_max << "\n"
        << "closed_form " << g15(closed_form) << "\n"
        << "slope_minus_closed_form " << g15(fit.slope - closed_form) << "\n"
        << "note box-count slopes need not match the closed-form Hausdorff value "
           "when row counts are non-uniform; both are reported\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"carpet dimension laboratory"};
    app.require_subcommand(1);

    // ---- shared option state ----------------------------------------------
    struct {
        std::string spec_path;
        std::string out_path;
        std::string trace_path;
        WeightChoice weights;
        int lmin = 1, lmax = 6;
        std::uint64_t sample_count = 0;
        int depth = 40;
        std::uint64_t seed = 0;
        std::uint64_t budget = kDefaultWordBudget;
        bool exact = false;
        int level = 1;
        int size = 512;
        bool glyph = false;
        int trials = 10;
        int inv_lmin = 4, inv_lmax = 8;
        double eta = 0.5;
        double tol = 1e-14;
        int max_iter = 10'000;
    } opt;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("spec", opt.spec_path, "carpet spec file (JSON)")->required();
    };

    CLI::App* dim = app.add_subcommand("dim", "closed-form Hausdorff dimension");
    add_spec(dim);

    CLI::App* weights_cmd = app.add_subcommand("weights", "optimal digit and row weights");
    add_spec(weights_cmd);

    CLI::App* lydim = app.add_subcommand("lydim", "measure dimension for given weights");
    add_spec(lydim);
    add_weight_flags(lydim, opt.weights);

    CLI::App* optimize = app.add_subcommand("optimize", "numerical weight optimization");
    add_spec(optimize);
    optimize->add_option("--eta", opt.eta, "initial step size");
    optimize->add_option("--tol", opt.tol, "objective-change tolerance");
    optimize->add_option("--max-iter", opt.max_iter, "iteration cap");
    optimize->add_option("--trace-out", opt.trace_path, "write iter,objective CSV here");

    CLI::App* boxcount = app.add_subcommand("boxcount", "box-count series and slope fit");
    add_spec(boxcount);
    boxcount->add_option("--lmin", opt.lmin, "first level")->required();
    boxcount->add_option("--lmax", opt.lmax, "last level")->required();
    auto* exact_flag = boxcount->add_flag("--exact", opt.exact, "exact symbolic enumeration");
    auto* sample_opt =
        boxcount->add_option("--sample", opt.sample_count, "count chaos-game points instead");
    exact_flag->excludes(sample_opt);
    boxcount->add_option("--depth", opt.depth, "chaos-game truncation depth");
    boxcount->add_option("--seed", opt.seed, "chaos-game seed");
    boxcount->add_option("--budget", opt.budget, "word budget per level");
    boxcount->add_option("--out", opt.out_path, "write the CSV here");
    add_weight_flags(boxcount, opt.weights);

    CLI::App* entropy = app.add_subcommand("entropy", "partition entropy series");
    add_spec(entropy);
    entropy->add_option("--lmin", opt.lmin, "first level");
    entropy->add_option("--lmax", opt.lmax, "last level")->required();
    entropy->add_option("--budget", opt.budget, "word budget per level");
    entropy->add_option("--out", opt.out_path, "write the CSV here");
    add_weight_flags(entropy, opt.weights);

    CLI::App* render = app.add_subcommand("render", "rasterize a carpet approximation");
    add_spec(render);
    render->add_option("--level", opt.level, "cylinder level")->required();
    render->add_option("--size", opt.size, "image size in pixels")->required();
    render->add_option("--out", opt.out_path, "output PGM path")->required();
    render->add_flag("--glyph", opt.glyph, "draw orientation glyphs (level 1)");
    render->add_option("--budget", opt.budget, "cylinder budget");

    CLI::App* invariance = app.add_subcommand("invariance", "random-signature experiment");
    add_spec(invariance);
    invariance->add_option("--trials", opt.trials, "number of signature assignments")
        ->required();
    invariance->add_option("--seed", opt.seed, "assignment seed");
    invariance->add_option("--lmin", opt.inv_lmin, "first fit level");
    invariance->add_option("--lmax", opt.inv_lmax, "last fit level");
    invariance->add_option("--budget", opt.budget, "word budget per level");
    invariance->add_option("--out", opt.out_path, "write the JSON report here");

    std::vector<const char*> argv;
    argv.push_back("carpetlab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        const CarpetSpec spec = load_spec_file(opt.spec_path);
        const RowProfile profile = row_profile(spec);

        if (*dim) {
            const DimensionReport report = dimension_report(profile);
            out << "hausdorff " << g15(report.hausdorff) << "\n"
                << "S " << g15(report.row_weight_sum) << "\n"
                << "beta " << g15(profile.beta) << "\n";
            out << "t ";
            for (std::size_t j = 0; j < profile.row_counts.size(); ++j)
                out << (j ? "," : "") << profile.row_counts[j];
            out << "\n";
            return 0;
        }

        if (*weights_cmd) {
            const DimensionReport report = dimension_report(profile);
            out << "q ";
            for (std::size_t j = 0; j < report.optimal.q.size(); ++j)
                out << (j ? "," : "") << g17(report.optimal.q[j]);
            out << "\np ";
            for (std::size_t i = 0; i < report.optimal.p.size(); ++i)
                out << (i ? "," : "") << g17(report.optimal.p[i]);
            out << "\nS " << g15(report.row_weight_sum) << "\n"
                << "H_p " << g15(report.entropy_p) << "\n"
                << "H_q " << g15(report.entropy_q) << "\n";
            return 0;
        }

        if (*lydim) {
            const Weights w = resolve_weights(spec, opt.weights, /*default_optimal=*/false);
            out << "ly_dimension " << g15(ly_dimension(profile, w)) << "\n"
                << "H_p " << g15(shannon_entropy(w.p)) << "\n"
                << "H_q " << g15(shannon_entropy(w.q)) << "\n";
            return 0;
        }

        if (*optimize) {
            AscentConfig cfg;
            cfg.step = opt.eta;
            cfg.tolerance = opt.tol;
            cfg.max_iterations = opt.max_iter;
            const AscentTrace trace = maximize_dimension(profile, uniform_weights(spec), cfg);
            const Weights closed = optimal_weights(profile);
            double distance = 0.0;
            for (std::size_t i = 0; i < closed.p.size(); ++i)
                distance = std::max(distance, std::abs(closed.p[i] - trace.weights.p[i]));
            out << "iterations " << trace.iterations << "\n"
                << "converged " << (trace.converged ? "true" : "false") << "\n"
                << "objective " << g15(trace.objective.back()) << "\n"
                << "closed_form " << g15(hausdorff_dimension(profile)) << "\n"
                << "objective_gap "
                << g15(hausdorff_dimension(profile) - trace.objective.back()) << "\n"
                << "max_weight_distance " << g15(distance) << "\n";
            if (!opt.trace_path.empty()) {
                OutputTarget target(opt.trace_path, out);
                write_trace_csv(target.stream(), trace);
            }
            return 0;
        }

        if (*boxcount) {
            if (!opt.exact && opt.sample_count == 0)
                throw SpecError("boxcount needs --exact or --sample N");
            CountSeries series;
            if (opt.exact) {
                series = exact_box_counts(spec, opt.lmin, opt.lmax, opt.budget);
            } else {
                const Weights w = resolve_weights(spec, opt.weights, /*default_optimal=*/true);
                const SampleSet samples =
                    sample_points(spec, w, opt.sample_count, opt.depth, opt.seed);
                series = sampled_box_counts(samples, opt.lmin, opt.lmax, spec.m);
            }
            OutputTarget target(opt.out_path, out);
            write_count_csv(target.stream(), series);
            std::ostream& report = target.to_file() ? out : err;
            if (series.entries.size() >= 3)
                print_fit(report, fit_dimension_slope(series, spec.m),
                          hausdorff_dimension(profile));
            return 0;
        }

        if (*entropy) {
            const Weights w = resolve_weights(spec, opt.weights, /*default_optimal=*/false);
            const EntropySeries series =
                partition_entropy_series(spec, w, opt.lmin, opt.lmax, opt.budget);
            OutputTarget target(opt.out_path, out);
            write_entropy_csv(target.stream(), series);
            std::ostream& report = target.to_file() ? out : err;
            report << "ly_dimension " << g15(ly_dimension(profile, w)) << "\n";
            return 0;
        }

        if (*render) {
            const RasterImage image =
                render_raster(spec, opt.level, opt.size, opt.glyph, opt.budget);
            write_pgm(image, opt.out_path);
            out << "wrote " << opt.out_path << " (" << image.width << "x" << image.height
                << ")\n";
            return 0;
        }

        if (*invariance) {
            const InvarianceReport report = invariance_report(
                spec, opt.trials, opt.seed, opt.inv_lmin, opt.inv_lmax, opt.budget);
            OutputTarget target(opt.out_path, out);
            target.stream() << invariance_to_json(report);
            if (target.to_file())
                out << "dimensions_identical "
                    << (report.dimensions_identical ? "true" : "false") << "\n"
                    << "max_slope_deviation " << g15(report.max_slope_deviation) << "\n";
            return 0;
        }

        err << "error: no subcommand selected\n";
        return 1;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace carpetlab::cli
