// Command-line harness for single solves and benchmark tables.
//
//   ngsor solve --problem liarwhd --n 20 --m n-5 --method gsor --omega auto --x0 4.0
//   ngsor bench --problem liarwhd diag-aup1 --n 20 30 50 --m n-5
//               --method sor gsor ggs gj --x0 4.0 --format markdown --out table.md
//
// Exit codes: 0 every cell converged, 2 some cells failed, 1 usage or
// configuration error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ngsor/ngsor.hpp"

namespace {

struct CommonArgs {
    std::vector<std::string> problems{"liarwhd"};
    std::vector<std::size_t> sizes{20};
    std::vector<std::string> bandwidths{"n-5"};
    std::vector<std::string> methods{"gsor"};
    std::vector<double> x0_fills{4.0};
    std::string omega = "auto";
    std::string omega_strategy = "grid";
    double eps1 = 1e-6;
    double eps2 = 1e-8;
    std::size_t max_outer = 200;
    std::size_t max_inner = 10000;
    std::string criterion = "grad";
    std::string format = "markdown";
    std::string out_path;
    unsigned seed = 12345u;
    std::size_t jobs = 1;
    std::size_t repetitions = 1;
};

void add_common_options(CLI::App* cmd, CommonArgs& args, bool single) {
    const int expected = single ? 1 : -1;
    cmd->add_option("--problem", args.problems, "problem name (liarwhd, diag-aup1)")
        ->expected(expected);
    cmd->add_option("--n", args.sizes, "problem dimension")->expected(expected);
    cmd->add_option("--m", args.bandwidths, "bandwidth: integer or n-<k> (e.g. n-5)")
        ->expected(expected);
    cmd->add_option("--method", args.methods, "sor, gsor, gj, ggs, direct")
        ->expected(expected);
    cmd->add_option("--x0", args.x0_fills, "starting-point fill value")->expected(expected);
    cmd->add_option("--omega", args.omega, "relaxation parameter in (0,2] or 'auto'");
    cmd->add_option("--omega-strategy", args.omega_strategy,
                    "auto-tuning strategy: grid (by inner count) or spectral")
        ->check(CLI::IsMember({"grid", "spectral"}));
    cmd->add_option("--eps1", args.eps1, "outer tolerance");
    cmd->add_option("--eps2", args.eps2, "inner step tolerance");
    cmd->add_option("--max-outer", args.max_outer, "outer iteration cap");
    cmd->add_option("--max-inner", args.max_inner, "inner iteration cap");
    cmd->add_option("--criterion", args.criterion, "outer stopping: grad or fval")
        ->check(CLI::IsMember({"grad", "fval"}));
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"markdown", "csv", "json"}));
    cmd->add_option("--out", args.out_path, "output path (default stdout)");
    cmd->add_option("--seed", args.seed, "seed for the power-iteration start vector");
    cmd->add_option("--reps", args.repetitions, "timing repetitions per cell (min reported)");
    if (!single) cmd->add_option("--jobs", args.jobs, "max concurrent cells");
}

ngsor::BenchPlan to_plan(const CommonArgs& args) {
    ngsor::BenchPlan plan;
    plan.problems = args.problems;
    plan.sizes = args.sizes;
    for (const std::string& b : args.bandwidths)
        plan.bandwidths.push_back(ngsor::BandwidthSpec::parse(b));
    for (const std::string& m : args.methods)
        plan.methods.push_back(ngsor::parse_bench_method(m));
    plan.x0_fills = args.x0_fills;
    plan.eps1 = args.eps1;
    plan.eps2 = args.eps2;
    plan.max_outer = args.max_outer;
    plan.max_inner = args.max_inner;
    if (args.omega != "auto") {
        try {
            plan.omega = std::stod(args.omega);
        } catch (const std::exception&) {
            throw ngsor::DimensionError("invalid --omega '" + args.omega +
                                        "' (expected a number or 'auto')");
        }
    }
    plan.omega_strategy = args.omega_strategy == "spectral"
                              ? ngsor::OmegaStrategy::SpectralRadiusAtStart
                              : ngsor::OmegaStrategy::GridByInnerCount;
    plan.criterion = args.criterion == "fval" ? ngsor::OuterCriterion::FunctionValue
                                              : ngsor::OuterCriterion::GradientNorm;
    plan.seed = args.seed;
    plan.jobs = args.jobs;
    plan.repetitions = args.repetitions;
    return plan;
}

int emit(const std::vector<ngsor::BenchRow>& rows, const CommonArgs& args) {
    const std::string text = ngsor::emit_table(rows, ngsor::parse_output_format(args.format));
    if (args.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(args.out_path);
        if (!file) {
            std::cerr << "error: cannot open '" << args.out_path << "' for writing\n";
            return 1;
        }
        file << text;
    }
    for (const ngsor::BenchRow& r : rows)
        if (r.status != "converged") return 2;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton solver with banded-splitting stationary inner iterations"};
    app.require_subcommand(1);

    CommonArgs solve_args;
    CLI::App* solve_cmd = app.add_subcommand("solve", "run a single configuration");
    add_common_options(solve_cmd, solve_args, true);

    CommonArgs bench_args;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "run a benchmark plan (cross product of the options)");
    add_common_options(bench_cmd, bench_args, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage error
    }

    try {
        const CommonArgs& args = solve_cmd->parsed() ? solve_args : bench_args;
        return emit(ngsor::run_plan(to_plan(args)), args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
