#ifndef NGSOR_BENCH_HPP
#define NGSOR_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ngsor/errors.hpp"
#include "ngsor/omega_tuner.hpp"

namespace ngsor {

enum class BenchMethod { Sor, Gsor, Gj, Ggs, Direct };

inline const char* bench_method_name(BenchMethod m) {
    switch (m) {
        case BenchMethod::Sor: return "sor";
        case BenchMethod::Gsor: return "gsor";
        case BenchMethod::Gj: return "gj";
        case BenchMethod::Ggs: return "ggs";
        case BenchMethod::Direct: return "direct";
    }
    return "?";
}

inline BenchMethod parse_bench_method(const std::string& name) {
    if (name == "sor") return BenchMethod::Sor;
    if (name == "gsor") return BenchMethod::Gsor;
    if (name == "gj") return BenchMethod::Gj;
    if (name == "ggs") return BenchMethod::Ggs;
    if (name == "direct") return BenchMethod::Direct;
    throw DimensionError("unknown method '" + name + "'");
}

/// Bandwidth given either as an explicit value or relative to the problem
/// size, e.g. "15" or "n-5".
struct BandwidthSpec {
    bool relative = false;
    long amount = 0; // the value itself, or k in "n-k"

    static BandwidthSpec parse(const std::string& text) {
        try {
            if (text.rfind("n-", 0) == 0) {
                return {true, std::stol(text.substr(2))};
            }
            return {false, std::stol(text)};
        } catch (const std::exception&) {
            throw DimensionError("invalid bandwidth '" + text + "' (expected an integer or n-<k>)");
        }
    }

    std::size_t resolve(std::size_t n) const {
        const long m = relative ? static_cast<long>(n) - amount : amount;
        if (m < 0 || m >= static_cast<long>(n))
            throw DimensionError("bandwidth resolves to " + std::to_string(m) +
                                 " outside [0, n-1] for n=" + std::to_string(n));
        return static_cast<std::size_t>(m);
    }

    std::string text() const {
        return relative ? "n-" + std::to_string(amount) : std::to_string(amount);
    }
};

/// Cross-product benchmark specification. Cells run in order
/// problem x x0 x n x m x method; method "sor" always runs at m = 0.
struct BenchPlan {
    std::vector<std::string> problems;
    std::vector<std::size_t> sizes;
    std::vector<BandwidthSpec> bandwidths;
    std::vector<BenchMethod> methods;
    std::vector<double> x0_fills;
    double eps1 = 1e-6;
    double eps2 = 1e-8;
    std::size_t max_outer = 200;
    std::size_t max_inner = 10000;
    std::optional<double> omega; // empty = auto-tune (GSOR/SOR)
    OmegaStrategy omega_strategy = OmegaStrategy::GridByInnerCount;
    OuterCriterion criterion = OuterCriterion::GradientNorm;
    unsigned seed = 12345u;
    std::size_t jobs = 1;
    std::size_t repetitions = 1; // timing repeats; reported time is the minimum

    void validate() const {
        if (problems.empty() || sizes.empty() || bandwidths.empty() || methods.empty() ||
            x0_fills.empty())
            throw DimensionError("BenchPlan: empty plan axis");
        if (!(eps1 > 0.0) || !(eps2 > 0.0))
            throw DimensionError("BenchPlan: tolerances must be positive");
        if (max_outer < 1 || max_inner < 1)
            throw DimensionError("BenchPlan: iteration caps must be >= 1");
        if (repetitions < 1) throw DimensionError("BenchPlan: repetitions must be >= 1");
        if (omega && !(*omega > 0.0 && *omega <= 2.0))
            throw DimensionError("BenchPlan: omega must lie in (0, 2]");
        for (const std::string& p : problems) make_problem(p, 1); // name check
        for (std::size_t n : sizes)
            for (const BandwidthSpec& b : bandwidths) (void)b.resolve(n);
    }
};

struct BenchRow {
    std::string problem;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string method;
    std::optional<double> omega;
    std::optional<std::size_t> outer_ic;
    std::optional<std::size_t> inner_ic;
    double time_sec = 0.0;
    std::string status;

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct CellResult {
    BenchRow row;
    std::optional<RunReport> report;
};

namespace detail {

struct BenchCell {
    std::string problem;
    double x0_fill;
    std::size_t n;
    std::size_t m;
    BenchMethod method;
};

inline std::vector<BenchCell> expand_cells(const BenchPlan& plan) {
    std::vector<BenchCell> cells;
    for (const std::string& prob : plan.problems)
        for (double fill : plan.x0_fills)
            for (std::size_t n : plan.sizes)
                for (const BandwidthSpec& b : plan.bandwidths)
                    for (BenchMethod method : plan.methods) {
                        const std::size_t m =
                            method == BenchMethod::Sor ? 0 : b.resolve(n);
                        cells.push_back({prob, fill, n, m, method});
                    }
    return cells;
}

inline CellResult run_cell(const BenchCell& cell, const BenchPlan& plan) {
    const ObjectiveProblem problem = make_problem(cell.problem, cell.n);
    const Vector x0(cell.n, cell.x0_fill);

    SolverConfig config;
    config.eps1 = plan.eps1;
    config.eps2 = plan.eps2;
    config.max_outer = plan.max_outer;
    config.max_inner = plan.max_inner;
    config.criterion = plan.criterion;
    config.bandwidth = cell.m;
    switch (cell.method) {
        case BenchMethod::Direct: config.method = InnerMethod::direct(); break;
        case BenchMethod::Gj: config.method = InnerMethod::jacobi(); break;
        case BenchMethod::Ggs: config.method = InnerMethod::gauss_seidel(); break;
        case BenchMethod::Sor:
        case BenchMethod::Gsor:
            if (plan.omega) {
                config.method = InnerMethod::sor(*plan.omega);
            } else {
                config.method = InnerMethod::sor(1.0);
                config.auto_omega = true;
            }
            break;
    }

    OmegaSearchSpec spec;
    spec.strategy = plan.omega_strategy;
    spec.seed = plan.seed;

    BenchRow row;
    row.problem = cell.problem;
    row.n = cell.n;
    row.m = cell.m;
    row.method = bench_method_name(cell.method);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        RunReport report = solve(problem, x0, config, spec);
        double best_time = report.wall_time_sec;
        for (std::size_t rep = 1; rep < plan.repetitions; ++rep)
            best_time = std::min(best_time, solve(problem, x0, config, spec).wall_time_sec);
        row.time_sec = best_time;
        row.status = status_name(report.status);
        if (std::isfinite(report.omega_used)) row.omega = report.omega_used;
        if (report.status == RunStatus::Converged) {
            row.outer_ic = report.outer_iterations;
            row.inner_ic = report.inner_total;
        }
        return CellResult{std::move(row), std::move(report)};
    } catch (const TuningError&) {
        const auto t1 = std::chrono::steady_clock::now();
        row.time_sec = std::chrono::duration<double>(t1 - t0).count();
        row.status = status_name(RunStatus::InnerFailure);
        return CellResult{std::move(row), std::nullopt};
    }
}

} // namespace detail

/// Runs every plan cell (up to plan.jobs cells concurrently) and returns
/// results in plan order. Failed cells carry a status and empty iteration
/// fields; they never abort the plan.
inline std::vector<CellResult> run_plan_detailed(const BenchPlan& plan) {
    plan.validate();
    const std::vector<detail::BenchCell> cells = detail::expand_cells(plan);
    std::vector<CellResult> results(cells.size());

    const std::size_t jobs = std::max<std::size_t>(1, std::min(plan.jobs, cells.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            results[i] = detail::run_cell(cells[i], plan);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (std::size_t w = 0; w < jobs; ++w) {
            workers.emplace_back([&]() {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    results[i] = detail::run_cell(cells[i], plan);
                }
            });
        }
        for (std::thread& t : workers) t.join();
    }
    return results;
}

inline std::vector<BenchRow> run_plan(const BenchPlan& plan) {
    std::vector<CellResult> detailed = run_plan_detailed(plan);
    std::vector<BenchRow> rows;
    rows.reserve(detailed.size());
    for (CellResult& r : detailed) rows.push_back(std::move(r.row));
    return rows;
}

enum class OutputFormat { Markdown, Csv, Json };

inline OutputFormat parse_output_format(const std::string& name) {
    if (name == "markdown") return OutputFormat::Markdown;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw DimensionError("unknown format '" + name + "'");
}

namespace detail {

inline std::string format_double(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

inline std::string omega_text(const BenchRow& row) {
    return row.omega ? format_double(*row.omega, 2) : std::string{};
}

inline std::string emit_csv(const std::vector<BenchRow>& rows) {
    std::string out = "problem,n,m,method,omega,outer_ic,inner_ic,time_sec,status\n";
    for (const BenchRow& r : rows) {
        out += r.problem + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
               r.method + ',' + omega_text(r) + ',' +
               (r.outer_ic ? std::to_string(*r.outer_ic) : std::string{}) + ',' +
               (r.inner_ic ? std::to_string(*r.inner_ic) : std::string{}) + ',' +
               format_double(r.time_sec, 3) + ',' + r.status + '\n';
    }
    return out;
}

inline std::string emit_json(const std::vector<BenchRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BenchRow& r : rows) {
        nlohmann::json obj;
        obj["problem"] = r.problem;
        obj["n"] = r.n;
        obj["m"] = r.m;
        obj["method"] = r.method;
        if (r.omega) obj["omega"] = *r.omega; else obj["omega"] = nullptr;
        if (r.outer_ic) obj["outer_ic"] = *r.outer_ic; else obj["outer_ic"] = nullptr;
        if (r.inner_ic) obj["inner_ic"] = *r.inner_ic; else obj["inner_ic"] = nullptr;
        obj["time_sec"] = r.time_sec;
        obj["status"] = r.status;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

/// Side-by-side method blocks per problem, one line per (n, m) pair, in
/// first-appearance order. Cells of failed runs print "--".
inline std::string emit_markdown(const std::vector<BenchRow>& rows) {
    std::string out;
    std::vector<std::string> problems;
    for (const BenchRow& r : rows)
        if (std::find(problems.begin(), problems.end(), r.problem) == problems.end())
            problems.push_back(r.problem);

    for (const std::string& prob : problems) {
        std::vector<std::string> methods;
        std::vector<std::pair<std::size_t, std::size_t>> keys;
        for (const BenchRow& r : rows) {
            if (r.problem != prob) continue;
            if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
                methods.push_back(r.method);
            const std::pair<std::size_t, std::size_t> key{r.n, r.m};
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
        }

        out += "### " + prob + "\n\n";
        out += "| n | m |";
        for (const std::string& m : methods)
            out += " " + m + " omega | " + m + " outer | " + m + " inner | " + m + " time (s) |";
        out += "\n|---|---|";
        for (std::size_t i = 0; i < methods.size(); ++i) out += "---|---|---|---|";
        out += "\n";

        for (const auto& key : keys) {
            out += "| " + std::to_string(key.first) + " | " + std::to_string(key.second) + " |";
            for (const std::string& m : methods) {
                const BenchRow* found = nullptr;
                for (const BenchRow& r : rows)
                    if (r.problem == prob && r.n == key.first && r.m == key.second &&
                        r.method == m) {
                        found = &r;
                        break;
                    }
                if (!found) {
                    out += "  |  |  |  |";
                } else if (found->status == "converged") {
                    out += " " + omega_text(*found) + " | " + std::to_string(*found->outer_ic) +
                           " | " + std::to_string(*found->inner_ic) + " | " +
                           format_double(found->time_sec, 3) + " |";
                } else {
                    out += " -- | -- | -- | " + found->status + " |";
                }
            }
            out += "\n";
        }
        out += "\n";
    }
    return out;
}

} // namespace detail

/// Renders rows in the requested format. CSV uses the fixed header
/// `problem,n,m,method,omega,outer_ic,inner_ic,time_sec,status`; counts are
/// integers, time prints with 3 decimals and omega with 2 in the
/// human-readable formats. JSON keeps full precision so parsing it back
/// reproduces the rows exactly.
inline std::string emit_table(const std::vector<BenchRow>& rows, OutputFormat format) {
    if (rows.empty()) throw DimensionError("emit_table: no rows");
    switch (format) {
        case OutputFormat::Csv: return detail::emit_csv(rows);
        case OutputFormat::Json: return detail::emit_json(rows);
        case OutputFormat::Markdown: return detail::emit_markdown(rows);
    }
    throw DimensionError("emit_table: bad format");
}

/// Parses rows previously emitted as JSON.
inline std::vector<BenchRow> parse_rows_json(const std::string& text) {
    const nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<BenchRow> rows;
    rows.reserve(arr.size());
    for (const nlohmann::json& obj : arr) {
        BenchRow r;
        r.problem = obj.at("problem").get<std::string>();
        r.n = obj.at("n").get<std::size_t>();
        r.m = obj.at("m").get<std::size_t>();
        r.method = obj.at("method").get<std::string>();
        if (!obj.at("omega").is_null()) r.omega = obj.at("omega").get<double>();
        if (!obj.at("outer_ic").is_null()) r.outer_ic = obj.at("outer_ic").get<std::size_t>();
        if (!obj.at("inner_ic").is_null()) r.inner_ic = obj.at("inner_ic").get<std::size_t>();
        r.time_sec = obj.at("time_sec").get<double>();
        r.status = obj.at("status").get<std::string>();
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace ngsor

#endif // NGSOR_BENCH_HPP
