#ifndef NGSOR_NEWTON_HPP
#define NGSOR_NEWTON_HPP

#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ngsor/dense.hpp"
#include "ngsor/dense_lu.hpp"
#include "ngsor/errors.hpp"
#include "ngsor/problems.hpp"
#include "ngsor/stationary.hpp"

namespace ngsor {

enum class OuterCriterion { GradientNorm, FunctionValue };
enum class RunStatus { Converged, MaxOuterReached, InnerFailure, Diverged };

inline const char* status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Converged: return "converged";
        case RunStatus::MaxOuterReached: return "max_outer";
        case RunStatus::InnerFailure: return "inner_failure";
        case RunStatus::Diverged: return "diverged";
    }
    return "?";
}

struct SolverConfig {
    double eps1 = 1e-6;                 // outer tolerance
    double eps2 = 1e-8;                 // inner step-difference tolerance
    std::size_t bandwidth = 0;          // m
    InnerMethod method = InnerMethod::sor(1.0);
    bool auto_omega = false;            // resolve via tune_omega / ngsor::solve
    std::size_t max_outer = 200;
    std::size_t max_inner = 10000;
    OuterCriterion criterion = OuterCriterion::GradientNorm;
    bool warm_start = false;            // reuse previous direction as inner start

    void validate() const {
        if (!(eps1 > 0.0) || !(eps2 > 0.0))
            throw DimensionError("SolverConfig: tolerances must be positive");
        if (max_outer < 1 || max_inner < 1)
            throw DimensionError("SolverConfig: iteration caps must be >= 1");
    }
};

struct RunReport {
    std::size_t outer_iterations = 0;
    std::size_t inner_total = 0;
    std::vector<std::size_t> inner_per_outer;
    RunStatus status = RunStatus::MaxOuterReached;
    Vector x_final;
    double f_final = 0.0;
    double grad_norm_final = 0.0;
    double omega_used = std::numeric_limits<double>::quiet_NaN();
    double wall_time_sec = 0.0;
    std::size_t descent_violations = 0;
};

/// True iff the step strictly decreased the objective.
inline bool descent_check(const ObjectiveProblem& problem, const Vector& x_prev,
                          const Vector& x_next) {
    if (x_prev.size() != x_next.size()) throw DimensionError("descent_check: size mismatch");
    return problem.eval(x_next) < problem.eval(x_prev);
}

namespace detail {

inline double omega_for_report(const InnerMethod& method) {
    switch (method.kind) {
        case MethodKind::GeneralizedSor: return method.omega;
        case MethodKind::GeneralizedGaussSeidel: return 1.0;
        default: return std::numeric_limits<double>::quiet_NaN();
    }
}

/// Shared outer loop. The stopping criterion is evaluated before each
/// step, so a start at the optimum reports zero outer iterations.
inline RunReport newton_loop(const ObjectiveProblem& problem, const Vector& x0,
                             const SolverConfig& config) {
    config.validate();
    if (problem.n != x0.size())
        throw DimensionError("newton: x0 does not match problem dimension");
    if (config.method.kind == MethodKind::GeneralizedSor &&
        !(config.method.omega > 0.0 && config.method.omega <= 2.0))
        throw DimensionError("newton: omega must lie in (0, 2]");

    const auto t0 = std::chrono::steady_clock::now();
    Vector x = x0;
    std::vector<std::size_t> inner_counts;
    std::size_t inner_total = 0;
    std::size_t descent_violations = 0;
    std::optional<Vector> prev_direction;

    RunStatus status = RunStatus::MaxOuterReached;
    double f_value = problem.eval(x);
    double grad_norm = 0.0;

    for (std::size_t outer = 0;; ++outer) {
        if (!std::isfinite(f_value) || !x.all_finite() || x.norm2() > 1e12) {
            status = RunStatus::Diverged;
            break;
        }
        const Vector grad = problem.gradient(x);
        grad_norm = grad.norm2();
        const double criterion_value =
            config.criterion == OuterCriterion::GradientNorm ? grad_norm : std::abs(f_value);
        if (criterion_value < config.eps1) {
            status = RunStatus::Converged;
            break;
        }
        if (outer >= config.max_outer) {
            status = RunStatus::MaxOuterReached;
            break;
        }

        InnerResult inner{Vector(x.size()), 0, false, 0.0};
        try {
            const Vector fhat = -grad;
            const Vector* warm =
                config.warm_start && prev_direction ? &*prev_direction : nullptr;
            inner = inner_solve(problem.hessian(x), fhat, config.method, config.bandwidth,
                                config.eps2, config.max_inner, NormKind::L2, warm);
        } catch (const SingularMatrixError&) {
            status = RunStatus::InnerFailure;
            break;
        } catch (const DivergenceError&) {
            status = RunStatus::InnerFailure;
            break;
        }
        if (!inner.converged) {
            // the failed attempt is not a completed outer step
            status = RunStatus::InnerFailure;
            break;
        }
        inner_counts.push_back(inner.iterations);
        inner_total += inner.iterations;

        Vector x_next = x + inner.d;
        const double f_next = problem.eval(x_next);
        if (!(f_next < f_value)) ++descent_violations;
        if (config.warm_start) prev_direction = inner.d;
        x = std::move(x_next);
        f_value = f_next;
    }

    const auto t1 = std::chrono::steady_clock::now();
    return RunReport{
        inner_counts.size(),
        inner_total,
        std::move(inner_counts),
        status,
        std::move(x),
        f_value,
        grad_norm,
        omega_for_report(config.method),
        std::chrono::duration<double>(t1 - t0).count(),
        descent_violations,
    };
}

} // namespace detail

/// Classic Newton iteration: the descent direction comes from one dense
/// factorization of the Hessian per step; each outer step counts one inner
/// solve.
inline RunReport newton_direct(const ObjectiveProblem& problem, const Vector& x0,
                               SolverConfig config) {
    config.method = InnerMethod::direct();
    config.auto_omega = false;
    return detail::newton_loop(problem, x0, config);
}

/// Newton iteration with the configured splitting method as inner solver.
/// Per outer step: evaluate the gradient and Hessian, split the Hessian at
/// the configured bandwidth, run the inner iteration from d = 0, and take
/// the unit step x + d. An Auto omega must be resolved first (see
/// ngsor::solve in omega_tuner.hpp). On inner failure the report's
/// outer_iterations is the index of the outer step that failed.
inline RunReport newton_iterative(const ObjectiveProblem& problem, const Vector& x0,
                                  const SolverConfig& config) {
    if (config.auto_omega)
        throw DimensionError(
            "newton_iterative: auto omega is unresolved; use ngsor::solve or tune_omega");
    return detail::newton_loop(problem, x0, config);
}

} // namespace ngsor

#endif // NGSOR_NEWTON_HPP
