#ifndef NGSOR_OMEGA_TUNER_HPP
#define NGSOR_OMEGA_TUNER_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "ngsor/errors.hpp"
#include "ngsor/newton.hpp"
#include "ngsor/spectral_radius.hpp"

namespace ngsor {

enum class OmegaStrategy {
    GridByInnerCount,      // full solve per candidate, minimize total inner iterations
    SpectralRadiusAtStart, // minimize the estimated rho of the iteration operator at x0
};

/// Grid 1.00, 1.05, ..., 2.00. Includes 1.0 so the Gauss-Seidel endpoint
/// stays reachable.
inline std::vector<double> default_omega_grid() {
    std::vector<double> grid;
    grid.reserve(21);
    for (int i = 0; i <= 20; ++i) grid.push_back(1.0 + 0.05 * i);
    return grid;
}

struct OmegaSearchSpec {
    OmegaStrategy strategy = OmegaStrategy::GridByInnerCount;
    std::vector<double> grid = default_omega_grid();
    unsigned seed = 12345u; // power-iteration start for the spectral strategy

    void validate() const {
        if (grid.empty()) throw DimensionError("OmegaSearchSpec: empty grid");
        double prev = 0.0;
        for (double w : grid) {
            if (!(w > 0.0 && w <= 2.0))
                throw DimensionError("OmegaSearchSpec: grid values must lie in (0, 2]");
            if (!(w > prev))
                throw DimensionError("OmegaSearchSpec: grid must be strictly increasing");
            prev = w;
        }
    }
};

struct OmegaCandidate {
    double omega = 0.0;
    double score = 0.0; // total inner iterations or estimated rho
    bool feasible = false;
    std::size_t outer_iterations = 0;
    std::size_t inner_total = 0;
};

struct OmegaTuneResult {
    double omega = 1.0;
    OmegaStrategy strategy = OmegaStrategy::GridByInnerCount;
    std::vector<OmegaCandidate> candidates;
};

/// Picks the relaxation parameter for a Newton-GSOR run. GridByInnerCount
/// runs the full solve at every grid value and keeps the omega with the
/// fewest total inner iterations (non-converging candidates excluded;
/// TuningError when all fail). SpectralRadiusAtStart scores each omega by
/// the estimated spectral radius of the iteration operator for H(x0) split
/// at the configured bandwidth. Ties break toward the smallest omega.
inline OmegaTuneResult tune_omega(const ObjectiveProblem& problem, const Vector& x0,
                                  const SolverConfig& config,
                                  const OmegaSearchSpec& spec = {}) {
    spec.validate();
    config.validate();

    OmegaTuneResult result;
    result.strategy = spec.strategy;
    result.candidates.reserve(spec.grid.size());

    double best_score = std::numeric_limits<double>::infinity();
    double best_omega = std::numeric_limits<double>::quiet_NaN();

    if (spec.strategy == OmegaStrategy::GridByInnerCount) {
        for (double omega : spec.grid) {
            SolverConfig candidate_config = config;
            candidate_config.auto_omega = false;
            candidate_config.method = InnerMethod::sor(omega);
            OmegaCandidate cand{omega, 0.0, false, 0, 0};
            const RunReport report = newton_iterative(problem, x0, candidate_config);
            cand.outer_iterations = report.outer_iterations;
            cand.inner_total = report.inner_total;
            cand.score = static_cast<double>(report.inner_total);
            cand.feasible = report.status == RunStatus::Converged;
            if (cand.feasible && cand.score < best_score) {
                best_score = cand.score;
                best_omega = omega;
            }
            result.candidates.push_back(cand);
        }
        if (!std::isfinite(best_omega))
            throw TuningError("tune_omega: no grid candidate converged");
    } else {
        const BandedSplitting s = split(problem.hessian(x0), config.bandwidth);
        for (double omega : spec.grid) {
            const SpectralRadiusEstimate est =
                spectral_radius_estimate(s, omega, MethodKind::GeneralizedSor, spec.seed);
            OmegaCandidate cand{omega, est.value, true, 0, 0};
            if (cand.score < best_score) {
                best_score = cand.score;
                best_omega = omega;
            }
            result.candidates.push_back(cand);
        }
    }

    result.omega = best_omega;
    return result;
}

/// Full-service entry point: resolves an Auto omega (GSOR only — the other
/// methods have no relaxation parameter) and runs the matching driver.
inline RunReport solve(const ObjectiveProblem& problem, const Vector& x0, SolverConfig config,
                       const OmegaSearchSpec& spec = {}) {
    if (config.method.kind == MethodKind::Direct) {
        return newton_direct(problem, x0, config);
    }
    if (config.auto_omega && config.method.kind == MethodKind::GeneralizedSor) {
        const OmegaTuneResult tuned = tune_omega(problem, x0, config, spec);
        config.method.omega = tuned.omega;
    }
    config.auto_omega = false;
    return newton_iterative(problem, x0, config);
}

} // namespace ngsor

#endif // NGSOR_OMEGA_TUNER_HPP
