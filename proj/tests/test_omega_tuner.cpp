#include <gtest/gtest.h>

#include <cmath>

#include "ngsor/omega_tuner.hpp"

using namespace ngsor;

namespace {

SolverConfig base_config(std::size_t m) {
    SolverConfig c;
    c.bandwidth = m;
    c.method = InnerMethod::sor(1.0);
    return c;
}

} // namespace

TEST(OmegaGrid, DefaultGrid) {
    const std::vector<double> grid = default_omega_grid();
    ASSERT_EQ(grid.size(), 21u);
    EXPECT_DOUBLE_EQ(grid.front(), 1.0);
    EXPECT_DOUBLE_EQ(grid.back(), 2.0);
}

TEST(OmegaSearchSpec, Validation) {
    OmegaSearchSpec spec;
    spec.grid = {};
    EXPECT_THROW(spec.validate(), DimensionError);
    spec.grid = {1.0, 0.5};
    EXPECT_THROW(spec.validate(), DimensionError);
    spec.grid = {1.0, 2.5};
    EXPECT_THROW(spec.validate(), DimensionError);
    spec.grid = {1.0, 1.5, 2.0};
    EXPECT_NO_THROW(spec.validate());
}

TEST(TuneOmega, SingletonGridReturnsGgsEquivalent) {
    const ObjectiveProblem p = liarwhd(12);
    const Vector x0(12, 4.0);
    SolverConfig config = base_config(7);
    OmegaSearchSpec spec;
    spec.grid = {1.0};

    const OmegaTuneResult tuned = tune_omega(p, x0, config, spec);
    EXPECT_DOUBLE_EQ(tuned.omega, 1.0);

    config.method = InnerMethod::sor(tuned.omega);
    const RunReport as_sor = newton_iterative(p, x0, config);
    config.method = InnerMethod::gauss_seidel();
    const RunReport as_ggs = newton_iterative(p, x0, config);
    ASSERT_EQ(as_sor.status, RunStatus::Converged);
    EXPECT_EQ(as_sor.outer_iterations, as_ggs.outer_iterations);
    EXPECT_EQ(as_sor.inner_total, as_ggs.inner_total);
    Vector diff = as_sor.x_final;
    diff -= as_ggs.x_final;
    EXPECT_LE(diff.norm_inf(), 1e-14);
}

TEST(TuneOmega, Deterministic) {
    const ObjectiveProblem p = diag_aup1(10);
    const Vector x0(10, 4.0);
    const SolverConfig config = base_config(5);
    const OmegaTuneResult a = tune_omega(p, x0, config);
    const OmegaTuneResult b = tune_omega(p, x0, config);
    EXPECT_EQ(a.omega, b.omega);
    ASSERT_EQ(a.candidates.size(), b.candidates.size());
    for (std::size_t i = 0; i < a.candidates.size(); ++i)
        EXPECT_EQ(a.candidates[i].inner_total, b.candidates[i].inner_total);
}

TEST(TuneOmega, DominatesEveryGridPoint) {
    const ObjectiveProblem p = liarwhd(10);
    const OmegaTuneResult tuned = tune_omega(p, Vector(10, 4.0), base_config(5));
    std::size_t best = 0;
    bool found = false;
    for (const OmegaCandidate& c : tuned.candidates) {
        if (c.omega == tuned.omega) {
            best = c.inner_total;
            found = true;
        }
    }
    ASSERT_TRUE(found);
    for (const OmegaCandidate& c : tuned.candidates)
        if (c.feasible) {
            EXPECT_LE(best, c.inner_total);
        }
}

TEST(TuneOmega, SpectralStrategyFullBand) {
    // at m = n-1 the iteration matrix is (1-omega) I, so the score is
    // |1-omega| and the grid minimum sits at omega = 1
    const ObjectiveProblem p = liarwhd(6);
    SolverConfig config = base_config(5);
    OmegaSearchSpec spec;
    spec.strategy = OmegaStrategy::SpectralRadiusAtStart;
    const OmegaTuneResult tuned = tune_omega(p, Vector(6, 4.0), config, spec);
    EXPECT_DOUBLE_EQ(tuned.omega, 1.0);
    for (const OmegaCandidate& c : tuned.candidates)
        EXPECT_NEAR(c.score, std::abs(1.0 - c.omega), 1e-10);
}

TEST(TuneOmega, AllCandidatesFailing) {
    const ObjectiveProblem p = liarwhd(10);
    SolverConfig config = base_config(5);
    config.max_inner = 1; // no inner solve can ever report convergence
    EXPECT_THROW(tune_omega(p, Vector(10, 4.0), config), TuningError);
}

TEST(Solve, AutoOmegaResolvesAndRecords) {
    const ObjectiveProblem p = liarwhd(12);
    SolverConfig config = base_config(7);
    config.auto_omega = true;
    const RunReport r = solve(p, Vector(12, 4.0), config);
    ASSERT_EQ(r.status, RunStatus::Converged);
    EXPECT_TRUE(std::isfinite(r.omega_used));
    EXPECT_GE(r.omega_used, 1.0);
    EXPECT_LE(r.omega_used, 2.0);

    // fixed-omega path leaves the requested value untouched
    config.auto_omega = false;
    config.method = InnerMethod::sor(1.25);
    EXPECT_DOUBLE_EQ(solve(p, Vector(12, 4.0), config).omega_used, 1.25);
}

TEST(Solve, DirectIgnoresAutoOmega) {
    const ObjectiveProblem p = liarwhd(6);
    SolverConfig config;
    config.method = InnerMethod::direct();
    config.auto_omega = true;
    const RunReport r = solve(p, Vector(6, 4.0), config);
    EXPECT_EQ(r.status, RunStatus::Converged);
    EXPECT_TRUE(std::isnan(r.omega_used));
}
