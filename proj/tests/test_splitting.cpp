#include <gtest/gtest.h>

#include <random>

#include "ngsor/banded_splitting.hpp"
#include "ngsor/spectral_radius.hpp"

using namespace ngsor;

namespace {

DenseMatrix random_matrix(std::size_t n, std::mt19937& rng, double diag_shift = 0.0) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
        a(i, i) += diag_shift;
    }
    return a;
}

} // namespace

TEST(Split, DiagonalBandwidthExample) {
    const DenseMatrix h = DenseMatrix::from_rows({{2.0, -1.0}, {-1.0, 2.0}});
    const BandedSplitting s = split(h, 0);
    EXPECT_DOUBLE_EQ(s.band(0, 0), 2.0);
    EXPECT_DOUBLE_EQ(s.band(1, 1), 2.0);
    EXPECT_DOUBLE_EQ(s.band(0, 1), 0.0);
    ASSERT_EQ(s.lower().size(), 1u);
    EXPECT_EQ(s.lower()[0].row, 1u);
    EXPECT_EQ(s.lower()[0].col, 0u);
    EXPECT_DOUBLE_EQ(s.lower()[0].value, 1.0); // negated -1
    ASSERT_EQ(s.upper().size(), 1u);
    EXPECT_DOUBLE_EQ(s.upper()[0].value, 1.0);
}

TEST(Split, TridiagonalExample) {
    const DenseMatrix h =
        DenseMatrix::from_rows({{4.0, 1.0, 2.0}, {1.0, 4.0, 1.0}, {2.0, 1.0, 4.0}});
    const BandedSplitting s = split(h, 1);
    EXPECT_DOUBLE_EQ(s.band(0, 1), 1.0);
    EXPECT_DOUBLE_EQ(s.band(2, 1), 1.0);
    ASSERT_EQ(s.lower().size(), 1u);
    EXPECT_EQ(s.lower()[0].row, 2u);
    EXPECT_EQ(s.lower()[0].col, 0u);
    EXPECT_DOUBLE_EQ(s.lower()[0].value, -2.0);
    ASSERT_EQ(s.upper().size(), 1u);
    EXPECT_DOUBLE_EQ(s.upper()[0].value, -2.0);
}

TEST(Split, FullBandwidthCapturesEverything) {
    std::mt19937 rng(7);
    const DenseMatrix h = random_matrix(6, rng);
    const BandedSplitting s = split(h, 5);
    EXPECT_TRUE(s.lower().empty());
    EXPECT_TRUE(s.upper().empty());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(s.band(i, j), h(i, j));
}

TEST(Split, OversizedBandwidthClamps) {
    const DenseMatrix h = DenseMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const BandedSplitting s = split(h, 100);
    EXPECT_EQ(s.bandwidth(), 1u);
    EXPECT_TRUE(s.lower().empty());
    EXPECT_TRUE(s.upper().empty());
}

// reconstruction identity T - E - F = H, exact entry equality
TEST(Split, ReconstructionIdentityExact) {
    std::mt19937 rng(42);
    for (std::size_t n : {1u, 2u, 5u, 13u, 30u}) {
        const DenseMatrix h = random_matrix(n, rng);
        for (std::size_t m = 0; m < n; ++m) {
            const BandedSplitting s = split(h, m);
            const DenseMatrix back = s.band_dense() - s.lower_dense() - s.upper_dense();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    ASSERT_EQ(back(i, j), h(i, j)) << "n=" << n << " m=" << m;
        }
    }
}

// zero patterns: E only where i-j > m, F only where j-i > m
TEST(Split, OutsideBandPatterns) {
    std::mt19937 rng(43);
    const std::size_t n = 12;
    const DenseMatrix h = random_matrix(n, rng);
    for (std::size_t m = 0; m < n; ++m) {
        const BandedSplitting s = split(h, m);
        for (const BandEntry& e : s.lower()) ASSERT_GT(e.row - e.col, m);
        for (const BandEntry& e : s.upper()) ASSERT_GT(e.col - e.row, m);
    }
}

// nnz(E) + nnz(F) nonincreasing as the band widens
TEST(Split, NestingMonotone) {
    std::mt19937 rng(44);
    const std::size_t n = 20;
    const DenseMatrix h = random_matrix(n, rng);
    std::size_t prev = n * n;
    for (std::size_t m = 0; m < n; ++m) {
        const BandedSplitting s = split(h, m);
        const std::size_t nnz = s.lower().size() + s.upper().size();
        EXPECT_LE(nnz, prev);
        prev = nnz;
    }
    EXPECT_EQ(prev, 0u);
}

TEST(FactorLowerSystem, HandExample) {
    // [[2,-1],[-1,2]] at m=0, omega=1: M = [[2,0],[-1,2]]
    const DenseMatrix h = DenseMatrix::from_rows({{2.0, -1.0}, {-1.0, 2.0}});
    const DenseLu fact = factor_lower_system(split(h, 0), 1.0);
    const Vector y = solve_factored(fact, Vector{1.0, 1.0});
    EXPECT_NEAR(y[0], 0.5, 1e-15);
    EXPECT_NEAR(y[1], 0.75, 1e-15);
}

TEST(FactorLowerSystem, FullBandEqualsDirectSolve) {
    std::mt19937 rng(45);
    const std::size_t n = 8;
    const DenseMatrix h = random_matrix(n, rng, 6.0);
    Vector b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<double>(i) - 3.0;

    const DenseLu fact = factor_lower_system(split(h, n - 1), 1.7);
    const Vector via_split = solve_factored(fact, b);
    const Vector direct = dense_solve(h, b);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(via_split[i], direct[i], 1e-12);
}

TEST(FactorLowerSystem, IdentityIsIdentityMap) {
    const DenseLu fact = factor_lower_system(split(DenseMatrix::identity(3), 0), 1.5);
    const Vector b{1.0, -2.0, 3.0};
    const Vector y = solve_factored(fact, b);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(y[i], b[i]);
}

// factor/solve matches a dense solve of the assembled M(omega)
TEST(FactorLowerSystem, AgreesWithDenseSolve) {
    std::mt19937 rng(46);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 49);
        const DenseMatrix h = random_matrix(n, rng, 8.0);
        const std::size_t m = rng() % n;
        const double omega = 0.1 + 1.8 * std::abs(dist(rng));
        const BandedSplitting s = split(h, m);
        Vector b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = dist(rng);

        const Vector y = solve_factored(factor_lower_system(s, omega), b);
        const Vector ref = dense_solve(s.assemble_lower_system(omega), b);
        Vector diff = y;
        diff -= ref;
        EXPECT_LE(diff.norm_inf(), 1e-10 * (1.0 + ref.norm_inf()));
    }
}

TEST(ApplyRhsOperator, OmegaOneIsUpperPart) {
    std::mt19937 rng(47);
    const DenseMatrix h = random_matrix(9, rng);
    const BandedSplitting s = split(h, 2);
    Vector d(9);
    for (std::size_t i = 0; i < 9; ++i) d[i] = 0.5 * static_cast<double>(i) - 2.0;
    const Vector a = apply_rhs_operator(s, 1.0, d);
    const Vector f = s.apply_upper(d);
    for (std::size_t i = 0; i < 9; ++i) EXPECT_DOUBLE_EQ(a[i], f[i]);
}

TEST(ApplyRhsOperator, ZeroVector) {
    const DenseMatrix h = DenseMatrix::from_rows({{2.0, -1.0}, {-1.0, 2.0}});
    const Vector out = apply_rhs_operator(split(h, 0), 1.3, Vector(2, 0.0));
    EXPECT_DOUBLE_EQ(out[0], 0.0);
    EXPECT_DOUBLE_EQ(out[1], 0.0);
}

TEST(ApplyRhsOperator, HandArithmetic) {
    // omega=1.5, d=(1,1): 1.5*F*d + (-0.5)*T*d = (1.5, 0) + (-1, -1) = (0.5, -1)
    const DenseMatrix h = DenseMatrix::from_rows({{2.0, -1.0}, {-1.0, 2.0}});
    const Vector out = apply_rhs_operator(split(h, 0), 1.5, Vector{1.0, 1.0});
    EXPECT_NEAR(out[0], 0.5, 1e-15);
    EXPECT_NEAR(out[1], -1.0, 1e-15);
}

// band/coordinate application vs explicit dense assembly
TEST(ApplyRhsOperator, MatchesDenseAssembly) {
    std::mt19937 rng(48);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 19);
        const DenseMatrix h = random_matrix(n, rng);
        const std::size_t m = rng() % n;
        const double omega = 0.1 + 1.8 * std::abs(dist(rng));
        const BandedSplitting s = split(h, m);
        Vector d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = dist(rng);

        const Vector fast = apply_rhs_operator(s, omega, d);

        DenseMatrix op(n);
        const DenseMatrix t = s.band_dense();
        const DenseMatrix f = s.upper_dense();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                op(i, j) = omega * f(i, j) + (1.0 - omega) * t(i, j);
        const Vector ref = op * d;

        Vector diff = fast;
        diff -= ref;
        EXPECT_LE(diff.norm_inf(), 1e-12 * (1.0 + ref.norm_inf()));
    }
}

TEST(SpectralRadius, JacobiTwoByTwo) {
    // eigenvalues of diag^{-1} offdiag are +-1/2
    const DenseMatrix h = DenseMatrix::from_rows({{2.0, -1.0}, {-1.0, 2.0}});
    const SpectralRadiusEstimate est =
        spectral_radius_estimate(split(h, 0), 1.0, MethodKind::GeneralizedJacobi);
    EXPECT_TRUE(est.converged);
    EXPECT_NEAR(est.value, 0.5, 1e-10);
}

TEST(SpectralRadius, FullBandGaussSeidelIsZero) {
    const DenseMatrix h =
        DenseMatrix::from_rows({{4.0, 1.0, 2.0}, {1.0, 4.0, 1.0}, {2.0, 1.0, 4.0}});
    const SpectralRadiusEstimate est =
        spectral_radius_estimate(split(h, 2), 1.0, MethodKind::GeneralizedSor);
    EXPECT_TRUE(est.converged);
    EXPECT_DOUBLE_EQ(est.value, 0.0);
}

TEST(SpectralRadius, FullBandSorIsOneMinusOmega) {
    // at m = n-1 the iteration matrix collapses to (1-omega) I
    const DenseMatrix h =
        DenseMatrix::from_rows({{4.0, 1.0, 2.0}, {1.0, 4.0, 1.0}, {2.0, 1.0, 4.0}});
    for (double omega : {0.5, 1.3, 1.8}) {
        const SpectralRadiusEstimate est =
            spectral_radius_estimate(split(h, 2), omega, MethodKind::GeneralizedSor);
        EXPECT_TRUE(est.converged);
        EXPECT_NEAR(est.value, std::abs(1.0 - omega), 1e-12);
    }
}

TEST(SpectralRadius, ReportsNonConvergenceAtCap) {
    // Jacobi iteration matrix [[0,1],[-4,0]] has eigenvalues +-2i; the
    // norm quotient cycles between two values and never settles
    const DenseMatrix h = DenseMatrix::from_rows({{1.0, -1.0}, {4.0, 1.0}});
    const SpectralRadiusEstimate est =
        spectral_radius_estimate(split(h, 0), 1.0, MethodKind::GeneralizedJacobi, 1u, 1e-8, 50);
    EXPECT_FALSE(est.converged);
    EXPECT_EQ(est.iterations, 50u);
    EXPECT_GT(est.value, 0.0);
}

TEST(SpectralRadius, DeterministicForFixedSeed) {
    std::mt19937 rng(49);
    const DenseMatrix h = random_matrix(10, rng, 4.0);
    const BandedSplitting s = split(h, 1);
    const auto a = spectral_radius_estimate(s, 1.4, MethodKind::GeneralizedSor, 777u);
    const auto b = spectral_radius_estimate(s, 1.4, MethodKind::GeneralizedSor, 777u);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.iterations, b.iterations);
}
