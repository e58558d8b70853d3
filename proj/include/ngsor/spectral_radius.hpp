#ifndef NGSOR_SPECTRAL_RADIUS_HPP
#define NGSOR_SPECTRAL_RADIUS_HPP

#include <cmath>
#include <cstddef>
#include <random>

#include "ngsor/banded_splitting.hpp"
#include "ngsor/stationary.hpp"

namespace ngsor {

struct SpectralRadiusEstimate {
    double value = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
};

/// Power-iteration estimate of rho(M^{-1} N) for the chosen splitting
/// method, via the norm-growth quotient ||A v_k|| of the normalized
/// iterate. Deterministic for a fixed seed. When the quotient has not
/// settled within max_iter applications the best (last) estimate is
/// returned with converged = false.
inline SpectralRadiusEstimate spectral_radius_estimate(const BandedSplitting& s, double omega,
                                                       MethodKind kind, unsigned seed = 12345u,
                                                       double rel_tol = 1e-8,
                                                       std::size_t max_iter = 5000) {
    const SplittingOperator op(s, kind, omega);

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Vector v(s.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = dist(rng);
    const double v0 = v.norm2();
    if (v0 == 0.0) v[0] = 1.0; else v *= 1.0 / v0;

    double estimate = 0.0;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        Vector av = op.apply_iteration_matrix(v);
        const double growth = av.norm2();
        if (growth == 0.0) return {0.0, true, it}; // N annihilated v; rho = 0
        const double prev = estimate;
        estimate = growth;
        if (it > 1 && std::abs(estimate - prev) <= rel_tol * std::abs(estimate))
            return {estimate, true, it};
        av *= 1.0 / growth;
        v = std::move(av);
    }
    return {estimate, false, max_iter};
}

} // namespace ngsor

#endif // NGSOR_SPECTRAL_RADIUS_HPP
