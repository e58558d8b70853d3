#ifndef NGSOR_STATIONARY_HPP
#define NGSOR_STATIONARY_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "ngsor/banded_splitting.hpp"
#include "ngsor/dense.hpp"
#include "ngsor/dense_lu.hpp"
#include "ngsor/errors.hpp"

namespace ngsor {

enum class MethodKind {
    GeneralizedJacobi,
    GeneralizedGaussSeidel,
    GeneralizedSor,
    Direct,
};

/// Inner-solver selection. omega is meaningful for GeneralizedSor only;
/// values in (0, 2] are accepted, (1, 2] is the usual operating range.
struct InnerMethod {
    MethodKind kind = MethodKind::GeneralizedSor;
    double omega = 1.0;

    static InnerMethod direct() { return {MethodKind::Direct, 1.0}; }
    static InnerMethod jacobi() { return {MethodKind::GeneralizedJacobi, 1.0}; }
    static InnerMethod gauss_seidel() { return {MethodKind::GeneralizedGaussSeidel, 1.0}; }
    static InnerMethod sor(double omega) { return {MethodKind::GeneralizedSor, omega}; }
};

inline const char* method_name(MethodKind kind) {
    switch (kind) {
        case MethodKind::GeneralizedJacobi: return "gj";
        case MethodKind::GeneralizedGaussSeidel: return "ggs";
        case MethodKind::GeneralizedSor: return "gsor";
        case MethodKind::Direct: return "direct";
    }
    return "?";
}

enum class NormKind { L2, LInf };

inline double vector_norm(const Vector& v, NormKind kind) {
    return kind == NormKind::L2 ? v.norm2() : v.norm_inf();
}

/// One splitting iteration d' = M^{-1}(N d + w fhat) with M factored once:
///   GJ:   M = T,            N = E + F,                  w = 1
///   GGS:  M = T - E,        N = F,                      w = 1
///   GSOR: M = T - omega E,  N = omega F + (1-omega) T,  w = omega
class SplittingOperator {
public:
    SplittingOperator(const BandedSplitting& s, MethodKind kind, double omega = 1.0)
        : split_(&s), kind_(kind), omega_(omega),
          factor_(factor_lower_system(s, m_weight(kind, omega))) {
        if (kind == MethodKind::Direct)
            throw DimensionError("SplittingOperator: Direct is not a splitting iteration");
        if (kind == MethodKind::GeneralizedSor && !(omega > 0.0 && omega <= 2.0))
            throw DimensionError("SplittingOperator: omega must lie in (0, 2]");
    }

    Vector apply_n(const Vector& d) const {
        switch (kind_) {
            case MethodKind::GeneralizedJacobi: {
                Vector out = split_->apply_lower(d);
                out += split_->apply_upper(d);
                return out;
            }
            case MethodKind::GeneralizedGaussSeidel:
                return split_->apply_upper(d);
            default:
                return apply_rhs_operator(*split_, omega_, d);
        }
    }

    /// d ↦ M^{-1} N d, the iteration matrix applied to d.
    Vector apply_iteration_matrix(const Vector& d) const {
        return factor_.solve(apply_n(d));
    }

    Vector step(const Vector& d, const Vector& fhat) const {
        Vector rhs = apply_n(d);
        if (rhs_weight() == 1.0) {
            rhs += fhat;
        } else {
            Vector scaled = fhat;
            scaled *= rhs_weight();
            rhs += scaled;
        }
        return factor_.solve(rhs);
    }

    double rhs_weight() const {
        return kind_ == MethodKind::GeneralizedSor ? omega_ : 1.0;
    }

private:
    static double m_weight(MethodKind kind, double omega) {
        switch (kind) {
            case MethodKind::GeneralizedJacobi: return 0.0;   // M = T
            case MethodKind::GeneralizedGaussSeidel: return 1.0;
            default: return omega;
        }
    }

    const BandedSplitting* split_;
    MethodKind kind_;
    double omega_;
    DenseLu factor_;
};

// One-shot step kernels; each factors its own M. Loops should hold a
// SplittingOperator instead.

inline Vector gj_step(const BandedSplitting& s, const Vector& d, const Vector& fhat) {
    return SplittingOperator(s, MethodKind::GeneralizedJacobi).step(d, fhat);
}

inline Vector ggs_step(const BandedSplitting& s, const Vector& d, const Vector& fhat) {
    return SplittingOperator(s, MethodKind::GeneralizedGaussSeidel).step(d, fhat);
}

inline Vector gsor_step(const BandedSplitting& s, double omega, const Vector& d,
                        const Vector& fhat) {
    return SplittingOperator(s, MethodKind::GeneralizedSor, omega).step(d, fhat);
}

struct InnerResult {
    Vector d;
    std::size_t iterations = 0;
    bool converged = false;
    double final_step_norm = 0.0;
};

/// Solves H d = fhat for the descent direction. Splitting methods start
/// from d = 0 (or warm_start when given), factor M once, and iterate until
/// the step difference drops below eps2; every executed update counts,
/// including the one that detects convergence. Direct solves by dense LU
/// and reports a single iteration.
///
/// Throws DivergenceError when an iterate goes non-finite or the step
/// difference exceeds 1e12, and SingularMatrixError from the factorization.
inline InnerResult inner_solve(const DenseMatrix& h, const Vector& fhat, InnerMethod method,
                               std::size_t m, double eps2, std::size_t max_inner,
                               NormKind step_norm = NormKind::L2,
                               const Vector* warm_start = nullptr) {
    if (h.size() != fhat.size()) throw DimensionError("inner_solve: dimension mismatch");
    if (!(eps2 > 0.0)) throw DimensionError("inner_solve: eps2 must be positive");
    if (max_inner < 1) throw DimensionError("inner_solve: max_inner must be >= 1");

    if (method.kind == MethodKind::Direct) {
        return InnerResult{DenseLu(h).solve(fhat), 1, true, 0.0};
    }

    const BandedSplitting s = split(h, m);
    const SplittingOperator op(s, method.kind, method.omega);

    Vector d = warm_start ? *warm_start : Vector(h.size(), 0.0);
    if (warm_start && warm_start->size() != h.size())
        throw DimensionError("inner_solve: warm start size mismatch");

    std::size_t iterations = 0;
    double diff_norm = 0.0;
    while (iterations < max_inner) {
        Vector next = op.step(d, fhat);
        ++iterations;
        Vector diff = next;
        diff -= d;
        diff_norm = vector_norm(diff, step_norm);
        if (!next.all_finite() || diff_norm > 1e12)
            throw DivergenceError("inner_solve: " + std::string(method_name(method.kind)) +
                                  " iteration diverged after " + std::to_string(iterations) +
                                  " steps");
        d = std::move(next);
        if (diff_norm < eps2)
            return InnerResult{std::move(d), iterations, true, diff_norm};
    }
    return InnerResult{std::move(d), iterations, false, diff_norm};
}

} // namespace ngsor

#endif // NGSOR_STATIONARY_HPP
