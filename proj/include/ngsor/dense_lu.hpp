#ifndef NGSOR_DENSE_LU_HPP
#define NGSOR_DENSE_LU_HPP

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "ngsor/dense.hpp"
#include "ngsor/errors.hpp"

namespace ngsor {

/// LU factorization with partial pivoting, factored once and reused across
/// right-hand sides. A pivot below 1e-14 * ||A||_inf raises
/// SingularMatrixError.
class DenseLu {
public:
    explicit DenseLu(const DenseMatrix& a)
        : n_(a.size()), lu_(n_ * n_), perm_(n_) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) lu_[i * n_ + j] = a(i, j);
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});

        const double pivot_floor = 1e-14 * a.norm_inf();
        for (std::size_t k = 0; k < n_; ++k) {
            std::size_t p = k;
            double best = std::abs(lu_[k * n_ + k]);
            for (std::size_t i = k + 1; i < n_; ++i) {
                const double cand = std::abs(lu_[i * n_ + k]);
                if (cand > best) { best = cand; p = i; }
            }
            if (best <= pivot_floor)
                throw SingularMatrixError("DenseLu: pivot below threshold at column " + std::to_string(k));
            if (p != k) {
                for (std::size_t j = 0; j < n_; ++j)
                    std::swap(lu_[k * n_ + j], lu_[p * n_ + j]);
                std::swap(perm_[k], perm_[p]);
            }
            const double inv_piv = 1.0 / lu_[k * n_ + k];
            for (std::size_t i = k + 1; i < n_; ++i) {
                const double mult = lu_[i * n_ + k] * inv_piv;
                lu_[i * n_ + k] = mult;
                for (std::size_t j = k + 1; j < n_; ++j)
                    lu_[i * n_ + j] -= mult * lu_[k * n_ + j];
            }
        }
    }

    std::size_t size() const { return n_; }

    Vector solve(const Vector& b) const {
        if (b.size() != n_) throw DimensionError("DenseLu: rhs size mismatch");
        Vector y(n_);
        // forward substitution on the permuted rhs
        for (std::size_t i = 0; i < n_; ++i) {
            double s = b[perm_[i]];
            for (std::size_t j = 0; j < i; ++j) s -= lu_[i * n_ + j] * y[j];
            y[i] = s;
        }
        // back substitution
        for (std::size_t ii = n_; ii-- > 0;) {
            double s = y[ii];
            for (std::size_t j = ii + 1; j < n_; ++j) s -= lu_[ii * n_ + j] * y[j];
            y[ii] = s / lu_[ii * n_ + ii];
        }
        return y;
    }

private:
    std::size_t n_;
    std::vector<double> lu_;
    std::vector<std::size_t> perm_;
};

/// One-shot dense solve of a x = b.
inline Vector dense_solve(const DenseMatrix& a, const Vector& b) {
    return DenseLu(a).solve(b);
}

} // namespace ngsor

#endif // NGSOR_DENSE_LU_HPP
