#ifndef NGSOR_BANDED_SPLITTING_HPP
#define NGSOR_BANDED_SPLITTING_HPP

#include <cstddef>
#include <cstdlib>
#include <vector>

#include "ngsor/dense.hpp"
#include "ngsor/dense_lu.hpp"
#include "ngsor/errors.hpp"

namespace ngsor {

struct BandEntry {
    std::size_t row;
    std::size_t col;
    double value;
};

/// Three-way splitting H = T - E - F of a square matrix at bandwidth m:
/// T keeps the 2m+1 central diagonals of H, while E (strictly below the
/// band) and F (strictly above it) hold the *negated* out-of-band entries,
/// so the reconstruction identity is exact entrywise.
///
/// T is stored diagonal-wise; E and F as coordinate lists, which stay tiny
/// when m is close to n-1 (the regime the generalized methods target).
class BandedSplitting {
public:
    BandedSplitting(const DenseMatrix& h, std::size_t m)
        : n_(h.size()), m_(m < n_ ? m : n_ - 1), band_((2 * m_ + 1) * n_, 0.0) {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                const double v = h(i, j);
                if (in_band(i, j)) {
                    band_[band_index(i, j)] = v;
                } else if (v != 0.0) {
                    if (i > j) lower_.push_back({i, j, -v});
                    else upper_.push_back({i, j, -v});
                }
            }
        }
    }

    std::size_t size() const { return n_; }
    std::size_t bandwidth() const { return m_; }

    /// Entry of T; zero outside the band.
    double band(std::size_t i, std::size_t j) const {
        return in_band(i, j) ? band_[band_index(i, j)] : 0.0;
    }

    const std::vector<BandEntry>& lower() const { return lower_; }
    const std::vector<BandEntry>& upper() const { return upper_; }

    /// T * v, touching only the 2m+1 diagonals.
    Vector apply_band(const Vector& v) const {
        require_size(v);
        Vector out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t jlo = i >= m_ ? i - m_ : 0;
            const std::size_t jhi = std::min(i + m_, n_ - 1);
            double s = 0.0;
            for (std::size_t j = jlo; j <= jhi; ++j) s += band_[band_index(i, j)] * v[j];
            out[i] = s;
        }
        return out;
    }

    /// E * v.
    Vector apply_lower(const Vector& v) const { return apply_coords(lower_, v); }

    /// F * v.
    Vector apply_upper(const Vector& v) const { return apply_coords(upper_, v); }

    DenseMatrix band_dense() const {
        DenseMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t jlo = i >= m_ ? i - m_ : 0;
            const std::size_t jhi = std::min(i + m_, n_ - 1);
            for (std::size_t j = jlo; j <= jhi; ++j) t(i, j) = band_[band_index(i, j)];
        }
        return t;
    }

    DenseMatrix lower_dense() const { return coords_dense(lower_); }
    DenseMatrix upper_dense() const { return coords_dense(upper_); }

    /// T - omega * E assembled dense, ready for factoring. Zero above the
    /// m-th superdiagonal by construction.
    DenseMatrix assemble_lower_system(double omega) const {
        DenseMatrix mmat = band_dense();
        for (const BandEntry& e : lower_) mmat(e.row, e.col) -= omega * e.value;
        return mmat;
    }

private:
    bool in_band(std::size_t i, std::size_t j) const {
        const std::size_t d = i > j ? i - j : j - i;
        return d <= m_;
    }

    // diagonal-wise layout: entry (i, j) with offset d = j - i in [-m, m]
    std::size_t band_index(std::size_t i, std::size_t j) const {
        const std::size_t diag = j + m_ - i; // (j - i) + m, nonnegative inside the band
        return diag * n_ + i;
    }

    Vector apply_coords(const std::vector<BandEntry>& coords, const Vector& v) const {
        require_size(v);
        Vector out(n_);
        for (const BandEntry& e : coords) out[e.row] += e.value * v[e.col];
        return out;
    }

    DenseMatrix coords_dense(const std::vector<BandEntry>& coords) const {
        DenseMatrix a(n_);
        for (const BandEntry& e : coords) a(e.row, e.col) = e.value;
        return a;
    }

    void require_size(const Vector& v) const {
        if (v.size() != n_) throw DimensionError("BandedSplitting: vector size mismatch");
    }

    std::size_t n_;
    std::size_t m_;
    std::vector<double> band_;
    std::vector<BandEntry> lower_;
    std::vector<BandEntry> upper_;
};

/// Splits h at bandwidth m. Bandwidths >= n-1 clamp to the whole-matrix
/// band (E = F = 0), the exact-solve limit.
inline BandedSplitting split(const DenseMatrix& h, std::size_t m) {
    return BandedSplitting(h, m);
}

/// Factors M(omega) = T - omega * E once for reuse across right-hand sides.
inline DenseLu factor_lower_system(const BandedSplitting& s, double omega) {
    return DenseLu(s.assemble_lower_system(omega));
}

inline Vector solve_factored(const DenseLu& factor, const Vector& b) {
    return factor.solve(b);
}

/// (omega * F + (1 - omega) * T) * d without forming the dense product.
inline Vector apply_rhs_operator(const BandedSplitting& s, double omega, const Vector& d) {
    Vector out = s.apply_upper(d);
    out *= omega;
    Vector banded = s.apply_band(d);
    banded *= (1.0 - omega);
    out += banded;
    return out;
}

} // namespace ngsor

#endif // NGSOR_BANDED_SPLITTING_HPP
