#ifndef NGSOR_DENSE_HPP
#define NGSOR_DENSE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ngsor/errors.hpp"

namespace ngsor {

/// Dense real vector. Validating constructors reject empty or non-finite
/// data; element writes through operator[] are unchecked so solver kernels
/// can detect divergence themselves.
class Vector {
public:
    explicit Vector(std::size_t n, double fill = 0.0) : data_(n, fill) {
        if (n == 0) throw DimensionError("Vector: size must be >= 1");
        if (!std::isfinite(fill)) throw DimensionError("Vector: non-finite fill value");
    }

    Vector(std::initializer_list<double> init) : data_(init) { validate(); }

    static Vector from(std::vector<double> values) {
        Vector v{std::move(values), unchecked{}};
        v.validate();
        return v;
    }

    std::size_t size() const { return data_.size(); }

    double operator[](std::size_t i) const { return data_[i]; }
    double& operator[](std::size_t i) { return data_[i]; }

    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }

    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    double norm2() const {
        double s = 0.0;
        for (double x : data_) s += x * x;
        return std::sqrt(s);
    }

    double norm_inf() const {
        double m = 0.0;
        for (double x : data_) m = std::max(m, std::abs(x));
        return m;
    }

    bool all_finite() const {
        return std::all_of(data_.begin(), data_.end(),
                           [](double x) { return std::isfinite(x); });
    }

    Vector& operator+=(const Vector& rhs) {
        require_same_size(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
        return *this;
    }

    Vector& operator-=(const Vector& rhs) {
        require_same_size(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
        return *this;
    }

    Vector& operator*=(double a) {
        for (double& x : data_) x *= a;
        return *this;
    }

    friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
    friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
    friend Vector operator*(double a, Vector v) { return v *= a; }

    friend Vector operator-(Vector v) {
        for (double& x : v.data_) x = -x;
        return v;
    }

private:
    struct unchecked {};
    Vector(std::vector<double> values, unchecked) : data_(std::move(values)) {}

    void validate() const {
        if (data_.empty()) throw DimensionError("Vector: size must be >= 1");
        if (!all_finite()) throw DimensionError("Vector: non-finite entry");
    }

    void require_same_size(const Vector& other) const {
        if (other.size() != size()) throw DimensionError("Vector: size mismatch");
    }

    std::vector<double> data_;
};

inline double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Square dense matrix, row-major.
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {
        if (n == 0) throw DimensionError("DenseMatrix: size must be >= 1");
        if (!std::isfinite(fill)) throw DimensionError("DenseMatrix: non-finite fill value");
    }

    /// Builds from row lists; rejects non-square or non-finite input.
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        const std::size_t n = rows.size();
        DenseMatrix a(n);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != n) throw DimensionError("DenseMatrix: rows must form a square matrix");
            std::size_t j = 0;
            for (double v : row) {
                if (!std::isfinite(v)) throw DimensionError("DenseMatrix: non-finite entry");
                a(i, j++) = v;
            }
            ++i;
        }
        return a;
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix a(n);
        for (std::size_t i = 0; i < n; ++i) a(i, i) = 1.0;
        return a;
    }

    std::size_t size() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    Vector operator*(const Vector& v) const {
        if (v.size() != n_) throw DimensionError("DenseMatrix: matvec size mismatch");
        Vector out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n_; ++j) s += data_[i * n_ + j] * v[j];
            out[i] = s;
        }
        return out;
    }

    /// Max absolute row sum.
    double norm_inf() const {
        double m = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n_; ++j) s += std::abs(data_[i * n_ + j]);
            m = std::max(m, s);
        }
        return m;
    }

    friend DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) {
        if (lhs.n_ != rhs.n_) throw DimensionError("DenseMatrix: size mismatch");
        for (std::size_t k = 0; k < lhs.data_.size(); ++k) lhs.data_[k] -= rhs.data_[k];
        return lhs;
    }

private:
    std::size_t n_;
    std::vector<double> data_;
};

} // namespace ngsor

#endif // NGSOR_DENSE_HPP
