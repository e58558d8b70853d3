#ifndef NGSOR_ERRORS_HPP
#define NGSOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ngsor {

/// Mismatched or invalid dimensions (sizes, bandwidths, index ranges).
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A factorization pivot fell below the singularity threshold.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// An iteration produced non-finite values or left the trust horizon.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// No relaxation-parameter candidate produced a usable run.
class TuningError : public std::runtime_error {
public:
    explicit TuningError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ngsor

#endif // NGSOR_ERRORS_HPP
