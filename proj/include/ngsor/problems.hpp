#ifndef NGSOR_PROBLEMS_HPP
#define NGSOR_PROBLEMS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ngsor/dense.hpp"
#include "ngsor/errors.hpp"

namespace ngsor {

/// An objective with analytic derivatives and known-optimum metadata.
struct ObjectiveProblem {
    std::string name;
    std::size_t n = 0;
    std::function<double(const Vector&)> eval;
    std::function<Vector(const Vector&)> gradient;
    std::function<DenseMatrix(const Vector&)> hessian;
    Vector known_optimum = Vector(1);
    double known_min_value = 0.0;
};

/// LIARWHD:  f(x) = sum_i 4 (x_i^2 - x_1)^2 + sum_i (x_i - 1)^2
///
/// Minimum f = 0 at x = (1, ..., 1). The Hessian is an arrowhead matrix:
/// dense first row/column plus the diagonal, nothing else.
inline ObjectiveProblem liarwhd(std::size_t n) {
    if (n < 1) throw DimensionError("liarwhd: n must be >= 1");
    ObjectiveProblem p;
    p.name = "liarwhd";
    p.n = n;
    p.eval = [](const Vector& x) {
        double f = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double q = x[i] * x[i] - x[0];
            const double r = x[i] - 1.0;
            f += 4.0 * q * q + r * r;
        }
        return f;
    };
    p.gradient = [](const Vector& x) {
        const std::size_t n = x.size();
        Vector g(n);
        double coupling = 0.0; // sum_i (x_i^2 - x_1)
        for (std::size_t i = 0; i < n; ++i) coupling += x[i] * x[i] - x[0];
        g[0] = 16.0 * x[0] * (x[0] * x[0] - x[0]) - 8.0 * coupling + 2.0 * (x[0] - 1.0);
        for (std::size_t j = 1; j < n; ++j)
            g[j] = 16.0 * x[j] * (x[j] * x[j] - x[0]) + 2.0 * (x[j] - 1.0);
        return g;
    };
    p.hessian = [](const Vector& x) {
        const std::size_t n = x.size();
        DenseMatrix h(n);
        h(0, 0) = 48.0 * x[0] * x[0] - 48.0 * x[0] + 8.0 * static_cast<double>(n) + 2.0;
        for (std::size_t j = 1; j < n; ++j) {
            h(j, j) = 48.0 * x[j] * x[j] - 16.0 * x[0] + 2.0;
            h(0, j) = h(j, 0) = -16.0 * x[j];
        }
        return h;
    };
    p.known_optimum = Vector(n, 1.0);
    p.known_min_value = 0.0;
    return p;
}

/// DIAG-AUP1:  f(x) = sum_i 4 (x_i^2 - x_1)^2 + sum_i (x_i^2 - 1)^2
///
/// Same arrowhead coupling through x_1; minimum f = 0 at x = (1, ..., 1).
inline ObjectiveProblem diag_aup1(std::size_t n) {
    if (n < 1) throw DimensionError("diag_aup1: n must be >= 1");
    ObjectiveProblem p;
    p.name = "diag-aup1";
    p.n = n;
    p.eval = [](const Vector& x) {
        double f = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double q = x[i] * x[i] - x[0];
            const double r = x[i] * x[i] - 1.0;
            f += 4.0 * q * q + r * r;
        }
        return f;
    };
    p.gradient = [](const Vector& x) {
        const std::size_t n = x.size();
        Vector g(n);
        double coupling = 0.0;
        for (std::size_t i = 0; i < n; ++i) coupling += x[i] * x[i] - x[0];
        g[0] = 16.0 * x[0] * (x[0] * x[0] - x[0]) - 8.0 * coupling +
               4.0 * x[0] * (x[0] * x[0] - 1.0);
        for (std::size_t j = 1; j < n; ++j)
            g[j] = 16.0 * x[j] * (x[j] * x[j] - x[0]) + 4.0 * x[j] * (x[j] * x[j] - 1.0);
        return g;
    };
    p.hessian = [](const Vector& x) {
        const std::size_t n = x.size();
        DenseMatrix h(n);
        h(0, 0) = 60.0 * x[0] * x[0] - 48.0 * x[0] + 8.0 * static_cast<double>(n) - 4.0;
        for (std::size_t j = 1; j < n; ++j) {
            h(j, j) = 60.0 * x[j] * x[j] - 16.0 * x[0] - 4.0;
            h(0, j) = h(j, 0) = -16.0 * x[j];
        }
        return h;
    };
    p.known_optimum = Vector(n, 1.0);
    p.known_min_value = 0.0;
    return p;
}

/// Central-difference gradient; the validation oracle for analytic
/// gradients. h <= 0 selects the default step 1e-6 * (1 + ||x||_inf).
inline Vector fd_gradient(const ObjectiveProblem& problem, const Vector& x, double h = 0.0) {
    if (h <= 0.0) h = 1e-6 * (1.0 + x.norm_inf());
    Vector g(x.size());
    Vector probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        probe[i] = xi + h;
        const double fp = problem.eval(probe);
        probe[i] = xi - h;
        const double fm = problem.eval(probe);
        probe[i] = xi;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

/// Central differences on the analytic gradient, symmetrized as
/// (A + A^T) / 2.
inline DenseMatrix fd_hessian(const ObjectiveProblem& problem, const Vector& x, double h = 0.0) {
    if (h <= 0.0) h = 1e-6 * (1.0 + x.norm_inf());
    const std::size_t n = x.size();
    DenseMatrix a(n);
    Vector probe = x;
    for (std::size_t j = 0; j < n; ++j) {
        const double xj = x[j];
        probe[j] = xj + h;
        const Vector gp = problem.gradient(probe);
        probe[j] = xj - h;
        const Vector gm = problem.gradient(probe);
        probe[j] = xj;
        for (std::size_t i = 0; i < n; ++i) a(i, j) = (gp[i] - gm[i]) / (2.0 * h);
    }
    DenseMatrix sym(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sym(i, j) = 0.5 * (a(i, j) + a(j, i));
    return sym;
}

using ProblemFactory = std::function<ObjectiveProblem(std::size_t)>;

/// Name-keyed factory registry; "liarwhd" and "diag-aup1" are built in.
/// Register additional problems before launching concurrent runs.
inline std::map<std::string, ProblemFactory>& problem_registry() {
    static std::map<std::string, ProblemFactory> registry{
        {"liarwhd", [](std::size_t n) { return liarwhd(n); }},
        {"diag-aup1", [](std::size_t n) { return diag_aup1(n); }},
    };
    return registry;
}

inline void register_problem(const std::string& name, ProblemFactory factory) {
    problem_registry()[name] = std::move(factory);
}

inline std::vector<std::string> problem_names() {
    std::vector<std::string> names;
    for (const auto& [name, factory] : problem_registry()) names.push_back(name);
    return names;
}

inline ObjectiveProblem make_problem(const std::string& name, std::size_t n) {
    const auto& registry = problem_registry();
    const auto it = registry.find(name);
    if (it == registry.end())
        throw DimensionError("make_problem: unknown problem '" + name + "'");
    return it->second(n);
}

} // namespace ngsor

#endif // NGSOR_PROBLEMS_HPP
