#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ncg/matrix.hpp"

namespace ncg {

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
/// Deterministic sweep order; iterates until the off-diagonal Frobenius norm
/// falls below tol. Returned sorted ascending; by Wielandt-Hoffman the
/// eigenvalue error is bounded by the final off-diagonal norm.
struct JacobiResult {
    std::vector<double> eigenvalues;
    double offdiag_norm;
    int sweeps;
};

inline JacobiResult jacobi_eigenvalues(std::vector<double> a, int n, double tol = 1e-10) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
    auto offnorm = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += at(i, j) * at(i, j);
        return std::sqrt(s);
    };
    int sweeps = 0;
    const int max_sweeps = 100;
    double off = offnorm();
    while (off > tol && sweeps < max_sweeps) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double app = at(p, p), aqq = at(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
        ++sweeps;
        off = offnorm();
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return {std::move(ev), off, sweeps};
}

/// Numeric eigenvalue oracle for exact integer matrices; rejects non-symmetric input.
inline JacobiResult numeric_eigenvalues(const IntMatrix& m, double tol = 1e-10) {
    if (!m.is_symmetric()) throw std::invalid_argument("numeric_eigenvalues: matrix not symmetric");
    const int n = m.dim();
    std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = m.at(i, j).get_d();
    return jacobi_eigenvalues(std::move(a), n, tol);
}

}  // namespace ncg
