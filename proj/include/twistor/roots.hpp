#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "twistor/cpoly.hpp"

namespace twistor {

namespace detail {

/// Parlett-Reinsch balancing with radix-2 scaling: similarity transform
/// D^-1 M D equalizing row/column 1-norms, improving eigenvalue accuracy
/// for badly scaled companion matrices.
inline void balance_in_place(Eigen::MatrixXcd& m) {
    const Eigen::Index n = m.rows();
    bool converged = false;
    while (!converged) {
        converged = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(m(j, i));
                r += std::abs(m(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double f = 1.0;
            const double s = c + r;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c >= r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if (c + r < 0.95 * s) {
                converged = false;
                m.col(i) *= f;
                m.row(i) /= f;
            }
        }
    }
}

}  // namespace detail

/// All complex roots of the polynomial with the given coefficients
/// (index = power), as eigenvalues of the balanced companion matrix.
/// Leading coefficients below tol relative to the largest are dropped;
/// (near-)constant polynomials have no roots.
inline std::vector<std::complex<double>> polynomial_roots(
    CPoly coeffs, double tol = kDefaultTol) {
    coeffs = cpoly_trim(coeffs, tol);
    const auto n = static_cast<Eigen::Index>(coeffs.size()) - 1;
    if (n < 1) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) companion(i + 1, i) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        companion(i, n - 1) =
            -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
    }
    detail::balance_in_place(companion);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    }
    return roots;
}

}  // namespace twistor
