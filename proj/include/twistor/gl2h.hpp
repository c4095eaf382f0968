#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "twistor/quaternion.hpp"

namespace twistor {

/// Element [alpha, beta; gamma, delta] of Mat_2(H), acting on graph
/// matrices by fractional-linear maps. Invertibility is decided on the
/// complex realization rho_mat.
struct GL2HElement {
    Quaternion alpha;
    Quaternion beta;
    Quaternion gamma;
    Quaternion delta;

    static GL2HElement identity() {
        return {Quaternion::one(), {}, {}, Quaternion::one()};
    }
};

/// Quaternionic 2x2 matrix product.
inline GL2HElement compose(const GL2HElement& s, const GL2HElement& t) {
    return {s.alpha * t.alpha + s.beta * t.gamma,
            s.alpha * t.beta + s.beta * t.delta,
            s.gamma * t.alpha + s.delta * t.gamma,
            s.gamma * t.beta + s.delta * t.delta};
}

inline GL2HElement scale(double r, const GL2HElement& t) {
    return {r * t.alpha, r * t.beta, r * t.gamma, r * t.delta};
}

/// Entry-wise rho: the block matrix [rho(alpha), rho(beta); rho(gamma),
/// rho(delta)] in Mat_4(C). Multiplicative: rho_mat(ST) = rho_mat(S) rho_mat(T).
inline Mat4c rho_mat(const GL2HElement& t) {
    Mat4c m;
    m.block<2, 2>(0, 0) = rho(t.alpha);
    m.block<2, 2>(0, 2) = rho(t.beta);
    m.block<2, 2>(2, 0) = rho(t.gamma);
    m.block<2, 2>(2, 2) = rho(t.delta);
    return m;
}

/// Scale-free invertibility test: smallest singular value of the complex
/// realization must exceed tol times the largest.
inline bool is_invertible(const Mat4c& m, double tol = kDefaultTol) {
    Eigen::JacobiSVD<Mat4c> svd(m);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(3);
    return smax > 0.0 && smin > tol * smax;
}

inline bool is_invertible(const GL2HElement& t, double tol = kDefaultTol) {
    return is_invertible(rho_mat(t), tol);
}

/// Membership in the lower-triangular subgroup (beta = 0), the stabilizer
/// of the line (0,1)H and the globally admissible transformations.
inline bool is_lower_triangular(const GL2HElement& t, double tol = kDefaultTol) {
    return norm(t.beta) <= tol;
}

}  // namespace twistor
