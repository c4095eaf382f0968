#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "twistor/errors.hpp"
#include "twistor/tolerance.hpp"

namespace twistor {

using Complex = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;

/// Quaternion w + x*i + y*j + z*k over doubles. Immutable value type;
/// all operations are pure. Basis convention: k = ij, ji = -k.
struct Quaternion {
    double w{0.0};
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
}

constexpr Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
}

constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }

constexpr Quaternion operator/(const Quaternion& a, double s) {
    return {a.w / s, a.x / s, a.y / s, a.z / s};
}

/// Hamilton product with ij = k.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conj(const Quaternion& q) {
    return {q.w, -q.x, -q.y, -q.z};
}

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

inline bool near(const Quaternion& a, const Quaternion& b,
                 double tol = kDefaultTol) {
    return norm(a - b) <= tol;
}

/// conj(q)/|q|^2; a quaternion of modulus <= tol is rejected rather than
/// producing infinities, so downstream group elements stay invertible.
inline Quaternion inverse(const Quaternion& q, double tol = kDefaultTol) {
    const double n2 = norm_sq(q);
    if (std::sqrt(n2) <= tol) {
        raise("ZeroQuaternion", "cannot invert a (near-)zero quaternion");
    }
    return conj(q) / n2;
}

/// The unique pair (z, w) in C_i x C_i with q = z + w*j,
/// i.e. z = w_field + x*i and w = y + z_field*i.
inline std::pair<Complex, Complex> complex_pair(const Quaternion& q) {
    return {Complex(q.w, q.x), Complex(q.y, q.z)};
}

inline Quaternion from_complex_pair(Complex z, Complex w) {
    return {z.real(), z.imag(), w.real(), w.imag()};
}

/// rho(z + wj) = [z, -conj(w); w, conj(z)], the R-algebra monomorphism
/// H -> Mat_2(C). det(rho(q)) = |q|^2.
inline Mat2c rho(const Quaternion& q) {
    const auto [z, w] = complex_pair(q);
    Mat2c m;
    m << z, -std::conj(w), w, std::conj(z);
    return m;
}

/// Reads the quaternion back off a matrix in the image of rho
/// (first column determines everything).
inline Quaternion quaternion_from_rho(const Mat2c& m) {
    return from_complex_pair(m(0, 0), m(1, 0));
}

/// theta(M) = J conj(M) J^{-1} with J = [0,-1;1,0]; an anti-linear
/// involution whose fixed set is exactly rho(H).
inline Mat2c theta(const Mat2c& m) {
    Mat2c r;
    r << std::conj(m(1, 1)), -std::conj(m(1, 0)),
        -std::conj(m(0, 1)), std::conj(m(0, 0));
    return r;
}

inline bool theta_fix_check(const Mat2c& m, double tol = kDefaultTol) {
    return (theta(m) - m).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace twistor
