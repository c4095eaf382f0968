#pragma once

#include <utility>
#include <vector>

#include "twistor/cpoly.hpp"
#include "twistor/errors.hpp"
#include "twistor/klein.hpp"
#include "twistor/quaternion.hpp"

namespace twistor {

/// Polynomial q^0 a_0 + q^1 a_1 + ... + q^n a_n with right quaternionic
/// coefficients, the slice-regular function class of this library.
/// Trailing coefficients of modulus <= tol are trimmed on construction,
/// so degree() is well defined and |a_n| > tol for non-constant inputs.
struct SliceRegPoly {
    std::vector<Quaternion> coeffs{Quaternion{}};

    static SliceRegPoly from_coeffs(std::vector<Quaternion> cs,
                                    double tol = kDefaultTol) {
        while (cs.size() > 1 && norm(cs.back()) <= tol) cs.pop_back();
        if (cs.empty()) cs.push_back(Quaternion{});
        return SliceRegPoly{std::move(cs)};
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    bool is_constant() const { return coeffs.size() == 1; }

    const Quaternion& leading() const { return coeffs.back(); }

    /// Horner evaluation at a quaternionic argument (powers act on the left,
    /// coefficients on the right, so plain Horner applies).
    Quaternion eval(const Quaternion& q) const {
        Quaternion acc{};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = q * acc + *it;
        }
        return acc;
    }

    Quaternion eval_real(double t) const { return eval({t, 0, 0, 0}); }
};

/// Splitting data of f: complex coefficient lists (b_m, c_m) with
/// a_m = b_m + c_m j, i.e. f restricted to the fixed slice is g + h j.
struct SplittingData {
    CPoly g;  // b_m
    CPoly h;  // c_m
};

inline SplittingData splitting(const SliceRegPoly& f) {
    SplittingData s;
    s.g.reserve(f.coeffs.size());
    s.h.reserve(f.coeffs.size());
    for (const auto& a : f.coeffs) {
        const auto [b, c] = complex_pair(a);
        s.g.push_back(b);
        s.h.push_back(c);
    }
    return s;
}

/// Coefficient-conjugated polynomial: the coefficients of
/// v -> conj(p(conj v)).
inline CPoly reflect(const CPoly& p) {
    CPoly r(p);
    for (auto& c : r) c = std::conj(c);
    return r;
}

/// Graph matrix Phi_f(v) = sum v^m rho(a_m) = [g(v), -h^(v); h(v), g^(v)],
/// where g^, h^ are the reflections of the splitting data.
inline Mat2c graph_matrix_at(const SliceRegPoly& f, Complex v) {
    Mat2c acc = Mat2c::Zero();
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
        acc = v * acc + rho(*it);
    }
    return acc;
}

/// The twistor lift of f at v in Plucker coordinates:
/// [g g^ + h h^ : h : -g : g^ : h^ : 1]. Lies on the Klein quadric.
inline PluckerVector twistor_plucker_at(const SliceRegPoly& f, Complex v) {
    return plucker_of_graph(graph_matrix_at(f, v));
}

/// Reality property of the lift: the lift at conj(v) is the sigma image of
/// the lift at v (projectively).
inline bool reality_check(const SliceRegPoly& f, Complex v,
                          double tol = kDefaultTol) {
    return projectively_equal(twistor_plucker_at(f, std::conj(v)),
                              sigma(twistor_plucker_at(f, v)), tol);
}

/// Degree-<=1 polynomial whose graph matrix at the non-real base point v0
/// equals Phi0, by affine interpolation between v0 and conj(v0).
inline SliceRegPoly realize_point(Complex v0, const Mat2c& phi0,
                                  double tol = kDefaultTol) {
    if (std::abs(v0.imag()) <= tol) {
        raise("RealBasePoint", "realize_point requires Im(v0) != 0");
    }
    const Complex a = phi0(0, 0), b = phi0(0, 1), c = phi0(1, 0),
                  d = phi0(1, 1);
    const Complex dv = v0 - std::conj(v0);  // 2i Im(v0)
    // g(v) = a (v - conj v0)/dv - conj(d) (v - v0)/dv, likewise for h.
    const Complex g1 = (a - std::conj(d)) / dv;
    const Complex g0 = (-a * std::conj(v0) + std::conj(d) * v0) / dv;
    const Complex h1 = (c + std::conj(b)) / dv;
    const Complex h0 = (-c * std::conj(v0) - std::conj(b) * v0) / dv;
    return SliceRegPoly::from_coeffs(
        {from_complex_pair(g0, h0), from_complex_pair(g1, h1)}, tol);
}

/// Coefficients of z1 (g g^ + h h^) + z2 h - z3 g + z4 g^ + z5 h^ + z6 as a
/// polynomial in v, by exact convolution. The lift of f lies in the
/// hyperplane with covector z iff this vanishes identically.
inline CPoly hyperplane_pairing(const SliceRegPoly& f, const PluckerVector& z) {
    const SplittingData s = splitting(f);
    const CPoly gr = reflect(s.g);
    const CPoly hr = reflect(s.h);
    CPoly acc = cpoly_add(cpoly_mul(s.g, gr), cpoly_mul(s.h, hr));
    acc = cpoly_scale(z(0), acc);
    acc = cpoly_add(acc, cpoly_scale(z(1), s.h));
    acc = cpoly_add(acc, cpoly_scale(-z(2), s.g));
    acc = cpoly_add(acc, cpoly_scale(z(3), gr));
    acc = cpoly_add(acc, cpoly_scale(z(4), hr));
    acc[0] += z(5);
    return acc;
}

}  // namespace twistor
