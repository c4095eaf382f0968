#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "twistor/errors.hpp"
#include "twistor/quaternion.hpp"
#include "twistor/tolerance.hpp"

namespace twistor {

/// Homogeneous coordinates [zeta_1 : ... : zeta_6] on P(Lambda^2 C^4) in the
/// basis E1 = e3^e4, E2 = -e2^e4, E3 = e2^e3, E4 = e1^e4, E5 = -e1^e3,
/// E6 = e1^e2. The same type carries hyperplane covectors (z_1,...,z_6).
using PluckerVector = Eigen::Matrix<Complex, 6, 1>;
using Mat6c = Eigen::Matrix<Complex, 6, 6>;

inline PluckerVector make_plucker(Complex z1, Complex z2, Complex z3,
                                  Complex z4, Complex z5, Complex z6) {
    PluckerVector p;
    p << z1, z2, z3, z4, z5, z6;
    return p;
}

inline double sup_norm(const PluckerVector& p) {
    return p.cwiseAbs().maxCoeff();
}

/// The Klein quadratic form q(zeta) = zeta1*zeta6 - zeta2*zeta5 + zeta3*zeta4.
/// Points of the Grassmannian are exactly its zeros.
inline Complex klein_q(const PluckerVector& p) {
    return p(0) * p(5) - p(1) * p(4) + p(2) * p(3);
}

/// The symmetric bilinear form polarizing klein_q: B(p,p) = 2 q(p).
inline Complex klein_B(const PluckerVector& p, const PluckerVector& r) {
    return p(0) * r(5) + p(5) * r(0) - p(1) * r(4) - p(4) * r(1) +
           p(2) * r(3) + p(3) * r(2);
}

/// Anti-linear real structure; its fixed locus is the real form of
/// signature (1,5). An involution on representatives.
inline PluckerVector sigma(const PluckerVector& p) {
    return make_plucker(std::conj(p(0)), std::conj(p(4)), -std::conj(p(3)),
                        -std::conj(p(2)), std::conj(p(1)), std::conj(p(5)));
}

/// Polarity exchanging points and hyperplanes: the covector of the polar
/// hyperplane of [z]. A linear involution (kappa*kappa = id exactly).
inline PluckerVector kappa(const PluckerVector& z) {
    return make_plucker(z(5), -z(4), z(3), z(2), -z(1), z(0));
}

/// Scale-free projective comparison: normalize each vector by its
/// largest-modulus coordinate and compare entrywise.
inline bool projectively_equal(const PluckerVector& p, const PluckerVector& r,
                               double tol = kDefaultTol) {
    Eigen::Index ip = 0, ir = 0;
    p.cwiseAbs().maxCoeff(&ip);
    r.cwiseAbs().maxCoeff(&ir);
    if (std::abs(p(ip)) == 0.0 || std::abs(r(ir)) == 0.0) {
        return std::abs(p(ip)) == std::abs(r(ir));
    }
    const PluckerVector pn = p / p(ip);
    const PluckerVector rn = r / r(ir);
    return (pn - rn).cwiseAbs().maxCoeff() <= tol;
}

/// True iff [sigma p] = [p], tested through the 2x2 minors of the matrix
/// with rows p and sigma(p).
inline bool is_projectively_real(const PluckerVector& p,
                                 double tol = kDefaultTol) {
    const PluckerVector s = sigma(p);
    const double scale = sup_norm(p) * sup_norm(s);
    for (int a = 0; a < 6; ++a) {
        for (int b = a + 1; b < 6; ++b) {
            if (std::abs(p(a) * s(b) - p(b) * s(a)) > tol * scale) return false;
        }
    }
    return true;
}

/// For a projectively real [p], a representative u with sigma(u) = u
/// entrywise: p + sigma(p) when nonzero, i(p - sigma(p)) otherwise.
inline PluckerVector real_representative(const PluckerVector& p,
                                         double tol = kDefaultTol) {
    if (!is_projectively_real(p, tol)) {
        raise("NotProjectivelyReal",
              "real_representative requires [sigma p] = [p]");
    }
    const PluckerVector s = sigma(p);
    PluckerVector u = p + s;
    if (sup_norm(u) <= tol * sup_norm(p)) {
        u = Complex(0.0, 1.0) * (p - s);
    }
    if (sup_norm(u) <= tol * sup_norm(p)) {
        raise("NotProjectivelyReal", "no usable real representative");
    }
    return u;
}

/// Gram matrix of the real pair x = (p + sigma p)/2, y = (p - sigma p)/(2i)
/// under B restricted to the real form. Symmetric by construction.
struct GramData {
    double m11{0.0};
    double m12{0.0};
    double m22{0.0};

    double trace() const { return m11 + m22; }
    double det() const { return m11 * m22 - m12 * m12; }
};

inline GramData gram(const PluckerVector& p) {
    const PluckerVector s = sigma(p);
    const PluckerVector x = 0.5 * (p + s);
    const PluckerVector y = Complex(0.0, -0.5) * (p - s);
    // B on sigma-fixed vectors is exactly real in floating point as well:
    // every term is either real*real or a z + conj(z) pair.
    return {klein_B(x, x).real(), klein_B(x, y).real(), klein_B(y, y).real()};
}

/// tau([p]) = B(p, sigma p)/|B(p,p)|, the normalized Gram trace. Defined for
/// anisotropic points only; scale-invariant.
inline double tau(const PluckerVector& p, double tol = kDefaultTol) {
    const double scale = sup_norm(p);
    const Complex q = klein_q(p);
    if (std::abs(q) <= tol * scale * scale) {
        raise("IsotropicPoint", "tau is undefined on the Klein quadric");
    }
    return klein_B(p, sigma(p)).real() / (2.0 * std::abs(q));
}

enum class OrbitTag {
    RealNull,
    NonRealIsotropic,
    RealTimelike,
    RealSpacelike,
    NonRealDegenerate,
    NonRealLorentzian,
    NonRealNegativeDefinite,
};

inline std::string to_string(OrbitTag tag) {
    switch (tag) {
        case OrbitTag::RealNull: return "RealNull";
        case OrbitTag::NonRealIsotropic: return "NonRealIsotropic";
        case OrbitTag::RealTimelike: return "RealTimelike";
        case OrbitTag::RealSpacelike: return "RealSpacelike";
        case OrbitTag::NonRealDegenerate: return "NonRealDegenerate";
        case OrbitTag::NonRealLorentzian: return "NonRealLorentzian";
        case OrbitTag::NonRealNegativeDefinite: return "NonRealNegativeDefinite";
    }
    return "?";
}

/// Orbit of a point of CP^5 under the quaternionic projective group, with
/// the canonical parameter where the family is one-dimensional:
/// theta in (0,pi) for Lorentzian, lambda in (0,1) for negative-definite.
struct OrbitType {
    OrbitTag tag{OrbitTag::RealNull};
    std::optional<double> param{};
};

/// Decision tree over (isotropy, reality, tau). Inputs within tol of a
/// stratum boundary are assigned to the boundary type, so the classifier is
/// total on numerically consistent inputs; a non-real anisotropic point with
/// tau >= 1 - tol cannot arise from a signature-(1,5) Gram pair and is
/// rejected as UnclassifiablePoint.
inline OrbitType classify_point(const PluckerVector& p,
                                double tol = kDefaultTol) {
    const double scale = sup_norm(p);
    if (scale <= 0.0) {
        raise("UnclassifiablePoint", "zero vector has no projective class");
    }
    const bool real = is_projectively_real(p, tol);
    if (std::abs(klein_q(p)) <= tol * scale * scale) {
        return {real ? OrbitTag::RealNull : OrbitTag::NonRealIsotropic, {}};
    }
    if (real) {
        const PluckerVector u = real_representative(p, tol);
        return {klein_q(u).real() > 0.0 ? OrbitTag::RealTimelike
                                        : OrbitTag::RealSpacelike,
                {}};
    }
    const double t = tau(p, tol);
    if (std::abs(t + 1.0) <= tol) {
        return {OrbitTag::NonRealDegenerate, {}};
    }
    if (t < -1.0) {
        return {OrbitTag::NonRealNegativeDefinite,
                std::sqrt((-t - 1.0) / (-t + 1.0))};
    }
    if (t < 1.0 - tol) {
        return {OrbitTag::NonRealLorentzian, std::acos(t)};
    }
    raise("UnclassifiablePoint",
          "non-real anisotropic point with tau >= 1 - tol");
}

/// A hyperplane has the type of its pole kappa^{-1}([z]); kappa is an
/// involution, so the pole is kappa(z).
inline OrbitType classify_hyperplane(const PluckerVector& z,
                                     double tol = kDefaultTol) {
    return classify_point(kappa(z), tol);
}

namespace detail {

/// E-basis coordinates of the bivector u ^ v.
inline PluckerVector wedge_pair(const Eigen::Vector4cd& u,
                                const Eigen::Vector4cd& v) {
    const auto minor = [&](int a, int b) { return u(a) * v(b) - u(b) * v(a); };
    return make_plucker(minor(2, 3), -minor(1, 3), minor(1, 2), minor(0, 3),
                        -minor(0, 2), minor(0, 1));
}

}  // namespace detail

/// 6x6 matrix of the induced action of T on Lambda^2 C^4 in the E-basis,
/// built by wedging the transformed standard basis vectors (no hand-derived
/// signs beyond the fixed E-basis convention).
inline Mat6c wedge_matrix(const Mat4c& t) {
    const Eigen::Vector4cd c1 = t.col(0), c2 = t.col(1), c3 = t.col(2),
                           c4 = t.col(3);
    Mat6c w;
    w.col(0) = detail::wedge_pair(c3, c4);
    w.col(1) = -detail::wedge_pair(c2, c4);
    w.col(2) = detail::wedge_pair(c2, c3);
    w.col(3) = detail::wedge_pair(c1, c4);
    w.col(4) = -detail::wedge_pair(c1, c3);
    w.col(5) = detail::wedge_pair(c1, c2);
    return w;
}

/// Applies Lambda^2 T to a point of P(Lambda^2 C^4). Functorial in T; scales
/// klein_q by det(T), hence preserves the quadric.
inline PluckerVector wedge_action(const Mat4c& t, const PluckerVector& p,
                                  double tol = kDefaultTol) {
    if (!is_invertible(t, tol)) {
        raise("SingularMatrix", "wedge_action requires an invertible matrix");
    }
    return wedge_matrix(t) * p;
}

/// Plucker coordinates of the graph of Phi = [a,b;c,d]:
/// [det Phi : c : -a : d : -b : 1]. Always on the Klein quadric.
inline PluckerVector plucker_of_graph(const Mat2c& phi) {
    const Complex a = phi(0, 0), b = phi(0, 1), c = phi(1, 0), d = phi(1, 1);
    return make_plucker(a * d - b * c, c, -a, d, -b, Complex(1.0, 0.0));
}

/// Standard pole representatives, one per orbit; the dual covector
/// representatives of the hyperplane classification are their kappa images.
inline PluckerVector standard_pole(OrbitTag tag, double param = 0.0) {
    const Complex I(0.0, 1.0);
    switch (tag) {
        case OrbitTag::RealNull:
            return make_plucker(0, 0, 0, 0, 0, 1);
        case OrbitTag::NonRealIsotropic:
            return make_plucker(-1, 0, -I, I, 0, 1);
        case OrbitTag::RealTimelike:
            return make_plucker(1, 0, 0, 0, 0, 1);
        case OrbitTag::RealSpacelike:
            return make_plucker(1, 0, 0, 0, 0, -1);
        case OrbitTag::NonRealDegenerate:
            return make_plucker(0, 0, -I, I, 0, 1);
        case OrbitTag::NonRealLorentzian:
            return make_plucker(std::exp(I * param), 0, 0, 0, 0, 1);
        case OrbitTag::NonRealNegativeDefinite:
            return make_plucker(-1, 0, -I * param, I * param, 0, 1);
    }
    raise("UnclassifiablePoint", "unknown orbit tag");
}

}  // namespace twistor
