#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "twistor/cpoly.hpp"
#include "twistor/errors.hpp"
#include "twistor/gl2h.hpp"
#include "twistor/polynomial.hpp"
#include "twistor/roots.hpp"

namespace twistor {

/// Globally admissible elements are exactly the lower-triangular ones: they
/// transform every slice-regular function, polynomial or not.
inline bool is_globally_admissible(const GL2HElement& t,
                                   double tol = kDefaultTol) {
    if (!is_invertible(t, tol)) {
        raise("SingularElement", "admissibility concerns invertible elements");
    }
    return is_lower_triangular(t, tol);
}

/// det(rho(alpha) + rho(beta) Phi_f(v)) as a polynomial in v, degree <= 2n,
/// by coefficient convolution of the 2x2 polynomial-matrix entries. Its
/// coefficients are real up to rounding, so the root multiset is closed
/// under conjugation.
inline CPoly admissibility_polynomial(const GL2HElement& t,
                                      const SliceRegPoly& f) {
    const std::size_t n = f.coeffs.size();
    std::array<CPoly, 4> entry;  // row-major entries of rho(a) + rho(b) Phi_f
    for (auto& e : entry) e.assign(n, {0.0, 0.0});
    for (std::size_t m = 0; m < n; ++m) {
        const Mat2c c = rho(t.beta * f.coeffs[m]);
        entry[0][m] = c(0, 0);
        entry[1][m] = c(0, 1);
        entry[2][m] = c(1, 0);
        entry[3][m] = c(1, 1);
    }
    const Mat2c a = rho(t.alpha);
    entry[0][0] += a(0, 0);
    entry[1][0] += a(0, 1);
    entry[2][0] += a(1, 0);
    entry[3][0] += a(1, 1);
    return cpoly_add(cpoly_mul(entry[0], entry[3]),
                     cpoly_scale({-1.0, 0.0}, cpoly_mul(entry[1], entry[2])));
}

struct AdmissibilityResult {
    bool admissible{false};
    CPoly det_poly;
    std::vector<Complex> roots;
};

namespace detail {

/// Canonical representative of [T] modulo real scalars: divide all sixteen
/// real components by the one of largest magnitude (first index on ties).
/// Two representatives rT and T map to bit-identical output whenever the
/// products r*component are exact, which makes the real-scalar quotient an
/// exact identity rather than a tolerance statement.
inline GL2HElement canonical_representative(const GL2HElement& t) {
    const std::array<double, 16> comps = {
        t.alpha.w, t.alpha.x, t.alpha.y, t.alpha.z, t.beta.w,  t.beta.x,
        t.beta.y,  t.beta.z,  t.gamma.w, t.gamma.x, t.gamma.y, t.gamma.z,
        t.delta.w, t.delta.x, t.delta.y, t.delta.z};
    double best = 0.0;
    for (double c : comps) {
        if (std::abs(c) > std::abs(best)) best = c;
    }
    if (best == 0.0) return t;
    return {t.alpha / best, t.beta / best, t.gamma / best, t.delta / best};
}

/// A computed root with small positive imaginary part may be the split half
/// of a defective real multiple root (eigensolvers resolve those only to
/// sqrt(machine) accuracy). The root is numerically real when the
/// polynomial already vanishes at Re(v) within the Horner running-error
/// bound.
inline bool numerically_real_root(const CPoly& p, Complex v) {
    const double t = v.real();
    double bound = 0.0, power = 1.0;
    for (const auto& c : p) {
        bound += std::abs(c) * power;
        power *= std::abs(t);
    }
    constexpr double kMachine = 2.3e-16;
    const double slack =
        64.0 * static_cast<double>(p.size()) * kMachine * bound;
    return std::abs(cpoly_eval(p, {t, 0.0})) <= slack;
}

}  // namespace detail

/// T is admissible for f iff det(rho(alpha) + rho(beta) Phi_f(v)) has no
/// zero in the open upper half-plane. Roots with |Im| <= tol count as real
/// and do not obstruct, as do roots indistinguishable from real ones at
/// working precision. An identically vanishing determinant obstructs
/// everywhere.
inline AdmissibilityResult admissibility_for(const GL2HElement& t,
                                             const SliceRegPoly& f,
                                             double tol = kDefaultTol) {
    if (!is_invertible(t, tol)) {
        raise("SingularElement", "admissibility concerns invertible elements");
    }
    AdmissibilityResult res;
    const GL2HElement c = detail::canonical_representative(t);
    res.det_poly = admissibility_polynomial(c, f);
    double entry_scale = norm(c.alpha);
    for (const auto& a : f.coeffs) entry_scale += norm(c.beta * a);
    if (cpoly_max_abs(res.det_poly) <= tol * entry_scale * entry_scale) {
        res.admissible = false;  // never lands in the affine chart
        return res;
    }
    res.roots = polynomial_roots(res.det_poly, tol);
    res.admissible =
        std::none_of(res.roots.begin(), res.roots.end(), [&](const Complex& r) {
            return r.imag() > tol &&
                   !detail::numerically_real_root(res.det_poly, r);
        });
    return res;
}

inline bool is_admissible_for(const GL2HElement& t, const SliceRegPoly& f,
                              double tol = kDefaultTol) {
    return admissibility_for(t, f, tol).admissible;
}

/// Mobius image (gamma + delta a)(alpha + beta a)^{-1} of a constant.
inline Quaternion transform_constant(const GL2HElement& t, const Quaternion& a,
                                     double tol = kDefaultTol) {
    const Quaternion den = t.alpha + t.beta * a;
    if (norm(den) <= tol) {
        raise("NotAdmissibleForConstant",
              "alpha + beta*a is not invertible for this constant");
    }
    return (t.gamma + t.delta * a) * inverse(den, tol);
}

/// The coefficient action of the lower-triangular group on polynomials:
/// u_0 = (gamma + delta a_0) alpha^{-1}, u_m = delta a_m alpha^{-1} for
/// m >= 1. Degree-preserving; constant on real-scalar classes.
inline SliceRegPoly act_gamma(const GL2HElement& t, const SliceRegPoly& f,
                              double tol = kDefaultTol) {
    if (!is_globally_admissible(t, tol)) {
        raise("NotLowerTriangular",
              "the coefficient action needs beta = 0 (globally admissible)");
    }
    const GL2HElement c = detail::canonical_representative(t);
    const Quaternion alpha_inv = inverse(c.alpha, tol);
    std::vector<Quaternion> out;
    out.reserve(f.coeffs.size());
    out.push_back((c.gamma + c.delta * f.coeffs[0]) * alpha_inv);
    for (std::size_t m = 1; m < f.coeffs.size(); ++m) {
        out.push_back(c.delta * f.coeffs[m] * alpha_inv);
    }
    return SliceRegPoly::from_coeffs(std::move(out), tol);
}

/// (ST)*f = S*(T*f), coefficient-wise within tol.
inline bool group_law_check(const GL2HElement& s, const GL2HElement& t,
                            const SliceRegPoly& f, double tol = kDefaultTol) {
    if (!is_globally_admissible(s, tol) || !is_globally_admissible(t, tol)) {
        raise("NotLowerTriangular", "group law is stated on the subgroup");
    }
    const SliceRegPoly lhs = act_gamma(compose(s, t), f, tol);
    const SliceRegPoly rhs = act_gamma(s, act_gamma(t, f, tol), tol);
    if (lhs.coeffs.size() != rhs.coeffs.size()) return false;
    for (std::size_t m = 0; m < lhs.coeffs.size(); ++m) {
        if (norm(lhs.coeffs[m] - rhs.coeffs[m]) > tol) return false;
    }
    return true;
}

/// Monic degree-n polynomial with zero constant term, plus the split of
/// each intermediate coefficient into real part and imaginary 3-vector.
struct NormalForm {
    int degree{1};
    std::vector<Quaternion> monic_coeffs;      // b_1 .. b_{n-1}
    std::vector<double> real_parts;            // x_m
    std::vector<Eigen::Vector3d> imag_vectors; // v_m
};

inline NormalForm make_normal_form(int degree,
                                   std::vector<Quaternion> intermediate) {
    NormalForm nf;
    nf.degree = degree;
    nf.monic_coeffs = std::move(intermediate);
    for (const auto& b : nf.monic_coeffs) {
        nf.real_parts.push_back(b.w);
        nf.imag_vectors.emplace_back(b.x, b.y, b.z);
    }
    return nf;
}

inline SliceRegPoly polynomial_of_normal_form(const NormalForm& nf) {
    std::vector<Quaternion> cs(static_cast<std::size_t>(nf.degree) + 1);
    for (std::size_t m = 0; m < nf.monic_coeffs.size(); ++m) {
        cs[m + 1] = nf.monic_coeffs[m];
    }
    cs.back() = Quaternion::one();
    return SliceRegPoly{std::move(cs)};
}

/// Normalization to the monic/zero-constant slice: b_m = a_m a_n^{-1}, with
/// the witness T_f = [a_n, 0; -a_0, 1] realizing it through act_gamma.
inline std::pair<NormalForm, GL2HElement> normalize(const SliceRegPoly& f,
                                                    double tol = kDefaultTol) {
    if (f.is_constant()) {
        raise("ConstantPolynomial", "normal forms exist for degree >= 1");
    }
    const int n = f.degree();
    const Quaternion lead_inv = inverse(f.leading(), tol);
    std::vector<Quaternion> mid;
    for (int m = 1; m < n; ++m) {
        mid.push_back(f.coeffs[static_cast<std::size_t>(m)] * lead_inv);
    }
    const GL2HElement witness{f.leading(), {}, -f.coeffs[0], Quaternion::one()};
    return {make_normal_form(n, std::move(mid)), witness};
}

/// Rotation matrix of conjugation by a unit quaternion: v -> eta v eta^{-1}
/// on the imaginary part.
inline Eigen::Matrix3d rotation_of(const Quaternion& eta) {
    const double s = 1.0 / norm_sq(eta);
    const double w = eta.w, x = eta.x, y = eta.y, z = eta.z;
    Eigen::Matrix3d r;
    r << 1 - 2 * s * (y * y + z * z), 2 * s * (x * y - w * z),
        2 * s * (x * z + w * y), 2 * s * (x * y + w * z),
        1 - 2 * s * (x * x + z * z), 2 * s * (y * z - w * x),
        2 * s * (x * z - w * y), 2 * s * (y * z + w * x),
        1 - 2 * s * (x * x + y * y);
    return r;
}

/// Unit quaternion of a rotation matrix (Shepperd's method), normalized to
/// nonnegative real part; the eta <-> -eta ambiguity is quotiented away by
/// real scalars anyway.
inline Quaternion unit_quaternion_of(const Eigen::Matrix3d& r) {
    const double tr = r.trace();
    Quaternion q;
    if (tr > 0.0) {
        double s = std::sqrt(tr + 1.0) * 2.0;
        q = {0.25 * s, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s,
             (r(1, 0) - r(0, 1)) / s};
    } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
        double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
        q = {(r(2, 1) - r(1, 2)) / s, 0.25 * s, (r(0, 1) + r(1, 0)) / s,
             (r(0, 2) + r(2, 0)) / s};
    } else if (r(1, 1) > r(2, 2)) {
        double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
        q = {(r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, 0.25 * s,
             (r(1, 2) + r(2, 1)) / s};
    } else {
        double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
        q = {(r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s,
             (r(1, 2) + r(2, 1)) / s, 0.25 * s};
    }
    q = q / norm(q);
    return q.w < 0.0 ? -q : q;
}

namespace detail {

/// Best proper rotation taking the source columns to the target columns
/// (Kabsch): SVD of the cross-covariance with the determinant correction on
/// the weakest direction.
inline Eigen::Matrix3d kabsch_rotation(const Eigen::Matrix3Xd& src,
                                       const Eigen::Matrix3Xd& dst) {
    const Eigen::Matrix3d cov = dst * src.transpose();
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(
        cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Matrix3d u = svd.matrixU();
    const Eigen::Matrix3d v = svd.matrixV();
    Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
    if ((u * v.transpose()).determinant() < 0.0) d(2, 2) = -1.0;
    return u * d * v.transpose();
}

}  // namespace detail

struct OrbitDecision {
    bool equal{false};
    std::optional<Quaternion> eta{};
    double residual{0.0};
};

/// Orbit equivalence of two polynomials under the lower-triangular action:
/// equal degrees, matching real parts of the normalized intermediate
/// coefficients, and one rotation carrying the whole tuple of imaginary
/// 3-vectors onto the other. The witness eta is the unit quaternion of the
/// Kabsch-optimal proper rotation, re-verified by direct conjugation.
inline OrbitDecision orbit_equal(const SliceRegPoly& f, const SliceRegPoly& h,
                                 double tol = kDefaultTol) {
    if (f.is_constant() || h.is_constant()) {
        raise("ConstantPolynomial", "orbit equivalence needs degree >= 1");
    }
    if (f.degree() != h.degree()) return {false, {}, 0.0};
    const NormalForm nf = normalize(f, tol).first;
    const NormalForm nh = normalize(h, tol).first;
    const std::size_t k = nf.monic_coeffs.size();

    double scale = 1.0;
    for (std::size_t m = 0; m < k; ++m) {
        scale = std::max({scale, norm(nf.monic_coeffs[m]),
                          norm(nh.monic_coeffs[m])});
    }
    for (std::size_t m = 0; m < k; ++m) {
        if (std::abs(nf.real_parts[m] - nh.real_parts[m]) > tol * scale) {
            return {false, {}, 0.0};
        }
    }

    double vmax = 0.0;
    for (std::size_t m = 0; m < k; ++m) {
        vmax = std::max({vmax, nf.imag_vectors[m].norm(),
                         nh.imag_vectors[m].norm()});
    }
    if (vmax <= tol * scale) {
        return {true, Quaternion::one(), 0.0};  // any eta conjugates 0 to 0
    }

    Eigen::Matrix3Xd src(3, static_cast<Eigen::Index>(k));
    Eigen::Matrix3Xd dst(3, static_cast<Eigen::Index>(k));
    for (std::size_t m = 0; m < k; ++m) {
        src.col(static_cast<Eigen::Index>(m)) = nf.imag_vectors[m];
        dst.col(static_cast<Eigen::Index>(m)) = nh.imag_vectors[m];
    }
    const Eigen::Matrix3d rot = detail::kabsch_rotation(src, dst);
    const double align_residual = (rot * src - dst).cwiseAbs().maxCoeff();
    if (align_residual > tol * scale) return {false, {}, align_residual};

    const Quaternion eta = unit_quaternion_of(rot);
    double conj_residual = 0.0;
    for (std::size_t m = 0; m < k; ++m) {
        const Quaternion image = eta * nf.monic_coeffs[m] * conj(eta);
        conj_residual =
            std::max(conj_residual, norm(image - nh.monic_coeffs[m]));
    }
    if (conj_residual > tol * scale) return {false, {}, conj_residual};
    return {true, eta, conj_residual};
}

/// Complete orbit invariants: the real parts x_m, the Gram matrix of the
/// imaginary 3-vectors, and the triple product of the first three
/// independent vectors (0 when the span has dimension <= 2). Two
/// polynomials are orbit-equal iff these agree.
struct OrbitInvariants {
    std::vector<double> real_parts;
    Eigen::MatrixXd gram;
    double orientation{0.0};
};

inline OrbitInvariants orbit_invariants(const SliceRegPoly& f,
                                        double tol = kDefaultTol) {
    if (f.is_constant()) {
        raise("ConstantPolynomial", "orbit invariants need degree >= 1");
    }
    const NormalForm nf = normalize(f, tol).first;
    const auto k = static_cast<Eigen::Index>(nf.imag_vectors.size());
    OrbitInvariants inv;
    inv.real_parts = nf.real_parts;
    inv.gram.resize(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) {
            inv.gram(a, b) = nf.imag_vectors[static_cast<std::size_t>(a)].dot(
                nf.imag_vectors[static_cast<std::size_t>(b)]);
        }
    }
    // Greedy selection of the first three vectors that increase the rank.
    std::vector<Eigen::Vector3d> picked;
    double vmax = 0.0;
    for (const auto& v : nf.imag_vectors) vmax = std::max(vmax, v.norm());
    for (const auto& v : nf.imag_vectors) {
        if (picked.size() == 3) break;
        Eigen::Matrix3Xd m(3, static_cast<Eigen::Index>(picked.size()) + 1);
        for (std::size_t c = 0; c < picked.size(); ++c) {
            m.col(static_cast<Eigen::Index>(c)) = picked[c];
        }
        m.col(m.cols() - 1) = v;
        Eigen::JacobiSVD<Eigen::Matrix3Xd> svd(m);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) > tol * std::max(vmax, 1.0)) picked.push_back(v);
    }
    if (picked.size() == 3) {
        Eigen::Matrix3d m;
        m << picked[0], picked[1], picked[2];
        inv.orientation = m.determinant();
    }
    return inv;
}

/// The coefficient action is transitive on degree-n polynomials only for
/// n = 1 (every degree-one polynomial normalizes to the identity monomial).
inline bool is_transitive_degree(int n) {
    if (n < 1) raise("ConstantPolynomial", "degrees start at 1");
    return n == 1;
}

/// Constants used to probe whether an element acts trivially.
inline std::vector<Quaternion> constant_probe_set(const Quaternion& extra) {
    return {Quaternion{},    Quaternion::one(), Quaternion::i(),
            Quaternion::j(), Quaternion::k(),   extra};
}

/// Largest displacement of a probe constant under the Mobius action of T.
inline double probe_deviation(const GL2HElement& t,
                              const std::vector<Quaternion>& probes,
                              double tol = kDefaultTol) {
    double dev = 0.0;
    for (const auto& p : probes) {
        dev = std::max(dev, norm(transform_constant(t, p, tol) - p));
    }
    return dev;
}

/// Distance of T from the real scalar matrices r*I, relative to the scalar:
/// elements fixing every probe constant are real scalars, so this is the
/// quantitative faithfulness measure.
inline double distance_to_real_scalar(const GL2HElement& t) {
    const double r = 0.5 * (t.alpha.w + t.delta.w);
    const Quaternion rq{r, 0, 0, 0};
    const double d = std::max({norm(t.alpha - rq), norm(t.delta - rq),
                               norm(t.beta), norm(t.gamma)});
    return d / std::max(std::abs(r), 1e-300);
}

}  // namespace twistor
