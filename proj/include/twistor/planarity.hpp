#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "twistor/errors.hpp"
#include "twistor/klein.hpp"
#include "twistor/polynomial.hpp"

namespace twistor {

/// R-linear map H -> C determined by the middle Plucker covector
/// coordinates: Lambda(b + cj) = z2 c - z3 b + z4 conj(b) + z5 conj(c).
struct RLinearMap {
    Complex z2{}, z3{}, z4{}, z5{};

    Complex operator()(const Quaternion& q) const {
        const auto [b, c] = complex_pair(q);
        return z2 * c - z3 * b + z4 * std::conj(b) + z5 * std::conj(c);
    }

    /// Coefficients (A,B,C,D) of the equivalent form A x + B y + C u + D v
    /// on real coordinates q = x + y i + u j + v k.
    std::array<Complex, 4> functional_coefficients() const {
        const Complex I(0.0, 1.0);
        return {-z3 + z4, -I * (z3 + z4), z2 + z5, I * (z2 - z5)};
    }

    /// Matrix of the map R^4 -> R^2 (real and imaginary part rows).
    Eigen::Matrix<double, 2, 4> real_matrix() const {
        const auto abcd = functional_coefficients();
        Eigen::Matrix<double, 2, 4> m;
        for (int c = 0; c < 4; ++c) {
            m(0, c) = abcd[static_cast<std::size_t>(c)].real();
            m(1, c) = abcd[static_cast<std::size_t>(c)].imag();
        }
        return m;
    }

    double sq_norm() const {
        return std::norm(z2) + std::norm(z3) + std::norm(z4) + std::norm(z5);
    }
};

/// Map from the middle coordinates of a covector.
inline RLinearMap lambda_from_z(const PluckerVector& z) {
    return {z(1), z(2), z(3), z(4)};
}

/// The unique map with Lambda(x + yi + uj + vk) = Ax + By + Cu + Dv.
inline RLinearMap from_functional(Complex a, Complex b, Complex c, Complex d) {
    const Complex I(0.0, 1.0);
    return {0.5 * (c - I * d), 0.5 * (-a + I * b), 0.5 * (a + I * b),
            0.5 * (c + I * d)};
}

/// dim_R of the real span of a coefficient list, as the numerical rank of
/// the stacked 4-column real matrix (singular values vs tol * largest).
inline int span_rank(std::span<const Quaternion> coeffs,
                     double tol = kDefaultTol) {
    if (coeffs.empty()) return 0;
    Eigen::MatrixXd m(static_cast<Eigen::Index>(coeffs.size()), 4);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const auto& q = coeffs[static_cast<std::size_t>(r)];
        m.row(r) << q.w, q.x, q.y, q.z;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > tol * sv(0)) ++rank;
    }
    return rank;
}

inline std::span<const Quaternion> nonconstant_coeffs(const SliceRegPoly& f) {
    return {f.coeffs.data() + 1, f.coeffs.size() - 1};
}

/// Planarity criterion: the lift of f lies in some hyperplane section iff
/// the non-constant coefficients span a proper real subspace of H. The
/// constant term never matters.
inline bool is_planar(const SliceRegPoly& f, double tol = kDefaultTol) {
    if (f.is_constant()) {
        raise("ConstantPolynomial", "planarity concerns non-constant inputs");
    }
    return span_rank(nonconstant_coeffs(f), tol) <= 3;
}

/// Complex basis of the annihilator {Lambda : Lambda(a_m) = 0, m >= 1},
/// as the null space of the n x 4 matrix with rows
/// (c_m, -b_m, conj(b_m), conj(c_m)). Basis length is 4 - span rank.
inline std::vector<RLinearMap> annihilator_basis(const SliceRegPoly& f,
                                                 double tol = kDefaultTol) {
    if (f.is_constant()) {
        raise("ConstantPolynomial", "annihilator concerns non-constant inputs");
    }
    const auto coeffs = nonconstant_coeffs(f);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(coeffs.size()), 4);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const auto [b, c] = complex_pair(coeffs[static_cast<std::size_t>(r)]);
        m(r, 0) = c;
        m(r, 1) = -b;
        m(r, 2) = std::conj(b);
        m(r, 3) = std::conj(c);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > tol * sv(0)) ++rank;
    }
    std::vector<RLinearMap> basis;
    for (Eigen::Index k = rank; k < 4; ++k) {
        const Eigen::Vector4cd v = svd.matrixV().col(k);
        basis.push_back({v(0), v(1), v(2), v(3)});
    }
    return basis;
}

/// Covector z = (0, z2, z3, z4, z5, -Lambda(a0)) of the hyperplane cut out
/// by Lambda, together with its pole kappa(z).
inline std::pair<PluckerVector, PluckerVector> covector_and_pole(
    const RLinearMap& lambda, const SliceRegPoly& f, double tol = kDefaultTol) {
    if (std::sqrt(lambda.sq_norm()) <= tol) {
        raise("ZeroMap", "covector of the zero map is undefined");
    }
    const Complex l0 = lambda(f.coeffs.front());
    const PluckerVector z =
        make_plucker(0.0, lambda.z2, lambda.z3, lambda.z4, lambda.z5, -l0);
    return {z, kappa(z)};
}

/// True iff the lift of f lies in the hyperplane with covector z, decided
/// coefficient-wise on the exact polynomial pairing.
inline bool hyperplane_contains(const SliceRegPoly& f, const PluckerVector& z,
                                double tol = kDefaultTol) {
    const CPoly residual = hyperplane_pairing(f, z);
    double coeff_scale = 1.0;
    for (const auto& a : f.coeffs) coeff_scale += norm(a);
    const double scale = sup_norm(z) * coeff_scale * coeff_scale;
    return cpoly_max_abs(residual) <= tol * scale;
}

/// Determinant-type and norm-type invariants of Lambda:
/// Delta = z3 z4 - z2 z5, nu = |z2|^2 + |z3|^2 + |z4|^2 + |z5|^2, and the
/// real rank, decided through det(L L^T) = nu^2 - 4 |Delta|^2.
struct DeltaNuRank {
    Complex delta{};
    double nu{0.0};
    int rank{0};
};

inline DeltaNuRank delta_nu_rank(const RLinearMap& lambda,
                                 double tol = kDefaultTol) {
    const double nu = lambda.sq_norm();
    if (std::sqrt(nu) <= tol) {
        raise("ZeroMap", "rank of the zero map is undefined");
    }
    const Complex delta = lambda.z3 * lambda.z4 - lambda.z2 * lambda.z5;
    const double gram_det = nu * nu - 4.0 * std::norm(delta);
    return {delta, nu, std::abs(gram_det) <= tol * nu * nu ? 1 : 2};
}

/// The three dual-hyperplane families reachable by polynomial lifts,
/// named by their pole orbits: A_minus (real space-like), A_QminusN
/// (non-real isotropic), A_nd (non-real negative-definite).
enum class HyperplaneType { AMinus, AQminusN, ANd };

inline std::string to_string(HyperplaneType t) {
    switch (t) {
        case HyperplaneType::AMinus: return "A_minus";
        case HyperplaneType::AQminusN: return "A_QminusN";
        case HyperplaneType::ANd: return "A_nd";
    }
    return "?";
}

inline OrbitTag pole_tag_of(HyperplaneType t) {
    switch (t) {
        case HyperplaneType::AMinus: return OrbitTag::RealSpacelike;
        case HyperplaneType::AQminusN: return OrbitTag::NonRealIsotropic;
        case HyperplaneType::ANd: return OrbitTag::NonRealNegativeDefinite;
    }
    return OrbitTag::RealSpacelike;
}

/// Three-way split of nonzero maps: rank 1 -> A_minus; rank 2 with
/// Delta = 0 -> A_QminusN; rank 2 with Delta != 0 -> A_nd. The Delta = 0
/// test is |Delta| <= tol * nu.
inline HyperplaneType lambda_type(const RLinearMap& lambda,
                                  double tol = kDefaultTol) {
    const DeltaNuRank d = delta_nu_rank(lambda, tol);
    if (d.rank == 1) return HyperplaneType::AMinus;
    return std::abs(d.delta) <= tol * d.nu ? HyperplaneType::AQminusN
                                           : HyperplaneType::ANd;
}

/// One concrete hyperplane through the lift of f, with its pole and the
/// pole's orbit type.
struct PlanarityWitness {
    HyperplaneType type{HyperplaneType::AMinus};
    RLinearMap lambda{};
    PluckerVector covector = PluckerVector::Zero();
    PluckerVector pole = PluckerVector::Zero();
    OrbitType pole_type{};
};

/// Rank evidence plus the annihilator basis; `smallest_retained` and
/// `largest_discarded` record the singular values around the rank cut so a
/// flipped planarity decision can be audited.
struct PlanaritySummary {
    int r{0};
    bool planar{false};
    std::vector<RLinearMap> annihilator;
    double smallest_retained{0.0};
    double largest_discarded{0.0};
};

struct PlanarityReport {
    PlanaritySummary summary;
    std::vector<HyperplaneType> achievable;
    std::vector<PlanarityWitness> witnesses;
};

inline PlanaritySummary planarity_summary(const SliceRegPoly& f,
                                          double tol = kDefaultTol) {
    if (f.is_constant()) {
        raise("ConstantPolynomial", "planarity concerns non-constant inputs");
    }
    const auto coeffs = nonconstant_coeffs(f);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(coeffs.size()), 4);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const auto& q = coeffs[static_cast<std::size_t>(r)];
        m.row(r) << q.w, q.x, q.y, q.z;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    PlanaritySummary s;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > tol * sv(0)) {
            ++s.r;
            s.smallest_retained = sv(k);
        } else if (s.largest_discarded == 0.0) {
            s.largest_discarded = sv(k);
        }
    }
    s.planar = s.r <= 3;
    if (s.planar) s.annihilator = annihilator_basis(f, tol);
    return s;
}

namespace detail {

/// Polarization of Delta: Delta(s + t) = Delta(s) + Delta(t) + 2 pol(s,t).
inline Complex delta_polar(const RLinearMap& a, const RLinearMap& b) {
    return 0.5 * (a.z3 * b.z4 + b.z3 * a.z4 - a.z2 * b.z5 - b.z2 * a.z5);
}

inline RLinearMap combine(Complex s, const RLinearMap& a, Complex t,
                          const RLinearMap& b) {
    return {s * a.z2 + t * b.z2, s * a.z3 + t * b.z3, s * a.z4 + t * b.z4,
            s * a.z5 + t * b.z5};
}

inline Complex delta_of(const RLinearMap& l) {
    return l.z3 * l.z4 - l.z2 * l.z5;
}

/// Nonzero root of Delta restricted to span{u, w}: closed-form root of the
/// binary quadratic alpha s^2 + 2 beta s t + gamma t^2. Shortcut branches
/// fire at machine level only, so the returned map has a genuinely tiny
/// Delta rather than one near the classification threshold.
inline RLinearMap delta_zero_on_plane(const RLinearMap& u,
                                      const RLinearMap& w) {
    constexpr double kMachine = 1e-13;
    const Complex alpha = delta_of(u);
    const Complex gamma = delta_of(w);
    const Complex beta = delta_polar(u, w);
    const double scale =
        std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
    if (scale == 0.0 || std::abs(alpha) <= kMachine * scale) return u;
    if (std::abs(gamma) <= kMachine * scale) return w;
    // alpha s^2 + 2 beta s + gamma = 0 with t = 1, in the cancellation-free
    // form: the sign of the discriminant follows beta.
    const Complex disc = std::sqrt(beta * beta - alpha * gamma);
    const Complex qq =
        -(beta + (std::real(std::conj(beta) * disc) >= 0.0 ? disc : -disc));
    const Complex s = std::abs(qq) > 0.0 ? qq / alpha : std::sqrt(-gamma / alpha);
    return combine(s, u, Complex(1.0, 0.0), w);
}

/// Rank-1 member of the annihilator: a real-valued functional vanishing on
/// the coefficient span, i.e. a real null vector of the coefficient matrix.
inline RLinearMap real_functional_witness(const SliceRegPoly& f, double tol) {
    const auto coeffs = nonconstant_coeffs(f);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(coeffs.size()), 4);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const auto& q = coeffs[static_cast<std::size_t>(r)];
        m.row(r) << q.w, q.x, q.y, q.z;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > tol * sv(0)) ++rank;
    }
    if (rank >= 4) {
        raise("WitnessSearchExhausted",
              "no real functional vanishes on a full-rank span");
    }
    const Eigen::Vector4d n = svd.matrixV().col(3);  // weakest direction
    return from_functional(n(0), n(1), n(2), n(3));
}

}  // namespace detail

/// Full hyperplane-family analysis of a non-constant polynomial: the rank
/// evidence, the annihilator basis, and one verified witness per achievable
/// dual-orbit family. For r = 3 the family is the single A_minus
/// hyperplane; for r <= 2 all three families occur. The generic A_nd
/// witness is drawn from the caller-seeded engine; exhausting the draw
/// budget raises WitnessSearchExhausted instead of degrading silently.
inline PlanarityReport planarity_report(const SliceRegPoly& f,
                                        std::mt19937_64& rng,
                                        double tol = kDefaultTol,
                                        int max_draws = 1000) {
    PlanarityReport report;
    report.summary = planarity_summary(f, tol);
    if (!report.summary.planar) return report;

    const auto& basis = report.summary.annihilator;
    const auto add_witness = [&](HyperplaneType type, const RLinearMap& l) {
        auto [z, pole] = covector_and_pole(l, f, tol);
        PlanarityWitness w;
        w.type = type;
        w.lambda = l;
        w.covector = z;
        w.pole = pole;
        w.pole_type = classify_point(pole, tol);
        report.achievable.push_back(type);
        report.witnesses.push_back(std::move(w));
    };

    add_witness(HyperplaneType::AMinus, detail::real_functional_witness(f, tol));
    if (report.summary.r >= 3) return report;

    // r <= 2: the annihilator has complex dimension >= 2, so isotropic and
    // generic directions of Delta both exist.
    add_witness(HyperplaneType::AQminusN,
                detail::delta_zero_on_plane(basis[0], basis[1]));

    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int draw = 0; draw < max_draws; ++draw) {
        RLinearMap l{};
        for (const auto& b : basis) {
            l = detail::combine(Complex(1.0, 0.0), l,
                                Complex(gauss(rng), gauss(rng)), b);
        }
        if (std::sqrt(l.sq_norm()) <= tol) continue;
        if (lambda_type(l, tol) == HyperplaneType::ANd) {
            add_witness(HyperplaneType::ANd, l);
            return report;
        }
    }
    raise("WitnessSearchExhausted",
          "no generic negative-definite witness found in the draw budget");
}

inline PlanarityReport planarity_report(const SliceRegPoly& f, uint64_t seed,
                                        double tol = kDefaultTol,
                                        int max_draws = 1000) {
    std::mt19937_64 rng(seed);
    return planarity_report(f, rng, tol, max_draws);
}

}  // namespace twistor
