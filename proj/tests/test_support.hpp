#pragma once

// Random generators and small oracles shared by the unit and acceptance
// suites. Everything here is framework-free and independent of the library
// paths it is used to check (oracles recompute from first principles).

#include <random>
#include <vector>

#include "twistor/twistor.hpp"

namespace twistor::testing {

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Quaternion random_quaternion(std::mt19937_64& rng, double lo = -2.0,
                                    double hi = 2.0) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi),
            uniform(rng, lo, hi)};
}

/// Random quaternion with norm in [0.7, 1.4]; safe to invert.
inline Quaternion random_unitish(std::mt19937_64& rng) {
    Quaternion q;
    do {
        q = random_quaternion(rng, -1.0, 1.0);
    } while (norm(q) < 0.1);
    return q * (uniform(rng, 0.7, 1.4) / norm(q));
}

inline Complex random_complex(std::mt19937_64& rng, double lo = -1.0,
                              double hi = 1.0) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

/// Point of the open upper half-plane, bounded away from the real axis.
inline Complex random_upper_point(std::mt19937_64& rng) {
    return {uniform(rng, -1.2, 1.2), uniform(rng, 0.15, 1.2)};
}

inline SliceRegPoly random_poly(std::mt19937_64& rng, int degree,
                                double lo = -2.0, double hi = 2.0) {
    std::vector<Quaternion> cs;
    for (int m = 0; m <= degree; ++m) cs.push_back(random_quaternion(rng, lo, hi));
    while (norm(cs.back()) < 0.2) cs.back() = random_quaternion(rng, lo, hi);
    return SliceRegPoly::from_coeffs(std::move(cs));
}

/// Polynomial whose non-constant coefficients span a prescribed-rank real
/// subspace of H (rank 1..4); requires degree >= rank.
inline SliceRegPoly random_poly_of_rank(std::mt19937_64& rng, int rank,
                                        int degree) {
    for (;;) {
        std::vector<Quaternion> gens;
        while (static_cast<int>(gens.size()) < rank) {
            const Quaternion g = random_quaternion(rng, -1.0, 1.0);
            std::vector<Quaternion> probe = gens;
            probe.push_back(g);
            if (span_rank(probe) == static_cast<int>(probe.size())) {
                gens.push_back(g);
            }
        }
        std::vector<Quaternion> cs(static_cast<std::size_t>(degree) + 1);
        cs[0] = random_quaternion(rng);
        for (int m = 1; m <= degree; ++m) {
            Quaternion a{};
            for (const auto& g : gens) a = a + uniform(rng, -1.5, 1.5) * g;
            cs[static_cast<std::size_t>(m)] = a;
        }
        // Every generator must actually appear so the span is full.
        for (int k = 0; k < rank; ++k) {
            const auto idx = static_cast<std::size_t>(1 + (k % degree));
            cs[idx] = cs[idx] + gens[static_cast<std::size_t>(k)];
        }
        const SliceRegPoly f = SliceRegPoly::from_coeffs(std::move(cs));
        if (f.degree() == degree &&
            span_rank(nonconstant_coeffs(f)) == rank) {
            return f;
        }
    }
}

inline GL2HElement random_gl2h(std::mt19937_64& rng) {
    GL2HElement t;
    do {
        t = {random_quaternion(rng, -1, 1), random_quaternion(rng, -1, 1),
             random_quaternion(rng, -1, 1), random_quaternion(rng, -1, 1)};
    } while (!is_invertible(t, 1e-2));
    return t;
}

/// Random lower-triangular element with comfortably invertible diagonal.
inline GL2HElement random_lower(std::mt19937_64& rng) {
    return {random_unitish(rng), Quaternion{}, random_quaternion(rng, -1, 1),
            random_unitish(rng)};
}

inline PluckerVector random_plucker(std::mt19937_64& rng) {
    PluckerVector p;
    for (int k = 0; k < 6; ++k) p(k) = random_complex(rng);
    return p;
}

/// Independent oracle for the planarity decision: stack the lift at 25
/// sample points of the upper half-plane and look for a complex null
/// covector. For degree <= 6 the pairing polynomial has degree <= 12 < 25,
/// so a nontrivial null space is exactly planarity.
inline bool planarity_sampling_oracle(const SliceRegPoly& f,
                                      double threshold = 1e-8) {
    Eigen::MatrixXcd m(25, 6);
    int row = 0;
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            const Complex v(-0.6 + 0.3 * a, 0.2 + 0.22 * b);
            PluckerVector p = twistor_plucker_at(f, v);
            m.row(row++) = (p / sup_norm(p)).transpose();
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    return sv(sv.size() - 1) <= threshold * sv(0);
}

/// Test-only bivector expansion: wedge of two explicit 4-vectors expanded
/// through the full antisymmetric coefficient table (independent of the
/// library's column-wedging route).
inline PluckerVector oracle_wedge(const Eigen::Vector4cd& u,
                                  const Eigen::Vector4cd& v) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            m(a, b) = u(a) * v(b) - u(b) * v(a);
        }
    }
    // e1^e2 = E6, e1^e3 = -E5, e1^e4 = E4, e2^e3 = E3, e2^e4 = -E2,
    // e3^e4 = E1.
    return make_plucker(m(2, 3), -m(1, 3), m(1, 2), m(0, 3), -m(0, 2),
                        m(0, 1));
}

}  // namespace twistor::testing
