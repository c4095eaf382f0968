#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "twistor/twistor.hpp"

using namespace twistor;
using namespace twistor::testing;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("klein_q on the table representatives") {
    CHECK(klein_q(make_plucker(0, 0, 0, 0, 0, 1)) == Complex(0, 0));
    CHECK(klein_q(make_plucker(1, 0, 0, 0, 0, 1)) == Complex(1, 0));
    const double lambda = 0.5;
    const PluckerVector p =
        make_plucker(1, 0, -I * lambda, I * lambda, 0, -1);
    CHECK_THAT(klein_q(p).real(), Catch::Matchers::WithinAbs(-0.75, 1e-15));
    CHECK_THAT(klein_q(p).imag(), Catch::Matchers::WithinAbs(0.0, 1e-15));
}

TEST_CASE("klein_B polarizes klein_q") {
    auto rng = make_rng(21);
    for (int it = 0; it < 100; ++it) {
        const PluckerVector p = random_plucker(rng);
        CHECK(std::abs(klein_B(p, p) - 2.0 * klein_q(p)) <= 1e-12);
        const PluckerVector r = random_plucker(rng);
        CHECK(std::abs(klein_B(p, r) - klein_B(r, p)) <= 1e-13);
    }
    const PluckerVector pp = make_plucker(1, 0, 0, 0, 0, 1);
    const PluckerVector pm = make_plucker(1, 0, 0, 0, 0, -1);
    CHECK(klein_B(pp, pm) == Complex(0, 0));
    PluckerVector e1 = PluckerVector::Zero(), e6 = PluckerVector::Zero();
    e1(0) = 1;
    e6(5) = 1;
    CHECK(klein_B(e1, e6) == Complex(1, 0));
}

TEST_CASE("sigma is an anti-linear involution") {
    const PluckerVector pn = make_plucker(0, 0, 0, 0, 0, 1);
    CHECK((sigma(pn) - pn).cwiseAbs().maxCoeff() == 0.0);
    const double th = 0.8;
    CHECK(projectively_equal(sigma(make_plucker(std::exp(I * th), 0, 0, 0, 0, 1)),
                             make_plucker(std::exp(-I * th), 0, 0, 0, 0, 1),
                             1e-15));
    auto rng = make_rng(22);
    for (int it = 0; it < 100; ++it) {
        const PluckerVector p = random_plucker(rng);
        CHECK(projectively_equal(sigma(sigma(p)), p, 1e-14));
    }
}

TEST_CASE("kappa involution and table rows") {
    CHECK(projectively_equal(kappa(make_plucker(1, 0, 0, 0, 0, 0)),
                             make_plucker(0, 0, 0, 0, 0, 1), 1e-15));
    CHECK(projectively_equal(kappa(make_plucker(1, 0, I, -I, 0, -1)),
                             make_plucker(-1, 0, -I, I, 0, 1), 1e-15));
    auto rng = make_rng(23);
    for (int it = 0; it < 100; ++it) {
        const PluckerVector z = random_plucker(rng);
        CHECK((kappa(kappa(z)) - z).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("projective reality") {
    CHECK(is_projectively_real(make_plucker(1, 0, 0, 0, 0, 1)));
    CHECK(is_projectively_real(I * make_plucker(1, 0, 0, 0, 0, 1)));
    CHECK_FALSE(is_projectively_real(
        make_plucker(std::exp(I * (std::numbers::pi / 2)), 0, 0, 0, 0, 1)));
}

TEST_CASE("real representative recovery") {
    const PluckerVector pp = make_plucker(1, 0, 0, 0, 0, 1);
    CHECK(projectively_equal(real_representative(pp), pp, 1e-14));

    // Purely imaginary scaling kills p + sigma(p); the fallback branch fires.
    const PluckerVector pm = make_plucker(1, 0, 0, 0, 0, -1);
    const PluckerVector u = real_representative(I * pm);
    CHECK((sigma(u) - u).cwiseAbs().maxCoeff() == 0.0);
    CHECK(projectively_equal(u, pm, 1e-14));

    auto rng = make_rng(24);
    for (int it = 0; it < 50; ++it) {
        PluckerVector w = random_plucker(rng);
        w = 0.5 * (w + sigma(w));  // random sigma-fixed vector
        if (sup_norm(w) < 1e-3) continue;
        const double phi = uniform(rng, 0.0, 6.28);
        const PluckerVector rec = real_representative(std::exp(I * phi) * w);
        CHECK(projectively_equal(rec, w, 1e-9));
    }
    CHECK_THROWS_AS(
        real_representative(make_plucker(std::exp(I * 1.0), 0, 0, 0, 0, 1)),
        DomainError);
}

TEST_CASE("gram matrix data") {
    const PluckerVector p0 = make_plucker(-1, 0, -I, I, 0, 1);
    const GramData g0 = gram(p0);
    CHECK_THAT(g0.m11, Catch::Matchers::WithinAbs(-2.0, 1e-15));
    CHECK_THAT(g0.m22, Catch::Matchers::WithinAbs(-2.0, 1e-15));
    CHECK_THAT(g0.m12, Catch::Matchers::WithinAbs(0.0, 1e-15));

    const GramData gp = gram(make_plucker(1, 0, 0, 0, 0, 1));
    CHECK_THAT(gp.m11, Catch::Matchers::WithinAbs(2.0, 1e-15));
    CHECK_THAT(gp.m12, Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(gp.m22, Catch::Matchers::WithinAbs(0.0, 1e-15));

    auto rng = make_rng(25);
    for (int it = 0; it < 100; ++it) {
        const PluckerVector p = random_plucker(rng);
        const GramData a = gram(p);
        const GramData b = gram(2.0 * p);
        CHECK_THAT(b.m11, Catch::Matchers::WithinAbs(4.0 * a.m11, 1e-12));
        CHECK_THAT(b.m12, Catch::Matchers::WithinAbs(4.0 * a.m12, 1e-12));
        CHECK_THAT(b.m22, Catch::Matchers::WithinAbs(4.0 * a.m22, 1e-12));
        // (tr M)^2 - ((M11-M22)^2 + 4 M12^2) = 4 det M
        const double lhs = a.trace() * a.trace() -
                           ((a.m11 - a.m22) * (a.m11 - a.m22) +
                            4.0 * a.m12 * a.m12);
        CHECK_THAT(lhs, Catch::Matchers::WithinAbs(4.0 * a.det(), 1e-9));
    }
}

TEST_CASE("tau on the parameter families") {
    CHECK_THAT(tau(standard_pole(OrbitTag::NonRealLorentzian,
                                 std::numbers::pi / 2)),
               Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(tau(standard_pole(OrbitTag::RealSpacelike)),
               Catch::Matchers::WithinAbs(-1.0, 1e-15));
    const PluckerVector pl = make_plucker(1, 0, -I * 0.5, I * 0.5, 0, -1);
    CHECK_THAT(tau(pl), Catch::Matchers::WithinAbs(-5.0 / 3.0, 1e-14));
    // tau equals the normalized Gram trace.
    auto rng = make_rng(26);
    for (int it = 0; it < 100; ++it) {
        const PluckerVector p = random_plucker(rng);
        if (std::abs(klein_q(p)) < 1e-3) continue;
        const GramData g = gram(p);
        const double via_gram =
            g.trace() / std::sqrt((g.m11 - g.m22) * (g.m11 - g.m22) +
                                  4.0 * g.m12 * g.m12);
        CHECK_THAT(tau(p), Catch::Matchers::WithinAbs(via_gram, 1e-9));
        CHECK_THAT(tau(Complex(0.3, 1.7) * p),
                   Catch::Matchers::WithinAbs(tau(p), 1e-9));
    }
    CHECK_THROWS_AS(tau(make_plucker(0, 0, 0, 0, 0, 1)), DomainError);
}

TEST_CASE("classification of the seven representatives") {
    CHECK(classify_point(standard_pole(OrbitTag::RealNull)).tag ==
          OrbitTag::RealNull);
    CHECK(classify_point(standard_pole(OrbitTag::NonRealIsotropic)).tag ==
          OrbitTag::NonRealIsotropic);
    CHECK(classify_point(standard_pole(OrbitTag::RealTimelike)).tag ==
          OrbitTag::RealTimelike);
    CHECK(classify_point(standard_pole(OrbitTag::RealSpacelike)).tag ==
          OrbitTag::RealSpacelike);
    CHECK(classify_point(standard_pole(OrbitTag::NonRealDegenerate)).tag ==
          OrbitTag::NonRealDegenerate);
    const OrbitType lor =
        classify_point(standard_pole(OrbitTag::NonRealLorentzian, 1.1));
    CHECK(lor.tag == OrbitTag::NonRealLorentzian);
    REQUIRE(lor.param.has_value());
    CHECK_THAT(*lor.param, Catch::Matchers::WithinAbs(1.1, 1e-12));
    const OrbitType nd =
        classify_point(standard_pole(OrbitTag::NonRealNegativeDefinite, 0.25));
    CHECK(nd.tag == OrbitTag::NonRealNegativeDefinite);
    REQUIRE(nd.param.has_value());
    CHECK_THAT(*nd.param, Catch::Matchers::WithinAbs(0.25, 1e-12));

    CHECK(classify_point(make_plucker(0, 0, -I, I, 0, 1)).tag ==
          OrbitTag::NonRealDegenerate);
}

TEST_CASE("hyperplane classification through the pole") {
    CHECK(classify_hyperplane(make_plucker(1, 0, 0, 0, 0, 0)).tag ==
          OrbitTag::RealNull);
    const double th = 1.3;
    CHECK(classify_hyperplane(make_plucker(1, 0, 0, 0, 0, std::exp(I * th)))
              .tag == OrbitTag::NonRealLorentzian);
    const OrbitType nd =
        classify_hyperplane(make_plucker(1, 0, I * 0.5, -I * 0.5, 0, -1));
    CHECK(nd.tag == OrbitTag::NonRealNegativeDefinite);
    REQUIRE(nd.param.has_value());
    CHECK_THAT(*nd.param, Catch::Matchers::WithinAbs(0.5, 1e-12));
}

TEST_CASE("wedge action basics") {
    auto rng = make_rng(27);
    const PluckerVector p = random_plucker(rng);
    CHECK(projectively_equal(wedge_action(Mat4c::Identity(), p), p, 1e-15));
    CHECK_THROWS_AS(wedge_action(Mat4c::Zero(), p), DomainError);

    for (int it = 0; it < 50; ++it) {
        Mat4c t;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) t(r, c) = random_complex(rng);
        }
        if (!is_invertible(t, 1e-3)) continue;

        // det scaling of the quadratic form, on a random (non-decomposable)
        // vector: q(Wp) = det(T) q(p).
        const PluckerVector q = random_plucker(rng);
        const Complex lhs = klein_q(wedge_action(t, q));
        const Complex rhs = t.determinant() * klein_q(q);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));

        // Functoriality against the explicit wedge oracle on decomposables.
        Eigen::Vector4cd u, v;
        for (int k = 0; k < 4; ++k) {
            u(k) = random_complex(rng);
            v(k) = random_complex(rng);
        }
        const PluckerVector dec = oracle_wedge(u, v);
        const PluckerVector expect = oracle_wedge(t * u, t * v);
        CHECK((wedge_action(t, dec) - expect).cwiseAbs().maxCoeff() <=
              1e-10 * (1.0 + sup_norm(expect)));
        CHECK(std::abs(klein_q(wedge_action(t, dec))) <=
              1e-10 * sup_norm(dec) * t.cwiseAbs().maxCoeff() *
                  t.cwiseAbs().maxCoeff());
    }
}

TEST_CASE("wedge functoriality on products") {
    auto rng = make_rng(28);
    for (int it = 0; it < 25; ++it) {
        const GL2HElement s = random_gl2h(rng);
        const GL2HElement t = random_gl2h(rng);
        const Mat6c lhs = wedge_matrix(rho_mat(compose(s, t)));
        const Mat6c rhs = wedge_matrix(rho_mat(s)) * wedge_matrix(rho_mat(t));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <=
              1e-10 * (1.0 + rhs.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("kappa equivariance under the quaternionic group") {
    // B(Tp, Tr) = det(T) B(p, r) makes kappa exchange the wedge action with
    // its inverse-transpose, projectively.
    auto rng = make_rng(29);
    for (int it = 0; it < 25; ++it) {
        const Mat4c t4 = rho_mat(random_gl2h(rng));
        const Mat6c w = wedge_matrix(t4);
        const PluckerVector z = random_plucker(rng);
        const PluckerVector lhs = kappa(w * z);
        const PluckerVector rhs = w.inverse().transpose() * kappa(z);
        CHECK(projectively_equal(lhs, rhs, 1e-8));
    }
}

TEST_CASE("tau and tags are invariant under the group action") {
    auto rng = make_rng(30);
    const double params[] = {0.0,  0.0, 0.0, 0.0,
                             0.0,  2.2, 0.7};  // per-tag parameters
    const OrbitTag tags[] = {
        OrbitTag::RealNull,          OrbitTag::NonRealIsotropic,
        OrbitTag::RealTimelike,      OrbitTag::RealSpacelike,
        OrbitTag::NonRealDegenerate, OrbitTag::NonRealLorentzian,
        OrbitTag::NonRealNegativeDefinite};
    int checked = 0;
    for (int round = 0; round < 16; ++round) {
        for (int k = 0; k < 7; ++k) {
            const PluckerVector p = standard_pole(tags[k], params[k]);
            GL2HElement t = random_gl2h(rng);
            if (!is_invertible(t, 1e-1)) continue;  // keep conditioning mild
            const PluckerVector image = wedge_action(rho_mat(t), p);
            const OrbitType ot = classify_point(image);
            CHECK(ot.tag == tags[k]);
            if (tags[k] == OrbitTag::NonRealLorentzian) {
                CHECK_THAT(std::acos(tau(image)),
                           Catch::Matchers::WithinAbs(params[k], 1e-6));
            }
            if (tags[k] == OrbitTag::NonRealNegativeDefinite) {
                REQUIRE(ot.param.has_value());
                CHECK_THAT(*ot.param,
                           Catch::Matchers::WithinAbs(params[k], 1e-6));
            }
            ++checked;
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("plucker coordinates of a graph") {
    CHECK((plucker_of_graph(Mat2c::Zero()) - make_plucker(0, 0, 0, 0, 0, 1))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    Mat2c phi;
    phi << 1, 2, 3, 4;
    CHECK((plucker_of_graph(phi) - make_plucker(-2, 3, -1, 4, -2, 1))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    // Oracle: the wedge of the two explicit column generators of the graph.
    auto rng = make_rng(31);
    for (int it = 0; it < 100; ++it) {
        Mat2c m;
        m << random_complex(rng), random_complex(rng), random_complex(rng),
            random_complex(rng);
        Eigen::Vector4cd v1, v2;
        v1 << 1, 0, m(0, 0), m(1, 0);
        v2 << 0, 1, m(0, 1), m(1, 1);
        const PluckerVector lhs = plucker_of_graph(m);
        CHECK((lhs - oracle_wedge(v1, v2)).cwiseAbs().maxCoeff() <= 1e-13);
        CHECK(std::abs(klein_q(lhs)) <= 1e-10 * sup_norm(lhs) * sup_norm(lhs));
    }
}

TEST_CASE("real-form coordinate identity") {
    auto rng = make_rng(32);
    for (int it = 0; it < 100; ++it) {
        const double r = uniform(rng, -2, 2), s = uniform(rng, -2, 2);
        const Complex b = random_complex(rng), c = random_complex(rng);
        const PluckerVector p =
            make_plucker(r, c, -b, std::conj(b), std::conj(c), s);
        CHECK((sigma(p) - p).cwiseAbs().maxCoeff() == 0.0);
        const double expect = r * s - std::norm(b) - std::norm(c);
        CHECK_THAT(klein_q(p).real(),
                   Catch::Matchers::WithinAbs(expect, 1e-12));
        CHECK(klein_q(p).imag() == 0.0);
    }
}

TEST_CASE("unclassifiable inputs raise") {
    // A fabricated non-real point with tau >= 1 cannot come from the
    // signature-(1,5) real form. tau(p) = +1 with [sigma p] != [p] needs a
    // doctored vector; scaling a real timelike one by a phase keeps it
    // projectively real, so instead perturb sigma-asymmetry in by hand.
    const PluckerVector bad =
        make_plucker(Complex(1, 0), Complex(0.3, 0.1), 0, 0,
                     Complex(0.3, -0.1), Complex(1, 0));
    // bad is sigma-fixed; modify one middle coordinate asymmetrically.
    PluckerVector worse = bad;
    worse(1) = Complex(0.3, 0.1) * 1.0001;
    if (!is_projectively_real(worse) && std::abs(klein_q(worse)) > 1e-6) {
        if (tau(worse) >= 1.0 - kDefaultTol) {
            CHECK_THGROWS_AS(classify_point(worse), DomainError);
        } else {
            CHECK_NOTHROW(classify_point(worse));
        }
    }
    SUCCEED("construction-dependent guard exercised");
}
