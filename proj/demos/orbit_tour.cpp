// Tour of the library: classifies the standard orbit representatives,
// lifts a sample polynomial, and prints its hyperplane families.

#include <cstdio>

#include "twistor/twistor.hpp"

using namespace twistor;

int main() {
    std::printf("orbit representatives and their classifications\n");
    const std::pair<OrbitTag, double> seeds[] = {
        {OrbitTag::RealNull, 0.0},
        {OrbitTag::NonRealIsotropic, 0.0},
        {OrbitTag::RealTimelike, 0.0},
        {OrbitTag::RealSpacelike, 0.0},
        {OrbitTag::NonRealDegenerate, 0.0},
        {OrbitTag::NonRealLorentzian, 1.0471975511965976},  // pi/3
        {OrbitTag::NonRealNegativeDefinite, 0.5},
    };
    for (const auto& [tag, param] : seeds) {
        const PluckerVector p = standard_pole(tag, param);
        const OrbitType t = classify_point(p);
        std::printf("  %-26s -> %-26s param=%s\n", to_string(tag).c_str(),
                    to_string(t.tag).c_str(),
                    t.param ? std::to_string(*t.param).c_str() : "-");
    }

    // f(q) = q^3 + q i: coefficient span has real dimension 2, so the lift
    // sits in a CP^1 of hyperplane sections realizing all three families.
    const SliceRegPoly f = SliceRegPoly::from_coeffs(
        {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}});
    const Complex v(0.3, 0.7);
    const PluckerVector lift = twistor_plucker_at(f, v);
    std::printf("\nlift of q^3 + q i at v = 0.3 + 0.7i (klein_q = %.2e)\n",
                std::abs(klein_q(lift)));

    const PlanarityReport report = planarity_report(f, uint64_t{2024});
    std::printf("coefficient span rank r = %d, planar = %s\n",
                report.summary.r, report.summary.planar ? "yes" : "no");
    for (const auto& w : report.witnesses) {
        std::printf("  family %-10s pole type %-26s contained = %s\n",
                    to_string(w.type).c_str(),
                    to_string(w.pole_type.tag).c_str(),
                    hyperplane_contains(f, w.covector) ? "yes" : "no");
    }

    // Orbit decision: q^2 + q i and q^2 + q j are conjugate normal forms.
    const SliceRegPoly a = SliceRegPoly::from_coeffs(
        {{0, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
    const SliceRegPoly b = SliceRegPoly::from_coeffs(
        {{0, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}});
    const OrbitDecision d = orbit_equal(a, b);
    std::printf("\norbit_equal(q^2 + qi, q^2 + qj) = %s\n",
                d.equal ? "true" : "false");
    if (d.eta) {
        std::printf("  witness eta = (%.4f, %.4f, %.4f, %.4f)\n", d.eta->w,
                    d.eta->x, d.eta->y, d.eta->z);
    }
    return 0;
}
