#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "twistor/gl2h.hpp"
#include "twistor/klein.hpp"
#include "twistor/orbits.hpp"
#include "twistor/planarity.hpp"
#include "twistor/polynomial.hpp"
#include "twistor/quaternion.hpp"

namespace twistor {

using Json = nlohmann::json;

/// Wire formats shared by the CLI and every module:
///   complex      -> [re, im]
///   quaternion   -> [w, x, y, z]
///   Plucker/covector -> array of 6 complex pairs
///   polynomial   -> {"coeffs": [[w,x,y,z], ...]} with index = power
///   group element -> {"alpha": [...], "beta": [...], ...}

[[noreturn]] inline void malformed(const std::string& what) {
    throw std::invalid_argument("malformed input: " + what);
}

inline Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number()) {
        malformed("complex numbers are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json to_json(const Quaternion& q) {
    return Json::array({q.w, q.x, q.y, q.z});
}

inline Quaternion quaternion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) {
        malformed("quaternions are [w, x, y, z] arrays");
    }
    for (const auto& c : j) {
        if (!c.is_number()) malformed("quaternion components are numbers");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
            j[3].get<double>()};
}

inline Json to_json(const PluckerVector& p) {
    Json arr = Json::array();
    for (int k = 0; k < 6; ++k) arr.push_back(to_json(p(k)));
    return arr;
}

inline PluckerVector plucker_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 6) {
        malformed("Plucker vectors have six complex coordinates");
    }
    PluckerVector p;
    for (int k = 0; k < 6; ++k) p(k) = complex_from_json(j[static_cast<std::size_t>(k)]);
    return p;
}

inline Json to_json(const OrbitType& t) {
    Json j;
    j["tag"] = to_string(t.tag);
    j["param"] = t.param ? Json(*t.param) : Json(nullptr);
    return j;
}

inline Json to_json(const SliceRegPoly& f) {
    Json cs = Json::array();
    for (const auto& a : f.coeffs) cs.push_back(to_json(a));
    return Json{{"coeffs", cs}};
}

inline SliceRegPoly poly_from_json(const Json& j, double tol = kDefaultTol) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() ||
        j["coeffs"].empty()) {
        malformed("polynomials are {\"coeffs\": [[w,x,y,z], ...]}");
    }
    std::vector<Quaternion> cs;
    for (const auto& c : j["coeffs"]) cs.push_back(quaternion_from_json(c));
    return SliceRegPoly::from_coeffs(std::move(cs), tol);
}

inline Json to_json(const GL2HElement& t) {
    return Json{{"alpha", to_json(t.alpha)},
                {"beta", to_json(t.beta)},
                {"gamma", to_json(t.gamma)},
                {"delta", to_json(t.delta)}};
}

inline GL2HElement gl2h_from_json(const Json& j) {
    for (const char* key : {"alpha", "beta", "gamma", "delta"}) {
        if (!j.is_object() || !j.contains(key)) {
            malformed("group elements need alpha, beta, gamma, delta");
        }
    }
    return {quaternion_from_json(j["alpha"]), quaternion_from_json(j["beta"]),
            quaternion_from_json(j["gamma"]), quaternion_from_json(j["delta"])};
}

inline Json to_json(const RLinearMap& l) {
    return Json::array(
        {to_json(l.z2), to_json(l.z3), to_json(l.z4), to_json(l.z5)});
}

inline Json to_json(const NormalForm& nf) {
    Json mc = Json::array(), xs = Json::array(), vs = Json::array();
    for (const auto& b : nf.monic_coeffs) mc.push_back(to_json(b));
    for (double x : nf.real_parts) xs.push_back(x);
    for (const auto& v : nf.imag_vectors) {
        vs.push_back(Json::array({v(0), v(1), v(2)}));
    }
    return Json{{"degree", nf.degree},
                {"monic_coeffs", mc},
                {"x", xs},
                {"v", vs}};
}

inline Json to_json(const PlanarityWitness& w) {
    return Json{{"type", to_string(w.type)},
                {"lambda", to_json(w.lambda)},
                {"covector", to_json(w.covector)},
                {"pole", to_json(w.pole)},
                {"pole_type", to_json(w.pole_type)}};
}

inline Json to_json(const PlanarityReport& r) {
    Json basis = Json::array(), types = Json::array(), wits = Json::array();
    for (const auto& l : r.summary.annihilator) basis.push_back(to_json(l));
    for (const auto& t : r.achievable) types.push_back(to_string(t));
    for (const auto& w : r.witnesses) wits.push_back(to_json(w));
    return Json{{"r", r.summary.r},
                {"planar", r.summary.planar},
                {"annihilator_basis", basis},
                {"types", types},
                {"witnesses", wits}};
}

}  // namespace twistor
