#pragma once

#include <cstdint>
#include <string>

#include "twistor/json_io.hpp"

namespace twistor {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Request execution status, mapped by the CLI onto exit codes:
/// ok -> 0, invalid (malformed payload / unknown command) -> 1,
/// domain error (failed mathematical precondition) -> 2.
enum class RunStatus { Ok, Invalid, Error };

struct RunResult {
    RunStatus status{RunStatus::Ok};
    Json report;
};

namespace detail {

inline Json diagnostics_base(double tol, uint64_t seed) {
    return Json{{"tolerance", tol}, {"seed", seed}};
}

struct CommandOutput {
    Json result;
    Json diagnostics = Json::object();
};

inline CommandOutput dispatch(const std::string& command, const Json& payload,
                              double tol, uint64_t seed) {
    CommandOutput out;
    if (command == "classify-point" || command == "classify-hyperplane") {
        if (!payload.contains("zeta")) malformed("payload needs \"zeta\"");
        const PluckerVector p = plucker_from_json(payload["zeta"]);
        const bool dual = command == "classify-hyperplane";
        const PluckerVector pole = dual ? kappa(p) : p;
        out.result = to_json(classify_point(pole, tol));
        out.diagnostics["klein_q"] = to_json(klein_q(pole));
        out.diagnostics["projectively_real"] =
            is_projectively_real(pole, tol);
        if (dual) out.diagnostics["pole"] = to_json(pole);
        return out;
    }
    if (command == "lift") {
        const SliceRegPoly f = poly_from_json(payload, tol);
        if (!payload.contains("v")) malformed("payload needs \"v\"");
        const Complex v = complex_from_json(payload["v"]);
        const PluckerVector p = twistor_plucker_at(f, v);
        out.result = Json{{"zeta", to_json(p)}};
        out.diagnostics["klein_q"] = to_json(klein_q(p));
        out.diagnostics["reality_check"] = reality_check(f, v, tol);
        return out;
    }
    if (command == "planarity") {
        const SliceRegPoly f = poly_from_json(payload, tol);
        const PlanaritySummary s = planarity_summary(f, tol);
        Json basis = Json::array();
        for (const auto& l : s.annihilator) basis.push_back(to_json(l));
        out.result = Json{
            {"r", s.r}, {"planar", s.planar}, {"annihilator_basis", basis}};
        out.diagnostics["smallest_retained_sv"] = s.smallest_retained;
        out.diagnostics["largest_discarded_sv"] = s.largest_discarded;
        return out;
    }
    if (command == "hyperplane-family") {
        const SliceRegPoly f = poly_from_json(payload, tol);
        const PlanarityReport r = planarity_report(f, seed, tol);
        out.result = to_json(r);
        out.diagnostics["smallest_retained_sv"] = r.summary.smallest_retained;
        out.diagnostics["largest_discarded_sv"] = r.summary.largest_discarded;
        Json residuals = Json::array();
        for (const auto& w : r.witnesses) {
            residuals.push_back(
                cpoly_max_abs(hyperplane_pairing(f, w.covector)));
        }
        out.diagnostics["containment_residuals"] = residuals;
        return out;
    }
    if (command == "normal-form") {
        const SliceRegPoly f = poly_from_json(payload, tol);
        const auto [nf, witness] = normalize(f, tol);
        out.result = to_json(nf);
        out.result["witness"] = to_json(witness);
        const SliceRegPoly reproduced = act_gamma(witness, f, tol);
        double residual = 0.0;
        const SliceRegPoly target = polynomial_of_normal_form(nf);
        for (std::size_t m = 0;
             m < std::min(target.coeffs.size(), reproduced.coeffs.size()); ++m) {
            residual = std::max(
                residual, norm(target.coeffs[m] - reproduced.coeffs[m]));
        }
        out.diagnostics["witness_residual"] = residual;
        return out;
    }
    if (command == "orbit-equal") {
        if (!payload.contains("f") || !payload.contains("h")) {
            malformed("payload needs \"f\" and \"h\"");
        }
        const SliceRegPoly f = poly_from_json(payload["f"], tol);
        const SliceRegPoly h = poly_from_json(payload["h"], tol);
        const OrbitDecision d = orbit_equal(f, h, tol);
        out.result = Json{{"equal", d.equal},
                          {"eta", d.eta ? to_json(*d.eta) : Json(nullptr)}};
        out.diagnostics["residual"] = d.residual;
        return out;
    }
    if (command == "act") {
        if (!payload.contains("T") || !payload.contains("f")) {
            malformed("payload needs \"T\" and \"f\"");
        }
        const GL2HElement t = gl2h_from_json(payload["T"]);
        const SliceRegPoly f = poly_from_json(payload["f"], tol);
        out.result = to_json(act_gamma(t, f, tol));
        return out;
    }
    if (command == "admissible") {
        if (!payload.contains("T") || !payload.contains("f")) {
            malformed("payload needs \"T\" and \"f\"");
        }
        const GL2HElement t = gl2h_from_json(payload["T"]);
        const SliceRegPoly f = poly_from_json(payload["f"], tol);
        const AdmissibilityResult a = admissibility_for(t, f, tol);
        Json roots = Json::array();
        for (const auto& r : a.roots) roots.push_back(to_json(r));
        out.result = Json{{"admissible", a.admissible},
                          {"globally_admissible",
                           is_globally_admissible(t, tol)}};
        out.diagnostics["roots"] = roots;
        return out;
    }
    malformed("unknown command \"" + command + "\"");
}

}  // namespace detail

/// Executes one request {"command": ..., "payload": ..., "tolerance"?,
/// "seed"?}. Deterministic for fixed (payload, tolerance, seed). The report
/// echoes the command, the inputs, and the effective tolerance/seed.
inline RunResult run_request(const Json& request) {
    Json report{{"version", std::string(kVersion)},
                {"schema", kSchemaVersion}};
    double tol = kDefaultTol;
    uint64_t seed = 0;
    try {
        if (!request.is_object() || !request.contains("command") ||
            !request["command"].is_string()) {
            malformed("requests are objects with a \"command\" string");
        }
        const std::string command = request["command"].get<std::string>();
        const Json payload =
            request.contains("payload") ? request["payload"] : Json::object();
        if (request.contains("tolerance")) {
            if (!request["tolerance"].is_number()) malformed("tolerance");
            tol = request["tolerance"].get<double>();
        }
        if (request.contains("seed")) {
            if (!request["seed"].is_number_unsigned() &&
                !request["seed"].is_number_integer()) {
                malformed("seed");
            }
            seed = request["seed"].get<uint64_t>();
        }
        report["command"] = command;
        report["inputs"] = payload;
        auto out = detail::dispatch(command, payload, tol, seed);
        out.diagnostics.update(detail::diagnostics_base(tol, seed));
        report["result"] = out.result;
        report["diagnostics"] = out.diagnostics;
        return {RunStatus::Ok, report};
    } catch (const DomainError& e) {
        report["error"] = Json{{"code", e.code()}, {"message", e.what()}};
        report["diagnostics"] = detail::diagnostics_base(tol, seed);
        return {RunStatus::Error, report};
    } catch (const std::exception& e) {
        report["error"] =
            Json{{"code", "MalformedInput"}, {"message", e.what()}};
        report["diagnostics"] = detail::diagnostics_base(tol, seed);
        return {RunStatus::Invalid, report};
    }
}

/// Executes a JSON array of requests in order; a failing item yields an
/// error report in place without aborting the rest.
inline Json run_batch(const Json& requests) {
    if (!requests.is_array()) {
        malformed("batch input is a JSON array of requests");
    }
    Json reports = Json::array();
    for (const auto& r : requests) reports.push_back(run_request(r).report);
    return reports;
}

}  // namespace twistor
