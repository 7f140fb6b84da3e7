#pragma once

// JSON serialization of specs, checks and reports. Key order is fixed
// (ordered_json) so identical inputs produce byte-identical reports.

#include <string>

#include <json.hpp>

#include "bergman/calabi.hpp"
#include "bergman/domain.hpp"
#include "bergman/oracle.hpp"
#include "bergman/rigidity.hpp"

namespace bergman {

using Json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "1.0.0";

inline Json domain_to_json(const DomainSpec& spec) {
    Json j;
    j["kind"] = spec.kind_name();
    j["n"] = spec.n;
    switch (spec.kind) {
        case DomainSpec::Kind::ball: break;
        case DomainSpec::Kind::hartogs_over_ball:
            j["m"] = spec.m;
            j["s"] = spec.s.str();
            break;
        case DomainSpec::Kind::egg_over_ball:
            j["p"] = spec.p;
            j["q"] = spec.q;
            j["k"] = spec.k.str();
            break;
    }
    if (spec.lambda) j["lambda"] = spec.lambda->str();
    if (spec.target_N) j["N"] = *spec.target_N;
    return j;
}

inline DomainSpec domain_from_json(const Json& j) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const std::vector<std::string> known = {"kind", "n", "m", "s", "p", "q", "k", "lambda", "N"};
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw Error(ErrorCode::schema, "domain_from_json: unknown key '" + it.key() + "'");
    }
    std::string kind = j.at("kind").get<std::string>();
    unsigned n = j.at("n").get<unsigned>();
    DomainSpec spec;
    if (kind == "ball") {
        spec = DomainSpec::Ball(n);
    } else if (kind == "hartogs") {
        spec = DomainSpec::HartogsOverBall(n, j.at("m").get<unsigned>(),
                                           Rational::parse(j.at("s").get<std::string>()));
    } else if (kind == "egg") {
        spec = DomainSpec::EggOverBall(n, j.at("p").get<unsigned>(), j.at("q").get<unsigned>(),
                                       Rational::parse(j.at("k").get<std::string>()));
    } else {
        throw Error(ErrorCode::schema, "domain_from_json: unknown kind '" + kind + "'");
    }
    if (j.contains("lambda")) spec.lambda = Rational::parse(j.at("lambda").get<std::string>());
    if (j.contains("N")) spec.target_N = j.at("N").get<unsigned>();
    spec.validate();
    return spec;
}

inline Json calabi_to_json(const CalabiDiagnostic& d) {
    Json j;
    j["is_psd"] = d.is_psd;
    j["truncated_rank"] = d.truncated_rank;
    j["is_polynomial"] = d.is_polynomial;
    j["detected_cutoff"] = d.detected_cutoff;
    j["max_degree"] = d.max_degree;
    j["tolerance"] = d.tolerance;
    j["verdict"] = calabi_verdict_name(d.verdict);
    return j;
}

// Module-level rigidity report: {spec, checks, conclusion, truncation,
// tolerances, versions}, stable key order.
inline Json rigidity_to_json(const RigidityReport& rep) {
    Json j;
    j["spec"] = domain_to_json(rep.domain);
    Json checks;
    checks["s_nonzero"] = rep.checks.s_nonzero;
    checks["top_coeff_nonzero"] = rep.checks.top_coeff_nonzero;
    checks["T2_constant"] = rep.checks.t2_constant;
    checks["T2_divides_T1"] = rep.checks.t2_divides_t1;
    checks["T2_at_root"] = rep.checks.pair.t2_at_root.str();
    checks["delta"] = rep.checks.pair.delta;
    checks["epsilon"] = rep.checks.pair.epsilon;
    checks["zero_locus_matches"] = rep.zero_locus_matches;
    checks["calabi_verdict"] = calabi_verdict_name(rep.calabi.verdict);
    checks["calabi"] = calabi_to_json(rep.calabi);
    if (rep.domain.kind == DomainSpec::Kind::egg_over_ball) {
        Json red;
        red["n"] = rep.reduced_n;
        red["m"] = rep.reduced_m;
        red["s"] = rep.reduced_s.str();
        checks["egg_reduction"] = red;
    }
    j["checks"] = checks;
    j["conclusion"] = rigidity_conclusion_name(rep.conclusion);
    j["truncation"] = rep.truncation;
    Json tol;
    tol["psd"] = rep.psd_tolerance;
    j["tolerances"] = tol;
    Json versions;
    versions["bergman"] = tool_version;
    versions["report_schema"] = "1";
    j["versions"] = versions;
    return j;
}

inline Json egg_reduction_to_json(const EggReductionReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["k"] = rep.k.str();
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["k_is_one"] = rep.k_is_one;
    if (rep.k_is_one) j["ball_diastasis_dev"] = rep.ball_dev;
    j["s_star"] = rep.s_star.str();
    j["slice_dev_computed"] = rep.slice_dev_computed;
    // The paper's subscript reads 1/k where the generic-norm computation
    // yields 1/(k(n+p+1)); both comparisons are reported.
    j["slice_dev_literal_inv_k"] = rep.slice_dev_literal_inv_k;
    j["base_pullback_dev"] = rep.base_pullback_dev;
    return j;
}

inline Json error_to_json(const Error& e) {
    Json j;
    j["error"]["code"] = e.code_name();
    j["error"]["message"] = e.what();
    return j;
}

} // namespace bergman
