#pragma once

// Command-line front end: a validated RunConfig, the command dispatch, and
// report emission. Rational parameters travel as "num/den" strings; decimal
// values for s, lambda, k are rejected so reports are reproducible bit for
// bit. Exit codes: 0 success, 2 mathematical obstruction, 1 error.

#include <chrono>
#include <ctime>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/diastasis.hpp"
#include "bergman/report.hpp"

namespace bergman {

struct RunConfig {
    std::string command;  // kernel | diastasis | calabi | rigidity | oracle-compare
    DomainSpec domain;
    std::vector<CVector> points;
    unsigned truncation = 30;
    double psd_tol = 1e-10;
    double oracle_kernel_tol = 1e-5;
    double oracle_diastasis_tol = 1e-4;
    unsigned cutoff = 12;
    unsigned grid = 64;
    unsigned num_points = 20;
    std::uint64_t seed = 2026;
    std::string output_path;      // empty = stdout
    std::string format = "json";  // json | csv
    bool no_timestamp = false;
};

// "a+bi" / "a-bi" / "a" / "bi" component parser (decimals allowed: points
// are evaluation data, not domain parameters).
inline Cplx parse_complex_component(const std::string& text) {
    std::string t = text;
    if (t.empty()) throw Error(ErrorCode::schema, "parse_complex_component: empty component");
    try {
        if (t.back() == 'i' || t.back() == 'I') {
            t.pop_back();
            // split off a leading real part if present: a+bi / a-bi
            for (std::size_t pos = t.size(); pos-- > 1;) {
                if ((t[pos] == '+' || t[pos] == '-') && t[pos - 1] != 'e' && t[pos - 1] != 'E') {
                    double re = std::stod(t.substr(0, pos));
                    std::string im = t.substr(pos);
                    if (im == "+" || im == "-") im += "1";
                    return {re, std::stod(im)};
                }
            }
            if (t.empty() || t == "+" || t == "-") t += "1";
            return {0.0, std::stod(t)};
        }
        std::size_t used = 0;
        double re = std::stod(t, &used);
        if (used != t.size()) throw Error(ErrorCode::schema, "trailing characters");
        return {re, 0.0};
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorCode::schema, "parse_complex_component: cannot parse '" + text + "'");
    }
}

inline CVector parse_point(const std::string& text) {
    CVector pt;
    std::stringstream ss(text);
    std::string comp;
    while (std::getline(ss, comp, ',')) pt.push_back(parse_complex_component(comp));
    if (pt.empty()) throw Error(ErrorCode::schema, "parse_point: empty point");
    return pt;
}

inline Json point_to_json(const CVector& pt) {
    Json j = Json::array();
    for (const Cplx& c : pt) j.push_back(Json::array({c.real(), c.imag()}));
    return j;
}

inline CVector point_from_json(const Json& j) {
    CVector pt;
    for (const auto& c : j) pt.push_back(Cplx(c.at(0).get<double>(), c.at(1).get<double>()));
    return pt;
}

inline Json config_to_json(const RunConfig& cfg) {
    Json j;
    j["command"] = cfg.command;
    j["domain"] = domain_to_json(cfg.domain);
    Json pts = Json::array();
    for (const auto& p : cfg.points) pts.push_back(point_to_json(p));
    j["points"] = pts;
    j["truncation"] = cfg.truncation;
    Json tol;
    tol["psd"] = cfg.psd_tol;
    tol["oracle_kernel_rel"] = cfg.oracle_kernel_tol;
    tol["oracle_diastasis_abs"] = cfg.oracle_diastasis_tol;
    j["tolerances"] = tol;
    j["cutoff"] = cfg.cutoff;
    j["grid"] = cfg.grid;
    j["num_points"] = cfg.num_points;
    j["seed"] = cfg.seed;
    j["format"] = cfg.format;
    j["no_timestamp"] = cfg.no_timestamp;
    return j;
}

inline RunConfig config_from_json(const Json& j) {
    static const std::vector<std::string> known = {
        "command", "domain",     "points", "truncation", "tolerances",
        "cutoff",  "grid",       "num_points", "seed",   "format",
        "no_timestamp"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw Error(ErrorCode::schema, "config_from_json: unknown key '" + it.key() + "'");
    RunConfig cfg;
    cfg.command = j.at("command").get<std::string>();
    cfg.domain = domain_from_json(j.at("domain"));
    for (const auto& p : j.at("points")) cfg.points.push_back(point_from_json(p));
    cfg.truncation = j.at("truncation").get<unsigned>();
    cfg.psd_tol = j.at("tolerances").at("psd").get<double>();
    cfg.oracle_kernel_tol = j.at("tolerances").at("oracle_kernel_rel").get<double>();
    cfg.oracle_diastasis_tol = j.at("tolerances").at("oracle_diastasis_abs").get<double>();
    cfg.cutoff = j.at("cutoff").get<unsigned>();
    cfg.grid = j.at("grid").get<unsigned>();
    cfg.num_points = j.at("num_points").get<unsigned>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.format = j.at("format").get<std::string>();
    cfg.no_timestamp = j.at("no_timestamp").get<bool>();
    return cfg;
}

struct RunOutcome {
    Json report;
    std::string csv;       // populated when format == "csv"
    bool is_csv = false;
    int exit_code = 0;
};

namespace cli_detail {

inline std::string timestamp_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    return buf;
}

inline Json base_report(const RunConfig& cfg) {
    Json rep;
    rep["spec"] = config_to_json(cfg);
    rep["result"] = Json::object();
    rep["checks"] = Json::object();
    rep["truncation"] = cfg.truncation;
    rep["tolerances"] = rep["spec"]["tolerances"];
    Json prov;
    prov["tool"] = "bergman";
    prov["version"] = tool_version;
    if (!cfg.no_timestamp) prov["timestamp"] = timestamp_utc();
    rep["provenance"] = prov;
    return rep;
}

inline std::string ball_exact_form(unsigned n, const Cplx& inner) {
    std::string head = factorial(n).str() + "/pi^" + std::to_string(n);
    if (inner == Cplx(0.0)) return head;
    return "(" + head + ") * (1-<z,w>)^-" + std::to_string(n + 1);
}

inline void require_points(const RunConfig& cfg, std::size_t count) {
    if (cfg.points.size() < count)
        throw Error(ErrorCode::schema,
                    "command '" + cfg.command + "' needs " + std::to_string(count) + " point(s)");
    unsigned d = cfg.domain.complex_dimension();
    for (const auto& p : cfg.points)
        if (p.size() != d)
            throw Error(ErrorCode::schema, "point dimension " + std::to_string(p.size()) +
                                               " does not match the domain dimension " +
                                               std::to_string(d));
}

inline void run_kernel(const RunConfig& cfg, Json& rep) {
    require_points(cfg, 1);
    const CVector& z = cfg.points[0];
    const CVector& w = cfg.points.size() > 1 ? cfg.points[1] : cfg.points[0];
    Cplx value = kernel_value(cfg.domain, z, w);
    Json res;
    res["value_re"] = value.real();
    res["value_im"] = value.imag();
    res["abs"] = std::abs(value);
    if (cfg.domain.kind == DomainSpec::Kind::ball)
        res["exact_form"] = ball_exact_form(cfg.domain.n, hermitian_inner(z, w));
    if (cfg.domain.kind == DomainSpec::Kind::egg_over_ball)
        res["normalization"] = "unit-volume (defined up to one global constant)";
    rep["result"] = res;
}

inline void run_diastasis(const RunConfig& cfg, Json& rep) {
    require_points(cfg, 2);
    auto kernel = [&](const CVector& a, const CVector& b) { return kernel_value(cfg.domain, a, b); };
    double d = bergman_diastasis(kernel, cfg.points[0], cfg.points[1]);
    Json res;
    res["value"] = d;
    if (cfg.domain.lambda) {
        res["lambda"] = cfg.domain.lambda->str();
        res["value_rescaled"] = cfg.domain.lambda->to_double() * d;
    }
    rep["result"] = res;
}

inline void run_calabi(const RunConfig& cfg, Json& rep, std::string& csv) {
    if (cfg.domain.kind != DomainSpec::Kind::hartogs_over_ball)
        throw Error(ErrorCode::schema, "calabi command expects a Hartogs domain");
    if (!cfg.domain.lambda || !cfg.domain.target_N)
        throw Error(ErrorCode::schema, "calabi command requires --lambda and --N");
    HartogsCoefficients hc = hartogs_coefficients(cfg.domain.n, cfg.domain.m, cfg.domain.s);
    SliceExpansion se = make_slice_expansion(hc, *cfg.domain.lambda, *cfg.domain.target_N,
                                             cfg.truncation);
    CalabiDiagnostic diag = calabi_diag_test(se.beta, *cfg.domain.target_N, cfg.psd_tol);

    Json res;
    res["C"] = se.C;
    res["mu"] = se.mu;
    res["lambda_over_N_plus_1"] = se.lambda_over_np1.str();
    res["alpha"] = se.alpha;
    res["diagonal"] = diag.diagonal;
    res["diagnostic"] = calabi_to_json(diag);
    Json coeffs;
    Json c = Json::array(), cn = Json::array();
    for (unsigned j = 0; j <= hc.n; ++j) {
        c.push_back(hc.c[j].str());
        cn.push_back(hc.c_normalized[j].str());
    }
    coeffs["c"] = c;
    coeffs["S"] = hc.S.str();
    coeffs["c_normalized"] = cn;
    res["coefficients"] = coeffs;
    rep["result"] = res;
    rep["checks"]["calabi_verdict"] = calabi_verdict_name(diag.verdict);

    if (cfg.format == "csv") {
        std::ostringstream out;
        out.precision(17);
        out << "index,value_exact,value_decimal\n";
        for (unsigned j = 0; j <= hc.n; ++j)
            out << "c(s," << j << ")," << hc.c[j].str() << "," << hc.c[j].to_double() << "\n";
        for (unsigned j = 0; j <= hc.n; ++j)
            out << "c'(s," << j << ")," << hc.c_normalized[j].str() << ","
                << hc.c_normalized[j].to_double() << "\n";
        unsigned vmax = std::min(cfg.truncation, 12u);
        for (unsigned v = 1; v <= vmax; ++v) {
            Rational rho = alpha_crosscheck_exact(hc, *cfg.domain.lambda, *cfg.domain.target_N, v);
            out << "alpha(" << v << "),(" << rho.str() << ")*C^" << v << "," << se.alpha[v] << "\n";
        }
        csv = out.str();
    }
}

inline void run_rigidity(const RunConfig& cfg, Json& rep, int& exit_code) {
    RigidityReport r = rigidity_report(cfg.domain, cfg.truncation, cfg.psd_tol);
    Json module_report = rigidity_to_json(r);
    rep["checks"] = module_report["checks"];
    Json res;
    res["conclusion"] = rigidity_conclusion_name(r.conclusion);
    if (cfg.domain.kind == DomainSpec::Kind::egg_over_ball) {
        EggReductionReport er = egg_reduction_check(cfg.domain.n, cfg.domain.p, cfg.domain.q,
                                                    cfg.domain.k, cfg.num_points, cfg.seed);
        res["egg_reduction"] = egg_reduction_to_json(er);
    }
    res["rigidity_report"] = module_report;
    rep["result"] = res;
    if (r.conclusion == RigidityConclusion::obstruction_found) exit_code = 2;
}

inline void run_oracle_compare(const RunConfig& cfg, Json& rep, int& exit_code) {
    QuadratureSpec quad;
    quad.radial_points = cfg.grid;
    quad.cutoff = cfg.cutoff;
    OracleKernel oracle(cfg.domain, quad);

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    const unsigned d = cfg.domain.complex_dimension();
    auto sample_point = [&]() {
        // Direction in C^d scaled well inside the domain profile.
        CVector v(d);
        double norm2 = 0.0;
        do {
            for (auto& c : v) c = Cplx(g(rng), g(rng));
            norm2 = squared_norm(v);
        } while (!(norm2 > 0.0));
        double scale = 0.4 * u(rng) / std::sqrt(norm2);
        for (auto& c : v) c *= scale;
        // Rejection step: keep shrinking until strictly inside with margin.
        auto inside = [&](const CVector& pt) {
            CVector z(pt.begin(), pt.begin() + cfg.domain.n);
            switch (cfg.domain.kind) {
                case DomainSpec::Kind::ball: return squared_norm(pt) < 0.5;
                case DomainSpec::Kind::hartogs_over_ball: {
                    CVector xi(pt.begin() + cfg.domain.n, pt.end());
                    return squared_norm(z) < 0.5 &&
                           squared_norm(xi) <
                               0.25 * hartogs_fiber_cap(cfg.domain.n, cfg.domain.s, squared_norm(z));
                }
                case DomainSpec::Kind::egg_over_ball: {
                    CVector x1(pt.begin() + cfg.domain.n, pt.begin() + cfg.domain.n + cfg.domain.p);
                    CVector x2(pt.begin() + cfg.domain.n + cfg.domain.p, pt.end());
                    double rem = 1.0 - squared_norm(z);
                    return squared_norm(z) < 0.5 &&
                           squared_norm(x1) + std::pow(squared_norm(x2), cfg.domain.k.to_double()) <
                               0.25 * rem;
                }
            }
            return false;
        };
        while (!inside(v))
            for (auto& c : v) c *= 0.7;
        return v;
    };

    // The egg closed form carries the unit-volume constant; calibrate it at
    // the first point so the comparison is normalization-free.
    double calibration = 1.0;
    bool calibrate = cfg.domain.kind == DomainSpec::Kind::egg_over_ball;

    double max_rel_kernel = 0.0, max_tail = 0.0;
    std::vector<CVector> pts;
    for (unsigned i = 0; i < cfg.num_points; ++i) pts.push_back(sample_point());
    for (unsigned i = 0; i < cfg.num_points; ++i) {
        OracleKernelResult o = oracle.evaluate(pts[i], pts[i]);
        Cplx closed = kernel_value(cfg.domain, pts[i], pts[i]);
        if (calibrate && i == 0) calibration = o.value.real() / closed.real();
        double rel = std::abs(o.value - calibration * closed) / std::abs(calibration * closed);
        max_rel_kernel = std::max(max_rel_kernel, rel);
        max_tail = std::max(max_tail, o.tail_estimate);
    }
    double max_diastasis = 0.0;
    auto oracle_k = [&](const CVector& a, const CVector& b) { return oracle.evaluate(a, b).value; };
    auto closed_k = [&](const CVector& a, const CVector& b) { return kernel_value(cfg.domain, a, b); };
    for (unsigned i = 0; i + 1 < cfg.num_points; i += 2) {
        double da = bergman_diastasis(oracle_k, pts[i], pts[i + 1]);
        double db = bergman_diastasis(closed_k, pts[i], pts[i + 1]);
        max_diastasis = std::max(max_diastasis, std::abs(da - db));
    }

    bool ok = max_rel_kernel <= cfg.oracle_kernel_tol && max_diastasis <= cfg.oracle_diastasis_tol;
    Json res;
    res["max_rel_kernel_dev"] = max_rel_kernel;
    res["max_abs_diastasis_dev"] = max_diastasis;
    res["max_tail_estimate"] = max_tail;
    res["calibration"] = calibration;
    res["within_tolerance"] = ok;
    rep["result"] = res;
    Json quadj;
    quadj["rule"] = quad.rule;
    quadj["radial_points"] = quad.radial_points;
    quadj["effective_points"] = detail::oracle_points(cfg.domain, quad.cutoff, quad.radial_points);
    quadj["cutoff"] = quad.cutoff;
    rep["checks"]["quadrature"] = quadj;
    if (!ok) exit_code = 1;
}

} // namespace cli_detail

inline RunOutcome run(const RunConfig& cfg) {
    RunOutcome out;
    if (cfg.format != "json" && cfg.format != "csv")
        throw Error(ErrorCode::schema, "run: format must be json or csv");
    if (cfg.format == "csv" && cfg.command != "calabi")
        throw Error(ErrorCode::schema, "run: csv output is only defined for coefficient tables (calabi)");
    out.report = cli_detail::base_report(cfg);
    if (cfg.command == "kernel") {
        cli_detail::run_kernel(cfg, out.report);
    } else if (cfg.command == "diastasis") {
        cli_detail::run_diastasis(cfg, out.report);
    } else if (cfg.command == "calabi") {
        cli_detail::run_calabi(cfg, out.report, out.csv);
        out.is_csv = cfg.format == "csv";
    } else if (cfg.command == "rigidity") {
        cli_detail::run_rigidity(cfg, out.report, out.exit_code);
    } else if (cfg.command == "oracle-compare") {
        cli_detail::run_oracle_compare(cfg, out.report, out.exit_code);
    } else {
        throw Error(ErrorCode::schema, "run: unknown command '" + cfg.command + "'");
    }
    return out;
}

// Writes the report (JSON, or CSV when requested) to the configured output.
inline int run_and_emit(const RunConfig& cfg, std::ostream& fallback = std::cout) {
    try {
        RunOutcome out = run(cfg);
        std::string payload = out.is_csv ? out.csv : out.report.dump(2) + "\n";
        if (cfg.output_path.empty()) {
            fallback << payload;
        } else {
            std::ofstream f(cfg.output_path, std::ios::binary);
            if (!f) throw Error(ErrorCode::schema, "cannot open output file " + cfg.output_path);
            f << payload;
        }
        return out.exit_code;
    } catch (const Error& e) {
        fallback << error_to_json(e).dump(2) << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        // series/jet layer signals (non-invertible constant terms and the like)
        Json j;
        j["error"]["code"] = "E_NON_INVERTIBLE";
        j["error"]["message"] = e.what();
        fallback << j.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["error"]["code"] = "E_INTERNAL";
        j["error"]["message"] = e.what();
        fallback << j.dump(2) << "\n";
        return 1;
    }
}

} // namespace bergman
