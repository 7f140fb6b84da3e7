// bergman: Bergman kernels, diastasis functions and ball-rigidity
// diagnostics for Hartogs and egg domains over the unit ball.
//
//   bergman kernel    --domain ball --n 2 --at 0,0
//   bergman rigidity  --domain hartogs --n 1 --m 1 --s 1/2 --lambda 3/4 --N 3
//   bergman calabi    --n 1 --m 1 --s 1/3 --lambda 2 --N 5 --truncation 30
//
// Exit codes: 0 success, 2 obstruction found, 1 error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bergman/cli.hpp"

namespace {

struct CliArgs {
    std::string domain = "ball";
    unsigned n = 1, m = 1, p = 1, q = 1;
    std::string s, k, lambda;
    long long N = -1;
    std::string at, at2;
    unsigned truncation = 30;
    double tol_psd = 1e-10;
    double tol_kernel = 1e-5;
    double tol_diastasis = 1e-4;
    unsigned cutoff = 12;
    unsigned grid = 64;
    unsigned points = 20;
    std::uint64_t seed = 2026;
    std::string out;
    std::string format = "json";
    bool no_timestamp = false;
};

void add_domain_options(CLI::App* cmd, CliArgs& a, bool fixed_hartogs = false) {
    if (!fixed_hartogs)
        cmd->add_option("--domain", a.domain, "Domain kind: ball | hartogs | egg")
            ->check(CLI::IsMember({"ball", "hartogs", "egg"}));
    cmd->add_option("--n", a.n, "Base dimension n >= 1");
    cmd->add_option("--m", a.m, "Hartogs fiber dimension m >= 1");
    cmd->add_option("--s", a.s, "Hartogs exponent as an exact rational 'num/den'");
    cmd->add_option("--p", a.p, "Egg fiber dimension p >= 1");
    cmd->add_option("--q", a.q, "Egg fiber dimension q >= 1");
    cmd->add_option("--k", a.k, "Egg exponent as an exact rational 'num/den'");
    cmd->add_option("--lambda", a.lambda, "Metric rescaling as an exact rational 'num/den'");
    cmd->add_option("--N", a.N, "Target ball dimension N");
}

void add_output_options(CLI::App* cmd, CliArgs& a) {
    cmd->add_option("--out", a.out, "Write the report to this file instead of stdout");
    cmd->add_option("--format", a.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--no-timestamp", a.no_timestamp, "Suppress the provenance timestamp");
}

bergman::RunConfig build_config(const std::string& command, const CliArgs& a) {
    using bergman::DomainSpec;
    using bergman::Error;
    using bergman::ErrorCode;
    using bergman::Rational;

    bergman::RunConfig cfg;
    cfg.command = command;
    std::string domain = command == "calabi" ? "hartogs" : a.domain;
    if (domain == "ball") {
        cfg.domain = DomainSpec::Ball(a.n);
    } else if (domain == "hartogs") {
        if (a.s.empty()) throw Error(ErrorCode::schema, "--s is required for Hartogs domains");
        cfg.domain = DomainSpec::HartogsOverBall(a.n, a.m, Rational::parse(a.s));
    } else if (domain == "egg") {
        if (a.k.empty()) throw Error(ErrorCode::schema, "--k is required for egg domains");
        cfg.domain = DomainSpec::EggOverBall(a.n, a.p, a.q, Rational::parse(a.k));
    } else {
        throw Error(ErrorCode::schema, "unknown domain '" + domain + "'");
    }
    if (!a.lambda.empty()) cfg.domain.lambda = Rational::parse(a.lambda);
    if (a.N >= 0) cfg.domain.target_N = static_cast<unsigned>(a.N);
    cfg.domain.validate();

    if (!a.at.empty()) cfg.points.push_back(bergman::parse_point(a.at));
    if (!a.at2.empty()) cfg.points.push_back(bergman::parse_point(a.at2));
    cfg.truncation = a.truncation;
    cfg.psd_tol = a.tol_psd;
    cfg.oracle_kernel_tol = a.tol_kernel;
    cfg.oracle_diastasis_tol = a.tol_diastasis;
    cfg.cutoff = a.cutoff;
    cfg.grid = a.grid;
    cfg.num_points = a.points;
    cfg.seed = a.seed;
    cfg.output_path = a.out;
    cfg.format = a.format;
    cfg.no_timestamp = a.no_timestamp;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bergman kernels, diastasis functions and ball-rigidity diagnostics"};
    app.require_subcommand(1);
    CliArgs a;

    CLI::App* kernel = app.add_subcommand("kernel", "Evaluate a Bergman kernel at a point (pair)");
    add_domain_options(kernel, a);
    kernel->add_option("--at", a.at, "Evaluation point, comma-separated components (a+bi allowed)")
        ->required();
    kernel->add_option("--at2", a.at2, "Second point for off-diagonal evaluation");
    add_output_options(kernel, a);

    CLI::App* dia = app.add_subcommand("diastasis", "Evaluate the Bergman diastasis at a point pair");
    add_domain_options(dia, a);
    dia->add_option("--at", a.at, "First point")->required();
    dia->add_option("--at2", a.at2, "Second point")->required();
    add_output_options(dia, a);

    CLI::App* calabi = app.add_subcommand("calabi", "Slice expansion and Calabi diagonal diagnostic");
    add_domain_options(calabi, a, /*fixed_hartogs=*/true);
    calabi->add_option("--truncation", a.truncation, "Expansion truncation order (default 30)");
    calabi->add_option("--tol-psd", a.tol_psd, "PSD / rank tolerance on diagonal entries");
    add_output_options(calabi, a);

    CLI::App* rig = app.add_subcommand("rigidity", "Run the full rigidity report");
    add_domain_options(rig, a);
    rig->add_option("--truncation", a.truncation, "Calabi truncation order (default 30)");
    rig->add_option("--tol-psd", a.tol_psd, "PSD / rank tolerance on diagonal entries");
    rig->add_option("--samples", a.points, "Sample pairs for the egg reduction check");
    rig->add_option("--seed", a.seed, "Sampling seed");
    add_output_options(rig, a);

    CLI::App* oc = app.add_subcommand("oracle-compare",
                                      "Compare closed-form kernels against the quadrature oracle");
    add_domain_options(oc, a);
    oc->add_option("--cutoff", a.cutoff, "Monomial degree cutoff D (default 12)");
    oc->add_option("--grid", a.grid, "Radial Gauss-Legendre points per level (default 64)");
    oc->add_option("--points", a.points, "Number of sampled interior points (default 20)");
    oc->add_option("--seed", a.seed, "Sampling seed");
    oc->add_option("--tol-kernel", a.tol_kernel, "Relative kernel tolerance (default 1e-5)");
    oc->add_option("--tol-diastasis", a.tol_diastasis, "Absolute diastasis tolerance (default 1e-4)");
    add_output_options(oc, a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        bergman::Json j;
        j["error"]["code"] = "E_SCHEMA";
        j["error"]["message"] = e.what();
        std::cout << j.dump(2) << "\n";
        return 1;
    }

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        return bergman::run_and_emit(build_config(command, a));
    } catch (const bergman::Error& e) {
        std::cout << bergman::error_to_json(e).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        bergman::Json j;
        j["error"]["code"] = "E_INTERNAL";
        j["error"]["message"] = e.what();
        std::cout << j.dump(2) << "\n";
        return 1;
    }
}
