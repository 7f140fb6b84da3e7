#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bergman/cli.hpp"

using namespace bergman;
using Catch::Approx;

namespace {

RunConfig base_config(std::string command) {
    RunConfig cfg;
    cfg.command = std::move(command);
    cfg.no_timestamp = true;
    return cfg;
}

} // namespace

TEST_CASE("config round trip") {
    RunConfig cfg = base_config("rigidity");
    cfg.domain = DomainSpec::HartogsOverBall(1, 1, Rational(1, 3));
    cfg.domain.lambda = Rational(2);
    cfg.domain.target_N = 5;
    cfg.points.push_back({Cplx(0.25, -0.5), Cplx(0.125, 0)});
    cfg.truncation = 24;
    Json j = config_to_json(cfg);
    RunConfig back = config_from_json(j);
    CHECK(config_to_json(back).dump() == j.dump());
}

TEST_CASE("unknown config keys are rejected") {
    RunConfig cfg = base_config("kernel");
    cfg.domain = DomainSpec::Ball(1);
    cfg.points.push_back({Cplx(0)});
    Json j = config_to_json(cfg);
    j["surprise"] = 1;
    CHECK_THROWS_AS(config_from_json(j), Error);
    Json jd = domain_to_json(cfg.domain);
    jd["extra"] = "x";
    CHECK_THROWS_AS(domain_from_json(jd), Error);
}

TEST_CASE("point parsing") {
    CVector p = parse_point("0.5,0.25");
    REQUIRE(p.size() == 2);
    CHECK(p[0] == Cplx(0.5));
    CHECK(p[1] == Cplx(0.25));
    CVector q = parse_point("0.1+0.2i,-0.3i,2");
    REQUIRE(q.size() == 3);
    CHECK(q[0] == Cplx(0.1, 0.2));
    CHECK(q[1] == Cplx(0.0, -0.3));
    CHECK(q[2] == Cplx(2.0, 0.0));
    CHECK_THROWS_AS(parse_point(""), Error);
    CHECK_THROWS_AS(parse_point("1,zz"), Error);
}

TEST_CASE("kernel command reports the ball value with exact annotation") {
    RunConfig cfg = base_config("kernel");
    cfg.domain = DomainSpec::Ball(2);
    cfg.points.push_back({Cplx(0), Cplx(0)});
    RunOutcome out = run(cfg);
    CHECK(out.exit_code == 0);
    CHECK(out.report["result"]["value_re"].get<double>() == Approx(2.0 / (pi * pi)));
    CHECK(out.report["result"]["exact_form"].get<std::string>() == "2/pi^2");
}

TEST_CASE("diastasis command") {
    RunConfig cfg = base_config("diastasis");
    cfg.domain = DomainSpec::Ball(1);
    cfg.domain.lambda = Rational(3);
    cfg.points.push_back({Cplx(0.5)});
    cfg.points.push_back({Cplx(0)});
    RunOutcome out = run(cfg);
    double expected = -2.0 * std::log(0.75);
    CHECK(out.report["result"]["value"].get<double>() == Approx(expected));
    CHECK(out.report["result"]["value_rescaled"].get<double>() == Approx(3.0 * expected));
}

TEST_CASE("rigidity command exit codes") {
    RunConfig ok = base_config("rigidity");
    ok.domain = DomainSpec::HartogsOverBall(1, 1, Rational(1, 2));
    ok.domain.lambda = Rational(3, 4);
    ok.domain.target_N = 3;
    RunOutcome a = run(ok);
    CHECK(a.exit_code == 0);
    CHECK(a.report["result"]["conclusion"] == "ball_certified");

    RunConfig bad = base_config("rigidity");
    bad.domain = DomainSpec::HartogsOverBall(1, 1, Rational(1, 3));
    bad.domain.lambda = Rational(2);
    bad.domain.target_N = 5;
    RunOutcome b = run(bad);
    CHECK(b.exit_code == 2);
    CHECK(b.report["result"]["conclusion"] == "obstruction_found");
}

TEST_CASE("a report's embedded config re-parses to the same RunConfig") {
    RunConfig cfg = base_config("kernel");
    cfg.domain = DomainSpec::Ball(1);
    cfg.points.push_back({Cplx(0.25, 0.125)});
    RunOutcome out = run(cfg);
    RunConfig back = config_from_json(out.report["spec"]);
    CHECK(config_to_json(back).dump() == config_to_json(cfg).dump());
}

TEST_CASE("reports are deterministic when the timestamp is suppressed") {
    RunConfig cfg = base_config("rigidity");
    cfg.domain = DomainSpec::HartogsOverBall(2, 1, Rational(1, 3));
    cfg.domain.lambda = Rational(1);
    cfg.domain.target_N = 3;
    CHECK(run(cfg).report.dump() == run(cfg).report.dump());
}

TEST_CASE("calabi csv table") {
    RunConfig cfg = base_config("calabi");
    cfg.domain = DomainSpec::HartogsOverBall(1, 1, Rational(1, 3));
    cfg.domain.lambda = Rational(2);
    cfg.domain.target_N = 5;
    cfg.truncation = 12;
    cfg.format = "csv";
    RunOutcome out = run(cfg);
    REQUIRE(out.is_csv);
    CHECK(out.csv.rfind("index,value_exact,value_decimal\n", 0) == 0);
    CHECK(out.csv.find("c(s,0),1/3,") != std::string::npos);
    CHECK(out.csv.find("c'(s,1),2/5,") != std::string::npos);
    CHECK(out.csv.find("alpha(1),") != std::string::npos);
}

TEST_CASE("csv is rejected outside coefficient tables") {
    RunConfig cfg = base_config("kernel");
    cfg.domain = DomainSpec::Ball(1);
    cfg.points.push_back({Cplx(0)});
    cfg.format = "csv";
    CHECK_THROWS_AS(run(cfg), Error);
}

TEST_CASE("domain validation errors carry machine-readable codes") {
    CHECK_THROWS_MATCHES(DomainSpec::HartogsOverBall(1, 1, Rational(-1, 2)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::range;
                         }));
    try {
        DomainSpec::EggOverBall(1, 0, 1, Rational(1));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(std::string(e.code_name()) == "E_RANGE");
    }
}

TEST_CASE("oracle-compare command on B^1") {
    RunConfig cfg = base_config("oracle-compare");
    cfg.domain = DomainSpec::Ball(1);
    cfg.cutoff = 16;
    cfg.num_points = 6;
    cfg.seed = 12345;
    RunOutcome out = run(cfg);
    CHECK(out.exit_code == 0);
    CHECK(out.report["result"]["within_tolerance"].get<bool>());
    CHECK(out.report["result"]["max_rel_kernel_dev"].get<double>() < 1e-5);
}
