#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "bergman/diastasis.hpp"
#include "bergman/kernels.hpp"
#include "bergman/mobius.hpp"

using namespace bergman;
using Catch::Approx;

namespace {

std::mt19937_64 rng(303);

CVector random_in_ball(unsigned n, double rmax = 0.6) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    CVector v(n);
    double norm2 = 0.0;
    do {
        for (auto& c : v) c = Cplx(g(rng), g(rng));
        norm2 = squared_norm(v);
    } while (!(norm2 > 0.0));
    double s = rmax * u(rng) / std::sqrt(norm2);
    for (auto& c : v) c *= s;
    return v;
}

auto ball_K(unsigned n) {
    return [n](const CVector& a, const CVector& b) { return ball_kernel(n, a, b); };
}

} // namespace

TEST_CASE("bergman diastasis basics") {
    CVector z = random_in_ball(2), w = random_in_ball(2);
    CHECK(bergman_diastasis(ball_K(2), z, z) == Approx(0.0).margin(1e-14));
    CHECK(bergman_diastasis(ball_K(2), z, w) == Approx(bergman_diastasis(ball_K(2), w, z)));
    CHECK(bergman_diastasis(ball_K(2), z, w) >= 0.0);

    // ball, w = 0: D = -(n+1) log(1 - ||z||^2)
    for (unsigned n = 1; n <= 3; ++n) {
        CVector p = random_in_ball(n), zero(n, Cplx(0));
        double expected = -(n + 1.0) * std::log(1.0 - squared_norm(p));
        CHECK(bergman_diastasis(ball_K(n), p, zero) == Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("positivity with equality iff equal points") {
    for (int rep = 0; rep < 30; ++rep) {
        CVector z = random_in_ball(2), w = random_in_ball(2);
        double d = bergman_diastasis(ball_K(2), z, w);
        if (z == w) CHECK(d == Approx(0.0).margin(1e-13));
        else CHECK(d > 0.0);
    }
}

TEST_CASE("Lu Qi-Keng violation is signalled") {
    auto fake = [](const CVector& a, const CVector& b) {
        return a == b ? Cplx(1.0) : Cplx(0.0);
    };
    CVector z{Cplx(0.1)}, w{Cplx(0.2)};
    CHECK_THROWS_AS(bergman_diastasis(fake, z, w), Error);
}

TEST_CASE("hyperbolic diastasis") {
    CVector zero{Cplx(0)};
    CHECK(hyperbolic_diastasis(-1.0, zero, zero) == Approx(0.0).margin(1e-15));

    // b = -1/(N+1), w = 0: D = -(N+1) log(1 - ||z||^2/(N+1))
    unsigned N = 4;
    double b = -1.0 / (N + 1.0);
    CVector z{Cplx(0.4, 0.2), Cplx(0.1, -0.3), Cplx(0), Cplx(0)};
    CVector zeroN(N, Cplx(0));
    double expected = -(N + 1.0) * std::log(1.0 - squared_norm(z) / (N + 1.0));
    CHECK(hyperbolic_diastasis(b, z, zeroN) == Approx(expected).epsilon(1e-13));
    CHECK_THROWS_AS(hyperbolic_diastasis(0.5, z, zeroN), Error);
}

TEST_CASE("hyperbolic model matches the ball under zeta = sqrt(N+1) z") {
    unsigned N = 3;
    double b = -1.0 / (N + 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        CVector z = random_in_ball(N, 0.7), w = random_in_ball(N, 0.7);
        CVector zs = z, ws = w;
        for (auto& c : zs) c *= std::sqrt(N + 1.0);
        for (auto& c : ws) c *= std::sqrt(N + 1.0);
        double dh = hyperbolic_diastasis(b, zs, ws);
        double db = bergman_diastasis(ball_K(N), z, w);
        CHECK(std::abs(dh - db) < 1e-10 * std::max(1.0, std::abs(db)));
    }
}

TEST_CASE("projective diastasis") {
    CVector Z{Cplx(1), Cplx(0.3, 0.4)};
    CHECK(projective_diastasis(1.0, Z, Z) == Approx(0.0).margin(1e-14));
    CVector W{Cplx(1), Cplx(0)};
    CHECK(projective_diastasis(1.0, Z, W) == Approx(std::log(1.0 + 0.25)));
    for (int rep = 0; rep < 20; ++rep) {
        CVector A = random_in_ball(3, 0.9), B = random_in_ball(3, 0.9);
        A[0] += 1.0;  // keep <A,B> away from 0
        B[0] += 1.0;
        CHECK(projective_diastasis(2.0, A, B) >= -1e-13);
    }
    CVector E1{Cplx(1), Cplx(0)}, E2{Cplx(0), Cplx(1)};
    CHECK_THROWS_AS(projective_diastasis(1.0, E1, E2), Error);
}

TEST_CASE("rescaling multiplies the diastasis by exactly lambda") {
    CVector z = random_in_ball(2), w = random_in_ball(2);
    Rational lambda(7, 3);
    auto dv = bergman_diastasis_rescaled(ball_K(2), lambda, z, w);
    double unit = bergman_diastasis(ball_K(2), z, w);
    CHECK(dv.value == lambda.to_double() * unit);  // exact double identity
    CHECK(dv.unscaled() == Approx(unit));
}

TEST_CASE("Mobius maps preserve the ball diastasis") {
    for (unsigned n = 1; n <= 2; ++n) {
        CVector a = random_in_ball(n, 0.5);
        for (int rep = 0; rep < 10; ++rep) {
            CVector z = random_in_ball(n, 0.7), w = random_in_ball(n, 0.7);
            double before = bergman_diastasis(ball_K(n), z, w);
            double after = bergman_diastasis(ball_K(n), ball_mobius(a, z), ball_mobius(a, w));
            CHECK(std::abs(before - after) < 1e-10 * std::max(1.0, before));
        }
    }
}
