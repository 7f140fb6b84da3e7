#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "bergman/calabi.hpp"
#include "support/alpha_oracle.hpp"

using namespace bergman;
using Catch::Approx;

TEST_CASE("ball collapse: s = 1/(n+1) with mu = 1 leaves a single alpha") {
    for (unsigned n = 1; n <= 2; ++n) {
        unsigned m = 1, N = n + m;  // lambda (n+m+1) = N+1 with lambda = 1
        auto hc = hartogs_coefficients(n, m, Rational(1, static_cast<long long>(n) + 1));
        auto alpha = hartogs_slice_alpha(hc, Rational(1), N, 12);
        double C = hartogs_slice_scale(n, hc.s);
        CHECK(alpha[0] == 0.0);
        CHECK(alpha[1] == Approx(C).epsilon(1e-14));
        for (unsigned v = 2; v <= 12; ++v) CHECK(std::abs(alpha[v]) < 1e-13);
    }
}

TEST_CASE("alpha(0) vanishes identically") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> num(1, 6), den(1, 6), nn(1, 3), mm(1, 3);
    for (int rep = 0; rep < 20; ++rep) {
        unsigned n = nn(rng), m = mm(rng);
        Rational s(num(rng), den(rng));
        Rational lambda(num(rng), den(rng));
        unsigned N = n + m + num(rng);
        auto hc = hartogs_coefficients(n, m, s);
        auto alpha = hartogs_slice_alpha(hc, lambda, N, 8);
        CHECK(alpha[0] == 0.0);
    }
}

TEST_CASE("series alpha agrees with the extended-precision Taylor oracle") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> num(1, 6), den(1, 6), nn(1, 3), mm(1, 3), extra(0, 4);
    for (int rep = 0; rep < 20; ++rep) {
        unsigned n = nn(rng), m = mm(rng);
        Rational s(num(rng), den(rng));
        if (rep % 4 == 0) s = Rational(-1, 7 + den(rng));  // some negative s
        Rational lambda(num(rng), den(rng));
        unsigned N = n + m + extra(rng);
        auto hc = hartogs_coefficients(n, m, s);
        auto fast = hartogs_slice_alpha(hc, lambda, N, 10);
        auto slow = oracle_support::alpha_taylor_oracle(hc, lambda, N, 10);
        for (unsigned v = 1; v <= 10; ++v) CHECK(std::abs(fast[v] - slow[v]) < 1e-9);
    }
}

TEST_CASE("alpha for n=m=1, s=1/3, lambda=1, N=3 against the oracle") {
    auto hc = hartogs_coefficients(1, 1, Rational(1, 3));
    auto fast = hartogs_slice_alpha(hc, Rational(1), 3, 5);
    auto slow = oracle_support::alpha_taylor_oracle(hc, Rational(1), 3, 5);
    for (unsigned v = 1; v <= 5; ++v) CHECK(std::abs(fast[v] - slow[v]) < 1e-9);
}

TEST_CASE("exact multinomial cross-check agrees with the series route") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> num(1, 5), den(1, 5), nn(1, 2), mm(1, 2), extra(0, 3);
    for (int rep = 0; rep < 10; ++rep) {
        unsigned n = nn(rng), m = mm(rng);
        Rational s(num(rng), den(rng));
        Rational lambda(num(rng), den(rng));
        unsigned N = n + m + extra(rng);
        auto hc = hartogs_coefficients(n, m, s);
        auto alpha = hartogs_slice_alpha(hc, lambda, N, 8);
        for (unsigned v = 1; v <= 8; ++v) {
            double cc = alpha_crosscheck(hc, lambda, N, v);
            CHECK(std::abs(alpha[v] - cc) < 1e-10 * std::max(1.0, std::abs(cc)));
        }
    }
}

TEST_CASE("beta weights") {
    std::vector<double> alpha{0.0, 0.5, -0.25, 0.125};
    auto beta2 = beta_from_alpha(alpha, 2, 3);
    CHECK(beta2.at(MultiIndex{{0, 0}}) == 0.0);
    CHECK(beta2.at(MultiIndex{{1, 1}}) == Approx(2.0 * alpha[2]));
    CHECK(beta2.at(MultiIndex{{2, 0}}) == Approx(alpha[2]));
    CHECK(beta2.at(MultiIndex{{2, 1}}) == Approx(3.0 * alpha[3]));
    auto beta1 = beta_from_alpha(alpha, 1, 3);
    for (unsigned r = 0; r <= 3; ++r) CHECK(beta1.at(MultiIndex{{r}}) == alpha[r]);
}

TEST_CASE("calabi diagnostic on the ball case: PSD with rank m") {
    for (unsigned m : {1u, 2u, 3u}) {
        unsigned n = 1;
        unsigned N = n + m;
        auto hc = hartogs_coefficients(n, m, Rational(1, 2));
        SliceExpansion se = make_slice_expansion(hc, Rational(1), N, 10);
        auto diag = calabi_diag_test(se.beta, N);
        CHECK(diag.is_psd);
        CHECK(diag.truncated_rank == m);
        CHECK(diag.is_polynomial);
        CHECK(diag.detected_cutoff == 1);
        CHECK(diag.verdict == CalabiVerdict::consistent_with_immersion);
    }
}

TEST_CASE("any negative diagonal entry defeats PSD") {
    std::map<MultiIndex, double, EnumerationLess> beta;
    beta.emplace(MultiIndex{{0}}, 0.0);
    beta.emplace(MultiIndex{{1}}, 1.0);
    beta.emplace(MultiIndex{{2}}, -1e-6);
    auto diag = calabi_diag_test(beta, 5);
    CHECK_FALSE(diag.is_psd);
    CHECK(diag.verdict == CalabiVerdict::immersion_impossible_at_truncation);
}

TEST_CASE("rank overflow at truncation 30 for n=m=1, s=1/3, lambda=2, N=5") {
    auto hc = hartogs_coefficients(1, 1, Rational(1, 3));
    SliceExpansion se = make_slice_expansion(hc, Rational(2), 5, 30);
    auto diag = calabi_diag_test(se.beta, 5);
    CHECK(diag.truncated_rank > 5);
    CHECK(diag.verdict == CalabiVerdict::immersion_impossible_at_truncation);
}

TEST_CASE("hyperbolic-target law on the pure ball slice at truncation 40") {
    // With s = 1/(n+1) the slice function is 1 - (1-Cx)^mu, whose
    // coefficients are binom(mu,v)(-1)^{v+1} C^v. Ground truth, exactly:
    // finite support <=> mu is a positive integer; all-nonnegative <=> mu <= 1;
    // both (a consistent finite-rank immersion) <=> mu = 1.
    struct Case {
        Rational lambda;
        unsigned N;
        Rational mu;
    };
    // n = m = 1: mu = 3 lambda / (N+1)
    std::vector<Case> cases = {
        {Rational(1), 2, Rational(1)},      {Rational(2), 2, Rational(2)},
        {Rational(3), 2, Rational(3)},      {Rational(1, 2), 2, Rational(1, 2)},
        {Rational(3, 2), 2, Rational(3, 2)},
    };
    const unsigned R = 40;
    auto hc = hartogs_coefficients(1, 1, Rational(1, 2));
    for (const auto& cs : cases) {
        // exact ground truth for the sign/support pattern
        bool finite_support = cs.mu.is_integer() && cs.mu > Rational(0);
        bool all_nonneg = true;
        for (unsigned v = 1; v <= R; ++v) {
            Rational term = binomial(cs.mu, v);
            if (v % 2 == 0) term = -term;
            if (term < Rational(0)) all_nonneg = false;
        }
        CHECK(all_nonneg == (cs.mu <= Rational(1)));

        SliceExpansion se = make_slice_expansion(hc, cs.lambda, cs.N, R);
        CHECK(se.mu == Approx(cs.mu.to_double()));
        auto diag = calabi_diag_test(se.beta, cs.N, 1e-9);
        CHECK(diag.is_psd == all_nonneg);
        if (finite_support) {
            CHECK(diag.is_polynomial);
        } else {
            // infinite support shows up as entries surviving to the
            // truncation edge, as rank overflow, or as a sign violation,
            // depending on how fast C^v shrinks relative to the tolerance
            CHECK((!diag.is_polynomial || diag.truncated_rank > cs.N || !diag.is_psd));
        }
        bool consistent = diag.verdict == CalabiVerdict::consistent_with_immersion;
        CHECK(consistent == (cs.mu == Rational(1)));
    }
}

TEST_CASE("expansion pipeline is deterministic") {
    auto hc = hartogs_coefficients(1, 2, Rational(2, 5));
    SliceExpansion a = make_slice_expansion(hc, Rational(3, 4), 5, 16);
    SliceExpansion b = make_slice_expansion(hc, Rational(3, 4), 5, 16);
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
}
