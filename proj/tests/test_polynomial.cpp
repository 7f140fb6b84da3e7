#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bergman/polynomial.hpp"

using namespace bergman;

namespace {

RationalPolynomial random_poly(std::mt19937_64& rng, unsigned max_deg) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    unsigned d = deg(rng);
    std::vector<Rational> c(d + 1);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    if (c.back().is_zero()) c.back() = Rational(1);
    return RationalPolynomial(std::move(c));
}

} // namespace

TEST_CASE("polynomial arithmetic and normalization") {
    RationalPolynomial p{Rational(1), Rational(2)};
    RationalPolynomial q{Rational(-1), Rational(1)};
    CHECK((p * q).coefficients() == std::vector<Rational>{Rational(-1), Rational(-1), Rational(2)});
    CHECK((p + q).coefficients() == std::vector<Rational>{Rational(0), Rational(3)});
    CHECK((p - p).is_zero());
    CHECK(p.evaluate(Rational(3)) == Rational(7));
    CHECK(p.evaluate(0.5) == Catch::Approx(2.0));
    RationalPolynomial z{Rational(1), Rational(1), Rational(0), Rational(0)};
    CHECK(z.degree() == 1);
}

TEST_CASE("divmod is exact euclidean division") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        RationalPolynomial a = random_poly(rng, 8);
        RationalPolynomial b = random_poly(rng, 4);
        auto [quot, rem] = a.divmod(b);
        CHECK(quot * b + rem == a);
        CHECK((rem.is_zero() || rem.degree() < b.degree()));
        CHECK(b.divides(a * b));
    }
}

TEST_CASE("rising factorial basis: stated conversions") {
    // p(k) = 1
    CHECK(to_rising_factorial_basis(RationalPolynomial{Rational(1)}) ==
          std::vector<Rational>{Rational(1)});
    // p(k) = k^2 -> (1, -3, 1), i.e. (k+1)_2 - 3(k+1)_1 + 1 = k^2
    auto c = to_rising_factorial_basis(RationalPolynomial{Rational(0), Rational(0), Rational(1)});
    CHECK(c == std::vector<Rational>{Rational(1), Rational(-3), Rational(1)});
    // basis elements map to unit vectors
    for (unsigned n = 0; n <= 5; ++n) {
        auto e = to_rising_factorial_basis(rising_factorial_basis_element(n));
        for (unsigned j = 0; j <= n; ++j) CHECK(e[j] == (j == n ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("rising factorial basis round trip, degree <= 12") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 40; ++rep) {
        RationalPolynomial p = random_poly(rng, 12);
        CHECK(from_rising_factorial_basis(to_rising_factorial_basis(p)) == p);
    }
}

TEST_CASE("hartogs base polynomial over the ball") {
    // ball(1), s = 1/2: b(k) = k + 1
    auto b = hartogs_base_polynomial_ball(1, Rational(1, 2));
    CHECK(b.coefficients() == std::vector<Rational>{Rational(1), Rational(1)});
    // ball(1), s = 1/3: b(k) = 1 + (2/3) k
    auto b2 = hartogs_base_polynomial_ball(1, Rational(1, 3));
    CHECK(b2.coefficients() == std::vector<Rational>{Rational(1), Rational(2, 3)});
    // ball(n), s = 1/(n+1): b(k) = (k+1)_n / n!
    for (unsigned n = 1; n <= 4; ++n) {
        auto bb = hartogs_base_polynomial_ball(n, Rational(1, static_cast<long long>(n) + 1));
        auto expected = Rational(1, factorial(n)) * rising_factorial_basis_element(n);
        CHECK(bb == expected);
    }
}

TEST_CASE("hartogs base polynomial: factored roots and degree") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> num(1, 6), den(1, 6);
    std::uniform_int_distribution<unsigned> dim(1, 4);
    for (int rep = 0; rep < 25; ++rep) {
        unsigned n = dim(rng);
        Rational s(num(rng), den(rng));
        // some negative s, kept above -1/(n+1)
        if (rep % 3 == 0) s = Rational(-1, static_cast<long long>(n) + 1 + den(rng));
        if (s.is_zero()) continue;
        auto b = hartogs_base_polynomial_ball(n, s);
        CHECK(b.degree() == n);
        REQUIRE(b.factored_form().has_value());
        std::vector<Rational> roots;
        for (const auto& f : b.factored_form()->factors) roots.push_back(f.root());
        std::vector<Rational> expected;
        for (unsigned i = 1; i <= n; ++i)
            expected.push_back(Rational(-static_cast<int>(i)) /
                               (Rational(static_cast<long long>(n) + 1) * s));
        std::sort(roots.begin(), roots.end());
        std::sort(expected.begin(), expected.end());
        CHECK(roots == expected);
        // factored form expands to the stored coefficients
        RationalPolynomial expanded = RationalPolynomial::constant(b.factored_form()->scale);
        for (const auto& f : b.factored_form()->factors)
            expanded = expanded * RationalPolynomial{f.a, f.b};
        CHECK(expanded == b);
    }
}

TEST_CASE("hartogs base polynomial rejects s <= -C and degenerates at s = 0") {
    CHECK_THROWS(hartogs_base_polynomial_ball(1, Rational(-1, 2)));
    CHECK_THROWS(hartogs_base_polynomial_ball(2, Rational(-2, 3)));
    auto b = hartogs_base_polynomial_ball(2, Rational(0));
    CHECK(b.degree() == 0);
    CHECK(b.coefficients() == std::vector<Rational>{Rational(1)});
}

TEST_CASE("general homogeneous base data") {
    HomogeneousBaseData ball2 = HomogeneousBaseData::ball(2);
    CHECK(ball2.min_exponent() == Rational(1, 3));
    CHECK(ball2.exponent(0, 2) == Rational(2, 3));
    // a two-block example with q_k odd exercises the half-integer path
    HomogeneousBaseData hb{2, {1, 0}, {1, 0}, {0, 1}};
    hb.validate();
    CHECK(hb.exponent(0, 1) == Rational(3, 8));  // (1 + 1/2) / (1+1+0+2)
    auto b = hartogs_base_polynomial(hb, Rational(1, 4));
    CHECK(b.degree() == 4);  // (1+p_1+b_1) + (1+p_2+b_2) = 2 + 2
}

TEST_CASE("chi polynomial closed forms") {
    CHECK(chi_polynomial(1, 2, 0).coefficients() == std::vector<Rational>{Rational(1), Rational(1)});
    // (1,2,n-1) -> (s+1)_n
    for (unsigned n = 1; n <= 5; ++n) {
        auto chi = chi_polynomial(1, 2, n - 1);
        CHECK(chi == rising_factorial_basis_element(n));
    }
    // (2,1,0) -> (s+1)(s+2)(s+3/2) = s^3 + 9/2 s^2 + 13/2 s + 3
    auto chi = chi_polynomial(2, 1, 0);
    CHECK(chi.coefficients() ==
          std::vector<Rational>{Rational(3), Rational(13, 2), Rational(9, 2), Rational(1)});
}

TEST_CASE("egg b_j coefficients") {
    // n = 1, chi = h+1: (b_1, b_2, b_3) = (6, -6, 1)
    auto chi1 = chi_polynomial(1, 2, 0);
    auto bj = egg_bj(chi1, 1);
    CHECK(bj == std::vector<Rational>{Rational(6), Rational(-6), Rational(1)});
    // evaluations of the reconstruction at h = 0 and h = 1 vanish
    Rational at0(0), at1(0);
    for (unsigned j = 1; j <= 3; ++j) {
        at0 += bj[j - 1] * pochhammer(Rational(1), j);
        at1 += bj[j - 1] * pochhammer(Rational(2), j);
    }
    CHECK(at0 == Rational(0));
    CHECK(at1 == Rational(0));
}

TEST_CASE("egg b_j reconstruction is exact for n <= 4") {
    for (unsigned n = 1; n <= 4; ++n) {
        auto chi = chi_polynomial(1, 2, n - 1);
        auto bj = egg_bj(chi, n);
        REQUIRE(bj.size() == n + 2);
        RationalPolynomial rec;
        for (unsigned j = 1; j <= n + 2; ++j)
            rec = rec + bj[j - 1] * rising_factorial_basis_element(j);
        RationalPolynomial lhs = RationalPolynomial{Rational(0), Rational(-1), Rational(1)} * chi;
        CHECK(rec == lhs);
    }
}

TEST_CASE("egg b_j flags malformed chi") {
    // chi = h + 2 does not vanish at -1, so the degree-0 coefficient is nonzero
    RationalPolynomial bad{Rational(2), Rational(1)};
    CHECK_THROWS(egg_bj(bad, 1));
    CHECK_THROWS(egg_bj(chi_polynomial(1, 2, 1), 1));  // degree mismatch
}
