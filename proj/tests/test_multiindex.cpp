#include <catch2/catch_amalgamated.hpp>

#include "bergman/multiindex.hpp"

using namespace bergman;

namespace {

Int binom_uint(unsigned n, unsigned k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

std::vector<unsigned> flat(const std::vector<MultiIndex>& v, std::size_t i) { return v[i].e; }

} // namespace

TEST_CASE("enumeration matches the fixed convention") {
    auto a = lex_multiindices(1, 2);
    REQUIRE(a.size() == 3);
    CHECK(flat(a, 0) == std::vector<unsigned>{0});
    CHECK(flat(a, 1) == std::vector<unsigned>{1});
    CHECK(flat(a, 2) == std::vector<unsigned>{2});

    auto b = lex_multiindices(2, 1);
    REQUIRE(b.size() == 3);
    CHECK(flat(b, 0) == std::vector<unsigned>{0, 0});
    CHECK(flat(b, 1) == std::vector<unsigned>{1, 0});
    CHECK(flat(b, 2) == std::vector<unsigned>{0, 1});

    auto c = lex_multiindices(2, 2);
    REQUIRE(c.size() == 6);
    CHECK(flat(c, 3) == std::vector<unsigned>{2, 0});
    CHECK(flat(c, 4) == std::vector<unsigned>{1, 1});
    CHECK(flat(c, 5) == std::vector<unsigned>{0, 2});
}

TEST_CASE("enumeration is strictly increasing and complete") {
    for (unsigned dim = 1; dim <= 4; ++dim) {
        for (unsigned maxdeg = 0; maxdeg <= 5; ++maxdeg) {
            auto v = lex_multiindices(dim, maxdeg);
            CHECK(Int(v.size()) == binom_uint(dim + maxdeg, dim));
            CHECK(v.front() == MultiIndex::zero(dim));
            for (std::size_t i = 0; i + 1 < v.size(); ++i) {
                CHECK(enumeration_precedes(v[i], v[i + 1]));
                CHECK_FALSE(enumeration_precedes(v[i + 1], v[i]));
            }
        }
    }
}

TEST_CASE("multinomial weights") {
    CHECK(multinomial_weight(MultiIndex{{1, 1}}) == 2);
    CHECK(multinomial_weight(MultiIndex{{2, 0}}) == 1);
    CHECK(multinomial_weight(MultiIndex{{2, 1, 1}}) == 12);
    CHECK(multinomial_weight(MultiIndex::zero(3)) == 1);
}
