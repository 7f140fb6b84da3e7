#pragma once

// Multi-indices over the fiber variables and their enumeration. The paper's
// "lexicographic order" on N^n is not a sequential well-order for n >= 2, so
// the enumeration here is graded-lexicographic: by total degree first, then
// lexicographically within a degree block (earlier variables dominate).

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergman/rational.hpp"

namespace bergman {

struct MultiIndex {
    std::vector<unsigned> e;

    static MultiIndex zero(std::size_t dim) { return MultiIndex{std::vector<unsigned>(dim, 0u)}; }

    std::size_t dim() const { return e.size(); }
    unsigned degree() const { return std::accumulate(e.begin(), e.end(), 0u); }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[i]);
        }
        return s + ")";
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

// True when a precedes b in the enumeration (degree first, then the block
// order of lex_multiindices, which lists (2,0) before (1,1) before (0,2)).
inline bool enumeration_precedes(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("enumeration_precedes: dimension mismatch");
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

struct EnumerationLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return enumeration_precedes(a, b);
    }
};

// All multi-indices of degree <= max_degree in enumeration order, starting
// at the zero index. The count is binom(fiber_dim + max_degree, fiber_dim).
inline std::vector<MultiIndex> lex_multiindices(std::size_t fiber_dim, unsigned max_degree) {
    if (fiber_dim == 0) throw std::invalid_argument("lex_multiindices: fiber_dim must be >= 1");
    std::vector<MultiIndex> out;
    std::vector<unsigned> cur(fiber_dim, 0u);
    auto emit_degree = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos + 1 == fiber_dim) {
            cur[pos] = remaining;
            out.push_back(MultiIndex{cur});
            return;
        }
        for (unsigned v = remaining; v != static_cast<unsigned>(-1); --v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    for (unsigned d = 0; d <= max_degree; ++d) emit_degree(emit_degree, 0, d);
    return out;
}

// |m|! / m! (the multinomial weight attached to ||xi||^{2|m|}).
inline Int multinomial_weight(const MultiIndex& m) {
    Int num = factorial(m.degree());
    for (unsigned ei : m.e) num /= factorial(ei);
    return num;
}

} // namespace bergman
