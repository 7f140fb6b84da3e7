#pragma once

// Dense univariate polynomials with exact rational coefficients, optionally
// carrying a factored linear form. The rising-factorial basis conversion in
// this header is what turns kernel formulas into coefficient sequences, so
// everything stays exact.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergman/rational.hpp"

namespace bergman {

// A linear factor a + b*k of a factored polynomial.
struct LinearFactor {
    Rational a;
    Rational b;

    // Root -a/b; only meaningful when b != 0.
    Rational root() const {
        if (b.is_zero()) throw std::domain_error("LinearFactor::root: constant factor");
        return -a / b;
    }
    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

struct FactoredForm {
    Rational scale{1};
    std::vector<LinearFactor> factors;
    friend bool operator==(const FactoredForm&, const FactoredForm&) = default;
};

class RationalPolynomial {
public:
    RationalPolynomial() : c_{Rational(0)} {}
    explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }
    RationalPolynomial(std::initializer_list<Rational> coeffs)
        : RationalPolynomial(std::vector<Rational>(coeffs)) {}

    static RationalPolynomial constant(Rational c) { return RationalPolynomial({std::move(c)}); }

    // Builds scale * prod (a_i + b_i k), keeping both the factored form and
    // its exact expansion.
    static RationalPolynomial from_factors(FactoredForm f) {
        RationalPolynomial p = constant(f.scale);
        for (const auto& lf : f.factors) p = p * RationalPolynomial({lf.a, lf.b});
        p.factored_ = std::move(f);
        return p;
    }

    const std::vector<Rational>& coefficients() const { return c_; }
    const std::optional<FactoredForm>& factored_form() const { return factored_; }

    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    std::size_t degree() const { return c_.size() - 1; }
    const Rational& leading() const { return c_.back(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    template <class T>
    T evaluate(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + coeff_as<T>(c_[i]);
        }
        return acc;
    }

    RationalPolynomial operator-() const {
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return RationalPolynomial(std::move(r));
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return RationalPolynomial(std::move(r));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a + (-b);
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return RationalPolynomial();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return RationalPolynomial(std::move(r));
    }
    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
        std::vector<Rational> r(p.c_.size());
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
        return RationalPolynomial(std::move(r));
    }

    RationalPolynomial pow(unsigned e) const {
        RationalPolynomial r = constant(Rational(1));
        RationalPolynomial b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // Exact euclidean division: *this = q * d + r with deg r < deg d.
    struct DivMod;
    DivMod divmod(const RationalPolynomial& d) const;
    bool divides(const RationalPolynomial& dividend) const;

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.c_ == b.c_;
    }

    std::string str(const std::string& var = "k") const {
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero() && !(c_.size() == 1)) continue;
            if (!out.empty()) out += " + ";
            out += c_[i].str();
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    template <class T>
    static T coeff_as(const Rational& r) {
        if constexpr (std::is_same_v<T, Rational>) return r;
        else return T(r.to_double());
    }

    void normalize() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) c_.push_back(Rational(0));
    }

    std::vector<Rational> c_;
    std::optional<FactoredForm> factored_;
};

struct RationalPolynomial::DivMod {
    RationalPolynomial quotient;
    RationalPolynomial remainder;
};

inline RationalPolynomial::DivMod RationalPolynomial::divmod(const RationalPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("RationalPolynomial: division by zero polynomial");
    RationalPolynomial r = *this;
    std::vector<Rational> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 1, Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = r.degree() - d.degree();
        Rational factor = r.leading() / d.leading();
        q[shift] = factor;
        std::vector<Rational> sub(shift + d.c_.size(), Rational(0));
        for (std::size_t i = 0; i < d.c_.size(); ++i) sub[shift + i] = factor * d.c_[i];
        r = r - RationalPolynomial(std::move(sub));
    }
    DivMod out;
    out.quotient = RationalPolynomial(std::move(q));
    out.remainder = r;
    return out;
}

inline bool RationalPolynomial::divides(const RationalPolynomial& dividend) const {
    return dividend.divmod(*this).remainder.is_zero();
}

// (x + 1)_j as a polynomial in x; the basis {(x+1)_j} is triangular with
// unit leading coefficients, so conversions below are exact solves.
inline RationalPolynomial rising_factorial_basis_element(unsigned j) {
    RationalPolynomial p = RationalPolynomial::constant(Rational(1));
    for (unsigned t = 1; t <= j; ++t) p = p * RationalPolynomial({Rational(static_cast<int>(t)), Rational(1)});
    return p;
}

// Coefficients c_0..c_d with p(x) = sum_j c_j (x+1)_j.
inline std::vector<Rational> to_rising_factorial_basis(const RationalPolynomial& p) {
    std::vector<Rational> out(p.degree() + 1, Rational(0));
    RationalPolynomial rem = p;
    for (std::size_t j = p.degree() + 1; j-- > 0;) {
        if (rem.is_zero()) break;
        if (rem.degree() == j) {
            out[j] = rem.leading();
            rem = rem - out[j] * rising_factorial_basis_element(static_cast<unsigned>(j));
        }
    }
    if (!rem.is_zero()) throw std::logic_error("to_rising_factorial_basis: nonzero residue");
    return out;
}

inline RationalPolynomial from_rising_factorial_basis(const std::vector<Rational>& c) {
    RationalPolynomial p;
    for (std::size_t j = 0; j < c.size(); ++j)
        p = p + c[j] * rising_factorial_basis_element(static_cast<unsigned>(j));
    return p;
}

// Invariants {p_k, q_k, b_k} of a bounded homogeneous domain, with the
// derived exponents a_{ki} = (i + q_k/2) / (p_k + q_k + b_k + 2) and
// C = min a_{ki}. Only the ball specialization is built in; other bases are
// accepted as explicit data for the coefficient algebra.
struct HomogeneousBaseData {
    unsigned rank = 1;
    std::vector<unsigned> p, q, b;

    static HomogeneousBaseData ball(unsigned n) {
        if (n == 0) throw std::domain_error("HomogeneousBaseData::ball: n must be >= 1");
        return HomogeneousBaseData{1, {0}, {0}, {n - 1}};
    }

    unsigned block_length(unsigned k) const { return 1 + p[k] + b[k]; }

    Rational exponent(unsigned k, unsigned i) const {  // a_{ki}, 1 <= i <= 1+p_k+b_k
        Rational num = Rational(static_cast<int>(i)) + Rational(static_cast<int>(q[k]), 2);
        Rational den = Rational(static_cast<int>(p[k] + q[k] + b[k] + 2));
        return num / den;
    }

    Rational min_exponent() const {  // C_Omega
        std::optional<Rational> best;
        for (unsigned k = 0; k < rank; ++k)
            for (unsigned i = 1; i <= block_length(k); ++i) {
                Rational a = exponent(k, i);
                if (!best || a < *best) best = a;
            }
        if (!best || !(*best > Rational(0)))
            throw std::domain_error("HomogeneousBaseData: C_Omega must be positive");
        return *best;
    }

    void validate() const {
        if (rank == 0 || p.size() != rank || q.size() != rank || b.size() != rank)
            throw std::invalid_argument("HomogeneousBaseData: block lists must have length rank");
        (void)min_exponent();
    }
};

// b(k) = F(sk) = prod_{k,i} (1 + s k / a_{ki}), delivered in factored form
// plus its exact expansion. For the ball base this is
// (1/n!) prod_{i=1..n} (i + (n+1) s k). Degree drops to 0 iff s = 0.
inline RationalPolynomial hartogs_base_polynomial(const HomogeneousBaseData& base, const Rational& s) {
    base.validate();
    Rational c_omega = base.min_exponent();
    if (!(s > -c_omega))
        throw std::domain_error("hartogs_base_polynomial: require s > -C, C = " + c_omega.str());
    FactoredForm f;
    for (unsigned k = 0; k < base.rank; ++k)
        for (unsigned i = 1; i <= base.block_length(k); ++i)
            f.factors.push_back(LinearFactor{Rational(1), s / base.exponent(k, i)});
    return RationalPolynomial::from_factors(std::move(f));
}

inline RationalPolynomial hartogs_base_polynomial_ball(unsigned n, const Rational& s) {
    return hartogs_base_polynomial(HomogeneousBaseData::ball(n), s);
}

// chi(s) = prod_{j=1..r} (s + 1 + (j-1) a/2)_{1 + b + (r-j) a} for an
// irreducible symmetric domain of rank r and invariants a, b.
inline RationalPolynomial chi_polynomial(unsigned r, unsigned a, unsigned b) {
    if (r == 0) throw std::domain_error("chi_polynomial: rank must be >= 1");
    FactoredForm f;
    for (unsigned j = 1; j <= r; ++j) {
        Rational start = Rational(1) + Rational(static_cast<int>((j - 1) * a), 2);
        unsigned len = 1 + b + (r - j) * a;
        for (unsigned t = 0; t < len; ++t)
            f.factors.push_back(LinearFactor{start + Rational(static_cast<int>(t)), Rational(1)});
    }
    return RationalPolynomial::from_factors(std::move(f));
}

// Coefficients b_1..b_{n+2} of h(h-1)chi(h) = sum_{j=1..n+2} b_j (h+1)_j.
// The (h+1)_0 coefficient must vanish (chi(-1) = 0 for any valid chi); a
// nonzero value means the input polynomial is malformed.
inline std::vector<Rational> egg_bj(const RationalPolynomial& chi, unsigned n) {
    if (chi.degree() != n)
        throw std::invalid_argument("egg_bj: deg(chi) must equal n");
    RationalPolynomial h_h1{Rational(0), Rational(-1), Rational(1)};  // h(h-1)
    std::vector<Rational> full = to_rising_factorial_basis(h_h1 * chi);
    if (!full[0].is_zero())
        throw std::domain_error("egg_bj: nonzero degree-0 basis coefficient; chi is malformed");
    return std::vector<Rational>(full.begin() + 1, full.end());  // b_1..b_{n+2}
}

} // namespace bergman
