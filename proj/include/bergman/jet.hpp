#pragma once

// Order-(P,Q) bivariate Taylor jets: all mixed partials through
// d^{i+j}/dt1^i dt2^j at a base point, propagated forward through
// arithmetic and real powers. Mixed partials of the egg-domain kernel
// factor come from these jets rather than symbolic differentiation.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "bergman/series.hpp"

namespace bergman {

template <class S>
class Jet2 {
public:
    Jet2(std::size_t P, std::size_t Q) : P_(P), Q_(Q), c_((P + 1) * (Q + 1), S{}) {}

    static Jet2 constant(const S& v, std::size_t P, std::size_t Q) {
        Jet2 j(P, Q);
        j.at(0, 0) = v;
        return j;
    }
    // Coordinate jets: base value plus unit first derivative in one slot.
    static Jet2 variable1(const S& base, std::size_t P, std::size_t Q) {
        Jet2 j = constant(base, P, Q);
        if (P >= 1) j.at(1, 0) = S(1);
        return j;
    }
    static Jet2 variable2(const S& base, std::size_t P, std::size_t Q) {
        Jet2 j = constant(base, P, Q);
        if (Q >= 1) j.at(0, 1) = S(1);
        return j;
    }

    std::size_t order1() const { return P_; }
    std::size_t order2() const { return Q_; }

    const S& coeff(std::size_t i, std::size_t j) const { return c_[i * (Q_ + 1) + j]; }
    S& at(std::size_t i, std::size_t j) { return c_[i * (Q_ + 1) + j]; }

    S value() const { return coeff(0, 0); }

    // d^{i+j} f / dt1^i dt2^j at the base point.
    S mixed_partial(std::size_t i, std::size_t j) const {
        if (i > P_ || j > Q_) throw std::out_of_range("Jet2::mixed_partial: order exceeds jet order");
        double f = 1.0;
        for (std::size_t t = 2; t <= i; ++t) f *= static_cast<double>(t);
        for (std::size_t t = 2; t <= j; ++t) f *= static_cast<double>(t);
        return S(f) * coeff(i, j);
    }

    Jet2 operator-() const {
        Jet2 r(P_, Q_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend Jet2 operator+(const Jet2& a, const Jet2& b) {
        a.check_shape(b);
        Jet2 r(a.P_, a.Q_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        a.check_shape(b);
        Jet2 r(a.P_, a.Q_);
        for (std::size_t i = 0; i <= a.P_; ++i)
            for (std::size_t j = 0; j <= a.Q_; ++j) {
                S acc{};
                for (std::size_t r0 = 0; r0 <= i; ++r0)
                    for (std::size_t s0 = 0; s0 <= j; ++s0)
                        acc += a.coeff(r0, s0) * b.coeff(i - r0, j - s0);
                r.at(i, j) = acc;
            }
        return r;
    }
    friend Jet2 operator*(const S& s, const Jet2& a) {
        Jet2 r(a.P_, a.Q_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

    // f^c by the bivariate power recurrence: row 0 is the univariate
    // recurrence in t2, then d1(f^c) f = c d1f f^c fills the rows.
    Jet2 real_pow(double c) const {
        long ci = 0;
        if (detail::nearly_integer(c, ci) && ci >= 0) return pow_uint(static_cast<unsigned long>(ci));

        const S f00 = coeff(0, 0);
        if (detail::scalar_abs(f00) == 0.0)
            throw std::domain_error("Jet2::real_pow: non-invertible input (f(0,0) = 0)");

        Jet2 h(P_, Q_);
        {
            PowerSeries<S> row0(Q_);
            for (std::size_t j = 0; j <= Q_; ++j) row0[j] = coeff(0, j);
            PowerSeries<S> rp = series_real_pow(row0, c);
            for (std::size_t j = 0; j <= Q_; ++j) h.at(0, j) = rp[j];
        }
        for (std::size_t i = 1; i <= P_; ++i)
            for (std::size_t j = 0; j <= Q_; ++j) {
                S acc{};
                for (std::size_t r0 = 1; r0 <= i; ++r0)
                    for (std::size_t s0 = 0; s0 <= j; ++s0) {
                        S term = S(static_cast<double>(r0)) * coeff(r0, s0) * h.coeff(i - r0, j - s0);
                        acc += S(c) * term;
                        if (!(r0 == i && s0 == j))
                            acc -= S(static_cast<double>(r0)) * h.coeff(r0, s0) * coeff(i - r0, j - s0);
                    }
                h.at(i, j) = acc / (S(static_cast<double>(i)) * f00);
            }
        return h;
    }

    Jet2 pow_uint(unsigned long e) const {
        Jet2 r = constant(S(1), P_, Q_);
        Jet2 b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

private:
    void check_shape(const Jet2& o) const {
        if (P_ != o.P_ || Q_ != o.Q_) throw std::invalid_argument("Jet2: jet order mismatch");
    }

    std::size_t P_, Q_;
    std::vector<S> c_;
};

// d^{P+Q} f / dt1^P dt2^Q of a composed jet expression at its base point.
template <class S>
S jet_mixed_partial(const Jet2<S>& expression, std::size_t P, std::size_t Q) {
    return expression.mixed_partial(P, Q);
}

// Horner evaluation of sum_l coeffs[l] u^l with a jet argument.
template <class S, class C>
Jet2<S> jet_polyval(std::span<const C> coeffs, const Jet2<S>& u) {
    Jet2<S> acc = Jet2<S>::constant(S{}, u.order1(), u.order2());
    for (std::size_t l = coeffs.size(); l-- > 0;) {
        acc = acc * u + Jet2<S>::constant(S(coeffs[l]), u.order1(), u.order2());
    }
    return acc;
}

// exp(f): exp(f00) * sum_{l <= P+Q} (f - f00)^l / l!, exact through the jet
// order because f - f00 has no constant term.
template <class S>
Jet2<S> jet_exp(const Jet2<S>& f) {
    using std::exp;
    const S f00 = f.value();
    Jet2<S> d = f - Jet2<S>::constant(f00, f.order1(), f.order2());
    std::size_t terms = f.order1() + f.order2();
    std::vector<S> coeffs(terms + 1);
    double fact = 1.0;
    for (std::size_t l = 0; l <= terms; ++l) {
        if (l >= 2) fact *= static_cast<double>(l);
        coeffs[l] = S(1.0) / S(fact);
    }
    return exp(f00) * jet_polyval(std::span<const S>(coeffs), d);
}

} // namespace bergman
