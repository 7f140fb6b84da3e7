#pragma once

// Model domains (ball, Hartogs over a ball, egg over a ball) with exact
// rational parameters, plus the shared error type. Rational parameters are
// kept exact end to end; decimal inputs are rejected at the parsing layer.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergman/rational.hpp"

namespace bergman {

using Cplx = std::complex<double>;
using CVector = std::vector<Cplx>;

enum class ErrorCode {
    schema,          // malformed configuration or argument structure
    range,           // parameter outside the admissible range
    outside_domain,  // evaluation point not in the open domain
    non_invertible,  // series power with vanishing constant term
    lu_qi_keng,      // off-diagonal kernel zero: diastasis undefined
    divergence,      // series truncation tail above tolerance
    quadrature,      // oracle quadrature failed to converge
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::schema: return "E_SCHEMA";
        case ErrorCode::range: return "E_RANGE";
        case ErrorCode::outside_domain: return "E_OUTSIDE_DOMAIN";
        case ErrorCode::non_invertible: return "E_NON_INVERTIBLE";
        case ErrorCode::lu_qi_keng: return "E_LU_QI_KENG";
        case ErrorCode::divergence: return "E_DIVERGENCE";
        case ErrorCode::quadrature: return "E_QUADRATURE";
    }
    return "E_UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

inline Cplx hermitian_inner(const CVector& z, const CVector& w) {
    if (z.size() != w.size()) throw Error(ErrorCode::schema, "hermitian_inner: dimension mismatch");
    Cplx acc = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) acc += z[i] * std::conj(w[i]);
    return acc;
}

inline double squared_norm(const CVector& z) { return hermitian_inner(z, z).real(); }

struct DomainSpec {
    enum class Kind { ball, hartogs_over_ball, egg_over_ball };

    Kind kind = Kind::ball;
    unsigned n = 1;          // base dimension
    unsigned m = 0;          // Hartogs fiber dimension
    unsigned p = 0, q = 0;   // egg fiber dimensions
    Rational s;              // Hartogs exponent
    Rational k;              // egg exponent, k > 0
    std::optional<unsigned> target_N;  // target ball dimension
    std::optional<Rational> lambda;    // metric rescaling factor

    static DomainSpec Ball(unsigned n) {
        DomainSpec d;
        d.kind = Kind::ball;
        d.n = n;
        d.validate();
        return d;
    }
    static DomainSpec HartogsOverBall(unsigned n, unsigned m, Rational s) {
        DomainSpec d;
        d.kind = Kind::hartogs_over_ball;
        d.n = n;
        d.m = m;
        d.s = std::move(s);
        d.validate();
        return d;
    }
    static DomainSpec EggOverBall(unsigned n, unsigned p, unsigned q, Rational k) {
        DomainSpec d;
        d.kind = Kind::egg_over_ball;
        d.n = n;
        d.p = p;
        d.q = q;
        d.k = std::move(k);
        d.validate();
        return d;
    }

    unsigned complex_dimension() const {
        switch (kind) {
            case Kind::ball: return n;
            case Kind::hartogs_over_ball: return n + m;
            case Kind::egg_over_ball: return n + p + q;
        }
        return 0;
    }

    const char* kind_name() const {
        switch (kind) {
            case Kind::ball: return "ball";
            case Kind::hartogs_over_ball: return "hartogs";
            case Kind::egg_over_ball: return "egg";
        }
        return "?";
    }

    void validate() const {
        if (n < 1) throw Error(ErrorCode::range, "DomainSpec: base dimension n must be >= 1");
        if (kind == Kind::hartogs_over_ball) {
            if (m < 1) throw Error(ErrorCode::range, "DomainSpec: Hartogs fiber dimension m must be >= 1");
            Rational c(1, static_cast<long long>(n) + 1);
            if (!(s > -c))
                throw Error(ErrorCode::range,
                            "DomainSpec: Hartogs exponent requires s > -1/(n+1) = -" + c.str());
        }
        if (kind == Kind::egg_over_ball) {
            if (p < 1 || q < 1)
                throw Error(ErrorCode::range, "DomainSpec: egg fiber dimensions p, q must be >= 1");
            if (!(k > Rational(0))) throw Error(ErrorCode::range, "DomainSpec: egg exponent requires k > 0");
        }
        if (target_N && *target_N < complex_dimension())
            throw Error(ErrorCode::range, "DomainSpec: target N must be >= the complex dimension");
        if (lambda && !(*lambda > Rational(0)))
            throw Error(ErrorCode::range, "DomainSpec: rescaling lambda must be positive");
    }
};

} // namespace bergman
