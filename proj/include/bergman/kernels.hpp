#pragma once

// Closed-form Bergman kernels: unit ball, Hartogs-type domains over the
// ball, and egg domains over the ball, together with the exact coefficient
// data (c(s,j), chi, b_j) those formulas consume. Kernels are stated on the
// diagonal; off-diagonal values polarize ||.||^2 into Hermitian inner
// products with principal branches, which is single-valued here because
// Re(1 - <z,w>) > 0 on the ball.

#include <cmath>
#include <complex>
#include <numbers>
#include <tuple>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/jet.hpp"
#include "bergman/polynomial.hpp"
#include "bergman/rational.hpp"

namespace bergman {

inline constexpr double pi = std::numbers::pi;

inline double factorial_d(unsigned n) {
    double r = 1.0;
    for (unsigned i = 2; i <= n; ++i) r *= static_cast<double>(i);
    return r;
}

inline void require_in_ball(unsigned n, const CVector& z, const char* who) {
    if (z.size() != n) throw Error(ErrorCode::schema, std::string(who) + ": point dimension != n");
    if (!(squared_norm(z) < 1.0))
        throw Error(ErrorCode::outside_domain, std::string(who) + ": point not in the open unit ball");
}

// K_{B^n}(z,w) = (n!/pi^n) (1 - <z,w>)^{-(n+1)}.
inline Cplx ball_kernel(unsigned n, const CVector& z, const CVector& w) {
    require_in_ball(n, z, "ball_kernel");
    require_in_ball(n, w, "ball_kernel");
    Cplx g = Cplx(1.0) - hermitian_inner(z, w);
    return factorial_d(n) / std::pow(pi, static_cast<double>(n)) *
           std::pow(g, -static_cast<double>(n + 1));
}

// K_{B^n}(z,w)^a with the fixed branch (n!/pi^n)^a (1 - <z,w>)^{-(n+1)a}.
inline Cplx ball_kernel_power(unsigned n, const CVector& z, const CVector& w, double a) {
    require_in_ball(n, z, "ball_kernel_power");
    require_in_ball(n, w, "ball_kernel_power");
    Cplx g = Cplx(1.0) - hermitian_inner(z, w);
    double c = factorial_d(n) / std::pow(pi, static_cast<double>(n));
    return std::pow(c, a) * std::pow(g, -static_cast<double>(n + 1) * a);
}

// Generic norm of the ball: 1 - <z,w>; on the diagonal this equals
// (vol(B^n) K(z,z))^{-1/(n+1)}.
inline Cplx ball_generic_norm(unsigned n, const CVector& z, const CVector& w) {
    require_in_ball(n, z, "ball_generic_norm");
    require_in_ball(n, w, "ball_generic_norm");
    return Cplx(1.0) - hermitian_inner(z, w);
}

// ---------------------------------------------------------------------------
// Hartogs-type domains over the ball.

struct HartogsCoefficients {
    unsigned n = 1;
    unsigned m = 1;
    Rational s;
    RationalPolynomial base_poly;         // b(k), factored + expanded
    std::vector<Rational> c;              // c(s,0)..c(s,n)
    Rational S;                           // sum_j c(s,j) (j+m)!
    std::vector<Rational> c_normalized;   // c'(s,j) = c(s,j)/S
};

// Computes b(k) for the ball base, converts to the rising-factorial basis
// to obtain c(s,j), then the normalization S and c'(s,j); all exact.
// s = 0 makes deg b drop to 0 (the product domain, which admits no such
// immersion) and is rejected.
inline HartogsCoefficients hartogs_coefficients(unsigned n, unsigned m, const Rational& s) {
    if (n < 1 || m < 1) throw Error(ErrorCode::range, "hartogs_coefficients: require n, m >= 1");
    if (s.is_zero())
        throw Error(ErrorCode::range,
                    "hartogs_coefficients: s = 0 is degenerate (deg b drops to 0; product domain)");
    HartogsCoefficients out;
    out.n = n;
    out.m = m;
    out.s = s;
    out.base_poly = hartogs_base_polynomial_ball(n, s);
    out.c = to_rising_factorial_basis(out.base_poly);
    out.c.resize(n + 1, Rational(0));
    out.S = Rational(0);
    for (unsigned j = 0; j <= n; ++j) out.S += out.c[j] * Rational(factorial(j + m));
    if (out.S.is_zero()) throw Error(ErrorCode::range, "hartogs_coefficients: degenerate normalization");
    out.c_normalized.resize(n + 1);
    for (unsigned j = 0; j <= n; ++j) out.c_normalized[j] = out.c[j] / out.S;
    return out;
}

// Fiber cap on the diagonal: ||xi||^2 < K_{B^n}(z,z)^{-s}.
inline double hartogs_fiber_cap(unsigned n, const Rational& s, double base_sqnorm) {
    double c = factorial_d(n) / std::pow(pi, static_cast<double>(n));
    double sd = s.to_double();
    return std::pow(c, -sd) * std::pow(1.0 - base_sqnorm, (n + 1.0) * sd);
}

inline bool hartogs_contains(unsigned n, unsigned m, const Rational& s, const CVector& z,
                             const CVector& xi) {
    if (z.size() != n || xi.size() != m) return false;
    double bz = squared_norm(z);
    if (!(bz < 1.0)) return false;
    return squared_norm(xi) < hartogs_fiber_cap(n, s, bz);
}

// K_{Omega_{m,s}}((z,xi),(w,eta)) =
//   K_{B^n}(z,w)^{ms+1} / pi^m  *  sum_j c(s,j)(j+m)! (1-t)^{-(j+m+1)},
//   t = K_{B^n}(z,w)^s <xi,eta>.
inline Cplx hartogs_kernel(const HartogsCoefficients& hc, const CVector& z, const CVector& xi,
                           const CVector& w, const CVector& eta) {
    if (!hartogs_contains(hc.n, hc.m, hc.s, z, xi) || !hartogs_contains(hc.n, hc.m, hc.s, w, eta))
        throw Error(ErrorCode::outside_domain, "hartogs_kernel: point not in the Hartogs domain");
    double sd = hc.s.to_double();
    Cplx t = ball_kernel_power(hc.n, z, w, sd) * hermitian_inner(xi, eta);
    if (!(std::abs(t) < 1.0))
        throw Error(ErrorCode::range, "hartogs_kernel: |t| >= 1, outside the kernel series domain");
    Cplx sum = 0.0;
    for (unsigned j = 0; j <= hc.n; ++j) {
        double cj = hc.c[j].to_double() * factorial_d(j + hc.m);
        sum += cj * std::pow(Cplx(1.0) - t, -static_cast<double>(j + hc.m + 1));
    }
    Cplx head = ball_kernel_power(hc.n, z, w, hc.m * sd + 1.0) /
                std::pow(pi, static_cast<double>(hc.m));
    return head * sum;
}

inline Cplx hartogs_kernel(const DomainSpec& spec, const CVector& pt1, const CVector& pt2) {
    if (spec.kind != DomainSpec::Kind::hartogs_over_ball)
        throw Error(ErrorCode::schema, "hartogs_kernel: spec is not a Hartogs domain");
    if (pt1.size() != spec.n + spec.m || pt2.size() != spec.n + spec.m)
        throw Error(ErrorCode::schema, "hartogs_kernel: point dimension mismatch");
    HartogsCoefficients hc = hartogs_coefficients(spec.n, spec.m, spec.s);
    CVector z(pt1.begin(), pt1.begin() + spec.n), xi(pt1.begin() + spec.n, pt1.end());
    CVector w(pt2.begin(), pt2.begin() + spec.n), eta(pt2.begin() + spec.n, pt2.end());
    return hartogs_kernel(hc, z, xi, w, eta);
}

// ---------------------------------------------------------------------------
// Egg domains over the ball (type II), unit-volume normalization: kernels
// are reported up to one global multiplicative constant, which drops out of
// every diastasis.

struct EggCoefficients {
    unsigned n = 1;
    RationalPolynomial chi;      // chi(s) for the ball base: (s+1)_n
    Rational chi0;               // chi(0) = n!
    std::vector<Rational> bj;    // b_1..b_{n+2}
    unsigned genus = 2;          // g = n + 1
};

inline EggCoefficients egg_coefficients(unsigned n) {
    if (n < 1) throw Error(ErrorCode::range, "egg_coefficients: require n >= 1");
    EggCoefficients out;
    out.n = n;
    out.chi = chi_polynomial(1, 2, n - 1);
    out.chi0 = out.chi.evaluate(Rational(0));
    out.bj = egg_bj(out.chi, n);
    out.genus = n + 1;
    return out;
}

struct EggOptions {
    unsigned hjm_terms = 64;   // truncation order L of the H_{jm} series
    double tail_tol = 1e-9;    // relative tolerance for the reported tail
    double max_abs_u = 0.95;   // convergence radius guard for u
};

struct LambdaTail {
    double estimate = 0.0;     // estimated truncation error of the result
};

// Lambda^{(p-1),(q-1)}(t1,t2) by forward jet propagation, where
//   H_{jm}(u) = sum_l ((l+1)/k + 2 + m)_{j-m} u^l  (truncated at L),
//   H(t1,u)   = sum_j b_j (1-t1)^{-j} sum_m (-j)_m (2)_m t1^m/m! H_{jm}(u),
//   Lambda    = (k/chi(0)) (1-t1)^{-1/k} H(t1, t2 (1-t1)^{-1/k}).
template <class S>
S egg_lambda_partial(const EggCoefficients& ec, const Rational& k, unsigned p, unsigned q, S t1, S t2,
                     const EggOptions& opts = {}, LambdaTail* tail = nullptr) {
    if (p < 1 || q < 1) throw Error(ErrorCode::range, "egg_lambda_partial: require p, q >= 1");
    const std::size_t P = p - 1, Q = q - 1;
    const double kd = k.to_double();
    const unsigned L = opts.hjm_terms;
    const unsigned n = ec.n;

    Jet2<S> j1 = Jet2<S>::variable1(t1, P, Q);
    Jet2<S> j2 = Jet2<S>::variable2(t2, P, Q);
    Jet2<S> one_minus = Jet2<S>::constant(S(1), P, Q) - j1;
    if (detail::scalar_abs(one_minus.value()) == 0.0)
        throw Error(ErrorCode::range, "egg_lambda_partial: t1 = 1 is outside the domain");

    Jet2<S> w = one_minus.real_pow(-1.0 / kd);        // (1-t1)^{-1/k}
    Jet2<S> u = j2 * w;                               // t2 (1-t1)^{-1/k}
    const double abs_u = detail::scalar_abs(u.value());
    if (abs_u >= opts.max_abs_u)
        throw Error(ErrorCode::divergence, "egg_lambda_partial: |u| too close to 1; H_{jm} diverges");

    Jet2<S> inv_one = one_minus.real_pow(-1.0);
    Jet2<S> total = Jet2<S>::constant(S(0), P, Q);
    double tail_value = 0.0;
    const double abs_t1 = detail::scalar_abs(t1);
    const double abs_one = detail::scalar_abs(one_minus.value());

    Jet2<S> pw = Jet2<S>::constant(S(1), P, Q);       // (1-t1)^{-j}, built up
    for (unsigned j = 1; j <= n + 2; ++j) {
        pw = pw * inv_one;
        Jet2<S> inner = Jet2<S>::constant(S(0), P, Q);
        double inner_tail = 0.0;
        Jet2<S> t1pow = Jet2<S>::constant(S(1), P, Q);
        for (unsigned mm = 0; mm <= j; ++mm) {
            // (-j)_m (2)_m / m!  = (-j)_m (m+1)
            Rational coef = pochhammer(Rational(-static_cast<int>(j)), mm) *
                            Rational(static_cast<int>(mm) + 1);
            if (!coef.is_zero()) {
                std::vector<double> h(L + 1);
                for (unsigned l = 0; l <= L; ++l) {
                    Rational arg = Rational(static_cast<int>(l) + 1) / k + Rational(2 + static_cast<int>(mm));
                    h[l] = pochhammer(arg, j - mm).to_double();
                }
                Jet2<S> hjm = jet_polyval(std::span<const double>(h), u);
                inner = inner + coef.to_double() * (t1pow * hjm);

                // Geometric tail of the H_{jm} value: terms a_l u^l with a_l a
                // fixed-degree polynomial in l, so the ratio is eventually
                // |u| (1 + O(1/l)).
                Rational arg_next =
                    Rational(static_cast<int>(L) + 2) / k + Rational(2 + static_cast<int>(mm));
                double a_next = pochhammer(arg_next, j - mm).to_double();
                double ratio_bound = 1.0;
                for (unsigned t = 0; t < j - mm; ++t) {
                    double base = (L + 1.0) / kd + 2.0 + mm + t;
                    ratio_bound *= (base + 1.0 / kd) / base;
                }
                double rho = abs_u * ratio_bound;
                if (rho >= 1.0)
                    throw Error(ErrorCode::divergence, "egg_lambda_partial: H_{jm} tail does not contract");
                inner_tail += std::abs(coef.to_double()) * std::pow(abs_t1, mm) *
                              std::abs(a_next) * std::pow(abs_u, L + 1.0) / (1.0 - rho);
            }
            t1pow = t1pow * j1;
        }
        total = total + ec.bj[j - 1].to_double() * (pw * inner);
        tail_value += std::abs(ec.bj[j - 1].to_double()) * std::pow(abs_one, -static_cast<double>(j)) *
                      inner_tail;
    }

    double head = kd / ec.chi0.to_double();
    Jet2<S> lambda_jet = head * (w * total);
    S result = lambda_jet.mixed_partial(P, Q);

    // Tail estimate for the (P,Q) derivative: the value-level geometric tail
    // inflated by the growth of l^(P+Q) factors and the derivative of the
    // substitution; this is an estimate, not a certified bound.
    double inflation = std::pow(static_cast<double>(L + 2), static_cast<double>(P + Q)) *
                       std::pow(1.0 - abs_u, -static_cast<double>(P + Q + 1)) *
                       factorial_d(static_cast<unsigned>(P)) * factorial_d(static_cast<unsigned>(Q));
    double tail_est = std::abs(head) * std::pow(abs_one, -1.0 / kd) * tail_value * inflation;
    if (tail) tail->estimate = tail_est;
    double scale = std::max(1.0, detail::scalar_abs(result));
    if (tail_est > opts.tail_tol * scale)
        throw Error(ErrorCode::divergence,
                    "egg_lambda_partial: truncation tail estimate exceeds tolerance");
    return result;
}

inline double egg_lambda_derivative(const EggCoefficients& ec, const Rational& k, unsigned p,
                                    unsigned q, double t1, double t2, const EggOptions& opts = {},
                                    LambdaTail* tail = nullptr) {
    if (!(t1 < 1.0)) throw Error(ErrorCode::range, "egg_lambda_derivative: require t1 < 1");
    return egg_lambda_partial<double>(ec, k, p, q, t1, t2, opts, tail);
}

inline bool egg_contains(unsigned n, unsigned p, unsigned q, const Rational& k, const CVector& z,
                         const CVector& xi1, const CVector& xi2) {
    if (z.size() != n || xi1.size() != p || xi2.size() != q) return false;
    double bz = squared_norm(z);
    if (!(bz < 1.0)) return false;
    return squared_norm(xi1) + std::pow(squared_norm(xi2), k.to_double()) < 1.0 - bz;
}

// K_E = (1/(p! q!)) Lambda^{(p-1),(q-1)}(<xi1,eta1>/N, <xi2,eta2>/N^{1/k}) N^{-p-q/k-g},
// N = ball_generic_norm(z,w); reported up to the unit-volume constant.
inline Cplx egg_kernel(const DomainSpec& spec, const EggCoefficients& ec, const CVector& z,
                       const CVector& xi1, const CVector& xi2, const CVector& w, const CVector& eta1,
                       const CVector& eta2, const EggOptions& opts = {}) {
    if (spec.kind != DomainSpec::Kind::egg_over_ball)
        throw Error(ErrorCode::schema, "egg_kernel: spec is not an egg domain");
    if (!egg_contains(spec.n, spec.p, spec.q, spec.k, z, xi1, xi2) ||
        !egg_contains(spec.n, spec.p, spec.q, spec.k, w, eta1, eta2))
        throw Error(ErrorCode::outside_domain, "egg_kernel: point not in the egg domain");
    const double kd = spec.k.to_double();
    const double g = static_cast<double>(ec.genus);
    Cplx N = Cplx(1.0) - hermitian_inner(z, w);
    Cplx t1 = hermitian_inner(xi1, eta1) / N;
    Cplx t2 = hermitian_inner(xi2, eta2) / std::pow(N, 1.0 / kd);
    Cplx lam = egg_lambda_partial<Cplx>(ec, spec.k, spec.p, spec.q, t1, t2, opts);
    Cplx tail_pow = std::pow(N, -(static_cast<double>(spec.p) + static_cast<double>(spec.q) / kd + g));
    return lam * tail_pow / (factorial_d(spec.p) * factorial_d(spec.q));
}

inline Cplx egg_kernel(const DomainSpec& spec, const CVector& pt1, const CVector& pt2,
                       const EggOptions& opts = {}) {
    if (spec.kind != DomainSpec::Kind::egg_over_ball)
        throw Error(ErrorCode::schema, "egg_kernel: spec is not an egg domain");
    unsigned d = spec.n + spec.p + spec.q;
    if (pt1.size() != d || pt2.size() != d)
        throw Error(ErrorCode::schema, "egg_kernel: point dimension mismatch");
    EggCoefficients ec = egg_coefficients(spec.n);
    auto split = [&](const CVector& pt) {
        CVector z(pt.begin(), pt.begin() + spec.n);
        CVector a(pt.begin() + spec.n, pt.begin() + spec.n + spec.p);
        CVector b(pt.begin() + spec.n + spec.p, pt.end());
        return std::make_tuple(z, a, b);
    };
    auto [z, x1, x2] = split(pt1);
    auto [w, e1, e2] = split(pt2);
    return egg_kernel(spec, ec, z, x1, x2, w, e1, e2, opts);
}

// Diagonal kernel dispatch used by the CLI and oracle comparisons.
inline Cplx kernel_value(const DomainSpec& spec, const CVector& pt1, const CVector& pt2) {
    switch (spec.kind) {
        case DomainSpec::Kind::ball: return ball_kernel(spec.n, pt1, pt2);
        case DomainSpec::Kind::hartogs_over_ball: return hartogs_kernel(spec, pt1, pt2);
        case DomainSpec::Kind::egg_over_ball: return egg_kernel(spec, pt1, pt2);
    }
    throw Error(ErrorCode::schema, "kernel_value: unknown domain kind");
}

} // namespace bergman
