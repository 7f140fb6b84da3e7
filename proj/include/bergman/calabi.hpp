#pragma once

// Expansion machinery for the fiber-slice diastasis of a Hartogs domain:
// Taylor coefficients alpha(v) of
//   1 - ( sum_j c'(s,j)(j+m)! (1 - C x)^{-(j+m+1)} )^{-lambda/(N+1)},
// x = ||xi||^2, C = K_{B^n}(0,0)^s, the induced diagonal beta(r), and the
// positive-semidefinite / rank / polynomiality verdicts of Calabi's local
// criterion restricted to the radial slice (where the matrix is diagonal).

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "bergman/kernels.hpp"
#include "bergman/multiindex.hpp"
#include "bergman/series.hpp"

namespace bergman {

// K_{B^n}(0,0)^s = (n!/pi^n)^s; transcendental, so it lives in doubles.
// All exact algebra downstream works in the substituted variable Y = C X.
inline double hartogs_slice_scale(unsigned n, const Rational& s) {
    return std::pow(factorial_d(n) / std::pow(pi, static_cast<double>(n)), s.to_double());
}

// alpha(0..R) by series arithmetic. The inner sum is assembled with exact
// rational coefficients (its constant term is exactly 1), then raised to
// -lambda/(N+1) with the series power recurrence.
inline std::vector<double> hartogs_slice_alpha(const HartogsCoefficients& hc, const Rational& lambda,
                                               unsigned N, unsigned R) {
    if (!(lambda > Rational(0)))
        throw Error(ErrorCode::range, "hartogs_slice_alpha: require lambda > 0");
    if (R < 1) throw Error(ErrorCode::range, "hartogs_slice_alpha: require R >= 1");
    if (R > 4096) throw Error(ErrorCode::range, "hartogs_slice_alpha: R beyond configured budget");
    const unsigned n = hc.n, m = hc.m;
    const double C = hartogs_slice_scale(n, hc.s);
    const double beta = (lambda / Rational(static_cast<long long>(N) + 1)).to_double();

    PowerSeries<double> inner(R);
    double Cl = 1.0;
    for (unsigned l = 0; l <= R; ++l) {
        Rational acc(0);
        for (unsigned j = 0; j <= n; ++j) {
            // (j+m)! binom(j+m+l, l) = (j+m+l)! / l!
            Rational w = Rational(factorial(j + m + l)) / Rational(factorial(l));
            acc += hc.c_normalized[j] * w;
        }
        inner[l] = acc.to_double() * Cl;
        Cl *= C;
    }

    PowerSeries<double> f = series_real_pow(inner, -beta);
    std::vector<double> alpha(R + 1, 0.0);
    alpha[0] = 1.0 - f[0];  // exactly 0: the inner constant term is exactly 1
    for (unsigned v = 1; v <= R; ++v) alpha[v] = -f[v];
    return alpha;
}

// beta(m_r) = alpha(|m_r|) |m_r|!/m_r! over enumeration-ordered indices of
// degree <= max_degree; beta(0) = 0.
inline std::map<MultiIndex, double, EnumerationLess> beta_from_alpha(const std::vector<double>& alpha,
                                                                     std::size_t fiber_dim,
                                                                     unsigned max_degree) {
    if (alpha.empty() || max_degree + 1 > alpha.size())
        throw Error(ErrorCode::range, "beta_from_alpha: alpha shorter than requested degree");
    std::map<MultiIndex, double, EnumerationLess> out;
    for (const MultiIndex& mi : lex_multiindices(fiber_dim, max_degree)) {
        double w = multinomial_weight(mi).convert_to<double>();
        out.emplace(mi, alpha[mi.degree()] * w);
    }
    return out;
}

struct SliceExpansion {
    double C = 1.0;                // K_{B^n}(0,0)^s
    std::vector<double> alpha;     // alpha(0..R)
    std::map<MultiIndex, double, EnumerationLess> beta;
    double mu = 1.0;               // lambda (n+m+1)/(N+1)
    Rational lambda_over_np1;      // lambda/(N+1), exact
};

inline SliceExpansion make_slice_expansion(const HartogsCoefficients& hc, const Rational& lambda,
                                           unsigned N, unsigned R) {
    SliceExpansion se;
    se.C = hartogs_slice_scale(hc.n, hc.s);
    se.alpha = hartogs_slice_alpha(hc, lambda, N, R);
    se.beta = beta_from_alpha(se.alpha, hc.m, R);
    se.lambda_over_np1 = lambda / Rational(static_cast<long long>(N) + 1);
    se.mu = (se.lambda_over_np1 * Rational(static_cast<long long>(hc.n) + hc.m + 1)).to_double();
    return se;
}

enum class CalabiVerdict { consistent_with_immersion, immersion_impossible_at_truncation };

inline const char* calabi_verdict_name(CalabiVerdict v) {
    return v == CalabiVerdict::consistent_with_immersion ? "consistent_with_immersion"
                                                         : "immersion_impossible_at_truncation";
}

struct CalabiDiagnostic {
    std::vector<double> diagonal;    // (N+1) beta(r), enumeration order
    std::vector<unsigned> degrees;   // total degree per entry
    unsigned max_degree = 0;         // truncation degree of the input
    bool is_psd = false;
    unsigned truncated_rank = 0;
    bool is_polynomial = false;
    unsigned detected_cutoff = 0;    // max degree carrying an entry above tolerance
    double tolerance = 1e-10;
    CalabiVerdict verdict = CalabiVerdict::immersion_impossible_at_truncation;
};

// Verdict over the diagonal entries (N+1) beta(r). Every verdict carries the
// truncation caveat: "consistent" means consistent at this truncation.
inline CalabiDiagnostic calabi_diag_test(const std::map<MultiIndex, double, EnumerationLess>& beta,
                                         unsigned N, double tol = 1e-10) {
    CalabiDiagnostic d;
    d.tolerance = tol;
    double scale = static_cast<double>(N) + 1.0;
    for (const auto& [mi, b] : beta) {
        d.diagonal.push_back(scale * b);
        d.degrees.push_back(mi.degree());
        d.max_degree = std::max(d.max_degree, mi.degree());
    }
    d.is_psd = true;
    d.truncated_rank = 0;
    d.detected_cutoff = 0;
    for (std::size_t i = 0; i < d.diagonal.size(); ++i) {
        if (d.diagonal[i] < -tol) d.is_psd = false;
        if (d.diagonal[i] > tol) ++d.truncated_rank;
        if (std::abs(d.diagonal[i]) > tol) d.detected_cutoff = std::max(d.detected_cutoff, d.degrees[i]);
    }
    d.is_polynomial = d.detected_cutoff < d.max_degree;
    d.verdict = (!d.is_psd || d.truncated_rank > N)
                    ? CalabiVerdict::immersion_impossible_at_truncation
                    : CalabiVerdict::consistent_with_immersion;
    return d;
}

// ---------------------------------------------------------------------------
// Exact cross-check of alpha(v) by the resummed double expansion. Factoring
// C^v out leaves an exact rational: alpha(v) = rho(v) C^v with
//   rho(v) = (-1)^{v+1} sum_{l>=0} binom(beta+l-1, l) *
//            sum_{|a|=l, a in N^{n+2}} (l!/a!) (-1)^{l-a_{n+2}}
//            prod_{j=1..n+1} (c'(s,j-1)(j-1+m)!)^{a_j} binom(mu + E_a, v),
//   E_a = sum_{j=1..n+1} (n-j+1) a_j,  beta = lambda/(N+1),
//   mu = lambda(n+m+1)/(N+1).
// Blocks with l > v vanish identically (the inner deviation has positive
// valuation), so the l-sum is finite.

inline Rational alpha_crosscheck_exact(const HartogsCoefficients& hc, const Rational& lambda,
                                       unsigned N, unsigned v) {
    if (v == 0) return Rational(0);
    const unsigned n = hc.n, m = hc.m;
    const Rational beta = lambda / Rational(static_cast<long long>(N) + 1);
    const Rational mu = beta * Rational(static_cast<long long>(n) + m + 1);

    std::vector<Rational> base(n + 1);  // c'(s,j-1) (j-1+m)! for slot j = 1..n+1
    for (unsigned j = 0; j <= n; ++j) base[j] = hc.c_normalized[j] * Rational(factorial(j + m));

    // Blocks with l > v are identically zero, so l runs to v; the spec'd
    // stopping rule (five consecutive vanishing blocks) can only fire there.
    Rational total(0);
    for (unsigned l = 0; l <= v; ++l) {
        Rational block(0);
        for (const MultiIndex& a : lex_multiindices(n + 2, l)) {
            if (a.degree() != l) continue;
            Rational term(multinomial_weight(a));
            unsigned fiber_weight = l - a.e[n + 1];
            if (fiber_weight % 2 == 1) term = -term;
            long E = 0;
            bool zero = false;
            for (unsigned j = 1; j <= n + 1 && !zero; ++j) {
                if (a.e[j - 1] == 0) continue;
                if (base[j - 1].is_zero()) zero = true;
                else {
                    term *= pow_int(base[j - 1], a.e[j - 1]);
                    E += static_cast<long>(n - j + 1) * a.e[j - 1];
                }
            }
            if (zero) continue;
            term *= binomial<Rational>(mu + Rational(E), v);
            block += term;
        }
        block *= negative_binomial_coeff(beta, l);
        total += block;
    }
    if (v % 2 == 0) total = -total;
    return total;
}

inline double alpha_crosscheck(const HartogsCoefficients& hc, const Rational& lambda, unsigned N,
                               unsigned v) {
    double C = hartogs_slice_scale(hc.n, hc.s);
    return alpha_crosscheck_exact(hc, lambda, N, v).to_double() * std::pow(C, static_cast<double>(v));
}

} // namespace bergman
