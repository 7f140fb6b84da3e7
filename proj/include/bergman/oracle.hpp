#pragma once

// Independent brute-force Bergman kernel: the three supported domains are
// complete Reinhardt, so monomials are a complete orthogonal system and
// K(z,w) = sum_a z^a conj(w^a) / ||z^a||^2. Monomial norms are computed by
// nested Gauss-Legendre quadrature over the radial profile in t_i = r_i^2,
// with a power substitution at levels whose integrand carries a fractional
// endpoint exponent, so every level integrates a polynomial exactly.

#include <cmath>
#include <algorithm>
#include <string>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/kernels.hpp"
#include "bergman/multiindex.hpp"

namespace bergman {

struct QuadratureSpec {
    unsigned radial_points = 64;        // Gauss-Legendre points per radial level
    unsigned cutoff = 12;               // monomial basis cutoff D (total degree)
    bool verify_refinement = true;      // re-run with a finer grid and compare
    double refinement_tol = 1e-9;       // relative disagreement allowed
    std::string rule = "gauss-legendre";
};

// Gauss-Legendre nodes and weights on [0, 1].
struct GaussLegendre {
    std::vector<double> x, w;

    explicit GaussLegendre(unsigned npts) {
        if (npts < 2) throw Error(ErrorCode::range, "GaussLegendre: need at least 2 points");
        x.resize(npts);
        w.resize(npts);
        for (unsigned i = 0; i < npts; ++i) {
            double t = std::cos(pi * (i + 0.75) / (npts + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (unsigned n2 = 2; n2 <= npts; ++n2) {
                    double p2 = ((2.0 * n2 - 1.0) * t * p1 - (n2 - 1.0) * p0) / n2;
                    p0 = p1;
                    p1 = p2;
                }
                dp = npts * (t * p1 - p0) / (t * t - 1.0);
                double step = p1 / dp;
                t -= step;
                if (std::abs(step) < 1e-15) break;
            }
            x[i] = 0.5 * (1.0 + t);
            w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

namespace detail {

inline double ipow(double base, unsigned e) {
    double r = 1.0;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Integrates f over (0, cap) with Gauss-Legendre. When sigma > 1 the level
// substitutes t = cap (1 - y^sigma), which turns (cap - t)^{e} factors with
// sigma e integral into polynomials in y.
template <class F>
double gl_level(const GaussLegendre& gl, double cap, unsigned sigma, F&& f) {
    if (!(cap > 0.0)) return 0.0;
    double acc = 0.0;
    if (sigma <= 1) {
        for (std::size_t i = 0; i < gl.x.size(); ++i) acc += gl.w[i] * f(cap * gl.x[i]);
        return cap * acc;
    }
    for (std::size_t i = 0; i < gl.x.size(); ++i) {
        double y = gl.x[i];
        double t = cap * (1.0 - ipow(y, sigma));
        acc += gl.w[i] * f(t) * static_cast<double>(sigma) * ipow(y, sigma - 1);
    }
    return cap * acc;
}

} // namespace detail

namespace detail {

// Enough Gauss-Legendre points to integrate the substituted levels exactly:
// after the power substitution every level sees a polynomial in y whose
// degree is bounded by sigma * (cutoff + fractional exponent budget).
inline unsigned oracle_points(const DomainSpec& spec, unsigned cutoff, unsigned user_points) {
    double budget = cutoff + 2.0;
    unsigned sigma = 1;
    if (spec.kind == DomainSpec::Kind::hartogs_over_ball) {
        sigma = (Rational(static_cast<long long>(spec.n) + 1) * spec.s).den().convert_to<unsigned>();
        budget += (spec.n + 1.0) * spec.s.to_double() * (cutoff + spec.m);
    } else if (spec.kind == DomainSpec::Kind::egg_over_ball) {
        sigma = spec.k.num().convert_to<unsigned>();
        budget += (cutoff + spec.q) / spec.k.to_double() + cutoff + spec.p;
    }
    auto needed = static_cast<unsigned>(sigma * budget / 2.0) + 4;
    return std::max(user_points, needed);
}

} // namespace detail

// ||z^a||^2 over the domain by iterated radial integrals. The profile in
// t_i = r_i^2 contributes pi^d * integral of prod t_i^{a_i}.
inline double monomial_norm(const DomainSpec& spec, const MultiIndex& a, const QuadratureSpec& quad) {
    spec.validate();
    const unsigned d = spec.complex_dimension();
    if (a.dim() != d) throw Error(ErrorCode::schema, "monomial_norm: index dimension mismatch");
    if (spec.kind == DomainSpec::Kind::hartogs_over_ball && !(spec.s > Rational(0)))
        throw Error(ErrorCode::range,
                    "monomial_norm: the quadrature oracle requires s > 0 (high fiber degrees are not "
                    "square-integrable otherwise)");
    GaussLegendre gl(detail::oracle_points(spec, quad.cutoff, quad.radial_points));

    const double front = std::pow(pi, static_cast<double>(d));

    if (spec.kind == DomainSpec::Kind::ball) {
        // Nested simplex: t_i in (0, 1 - sum of previous).
        auto rec = [&](auto&& self, unsigned level, double rem) -> double {
            if (level == d) return 1.0;
            return detail::gl_level(gl, rem, 1, [&](double t) {
                return detail::ipow(t, a.e[level]) * self(self, level + 1, rem - t);
            });
        };
        return front * rec(rec, 0, 1.0);
    }

    if (spec.kind == DomainSpec::Kind::hartogs_over_ball) {
        const unsigned n = spec.n, m = spec.m;
        const double sd = spec.s.to_double();
        const double kappa =
            std::pow(std::pow(pi, static_cast<double>(n)) / factorial_d(n), sd);
        // Regularizes (1 - sum t)^{(n+1)s ...} at the outer endpoint.
        unsigned sigma =
            (Rational(static_cast<long long>(n) + 1) * spec.s).den().convert_to<unsigned>();
        auto fiber = [&](auto&& self, unsigned level, double rem) -> double {
            if (level == m) return 1.0;
            return detail::gl_level(gl, rem, 1, [&](double u) {
                return detail::ipow(u, a.e[n + level]) * self(self, level + 1, rem - u);
            });
        };
        auto base = [&](auto&& self, unsigned level, double rem) -> double {
            if (level == n) {
                double cap = kappa * std::pow(rem, (n + 1.0) * sd);
                return fiber(fiber, 0, cap);
            }
            return detail::gl_level(gl, rem, sigma, [&](double t) {
                return detail::ipow(t, a.e[level]) * self(self, level + 1, rem - t);
            });
        };
        return front * base(base, 0, 1.0);
    }

    // Egg: sum v + (sum w)^k < 1 - sum t.
    const unsigned n = spec.n, p = spec.p, q = spec.q;
    const double kd = spec.k.to_double();
    unsigned sigma = spec.k.num().convert_to<unsigned>();  // regularizes (rem)^{.../k}
    auto fiber2 = [&](auto&& self, unsigned level, double rem) -> double {
        if (level == q) return 1.0;
        return detail::gl_level(gl, rem, 1, [&](double u) {
            return detail::ipow(u, a.e[n + p + level]) * self(self, level + 1, rem - u);
        });
    };
    auto fiber1 = [&](auto&& self, unsigned level, double rem) -> double {
        if (level == p) {
            double cap = std::pow(rem, 1.0 / kd);
            return fiber2(fiber2, 0, cap);
        }
        return detail::gl_level(gl, rem, sigma, [&](double v) {
            return detail::ipow(v, a.e[n + level]) * self(self, level + 1, rem - v);
        });
    };
    auto base = [&](auto&& self, unsigned level, double rem) -> double {
        if (level == n) return fiber1(fiber1, 0, rem);
        return detail::gl_level(gl, rem, sigma, [&](double t) {
            return detail::ipow(t, a.e[level]) * self(self, level + 1, rem - t);
        });
    };
    return front * base(base, 0, 1.0);
}

// monomial_norm plus the grid-refinement convergence check: recomputes on a
// finer grid and flags disagreement beyond the configured tolerance.
inline double monomial_norm_checked(const DomainSpec& spec, const MultiIndex& a,
                                    const QuadratureSpec& quad) {
    double nrm = monomial_norm(spec, a, quad);
    QuadratureSpec finer = quad;
    finer.radial_points = detail::oracle_points(spec, quad.cutoff, quad.radial_points) + 16;
    double nrm2 = monomial_norm(spec, a, finer);
    if (!(nrm > 0.0) || std::abs(nrm2 - nrm) > quad.refinement_tol * std::abs(nrm))
        throw Error(ErrorCode::quadrature,
                    "monomial_norm_checked: refinement disagreement for " + a.str());
    return nrm;
}

struct OracleKernelResult {
    Cplx value{0.0, 0.0};
    double tail_estimate = 0.0;
};

// Precomputed monomial-norm table for one domain; evaluation then sums
// z^a conj(w^a)/||z^a||^2 over |a| <= D with a geometric tail estimate from
// the last degree shells.
class OracleKernel {
public:
    OracleKernel(DomainSpec spec, QuadratureSpec quad) : spec_(std::move(spec)), quad_(quad) {
        spec_.validate();
        if (quad_.cutoff < 1) throw Error(ErrorCode::range, "OracleKernel: cutoff must be >= 1");
        indices_ = lex_multiindices(spec_.complex_dimension(), quad_.cutoff);
        norms_.reserve(indices_.size());
        for (const MultiIndex& a : indices_) {
            double nrm = quad_.verify_refinement ? monomial_norm_checked(spec_, a, quad_)
                                                 : monomial_norm(spec_, a, quad_);
            if (!(nrm > 0.0))
                throw Error(ErrorCode::quadrature, "OracleKernel: nonpositive monomial norm");
            norms_.push_back(nrm);
        }
    }

    const DomainSpec& spec() const { return spec_; }
    const std::vector<MultiIndex>& indices() const { return indices_; }
    const std::vector<double>& norms() const { return norms_; }

    OracleKernelResult evaluate(const CVector& z, const CVector& w) const {
        const unsigned d = spec_.complex_dimension();
        if (z.size() != d || w.size() != d)
            throw Error(ErrorCode::schema, "OracleKernel: point dimension mismatch");
        Cplx acc = 0.0;
        std::vector<double> shell(quad_.cutoff + 1, 0.0);
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            const MultiIndex& a = indices_[i];
            Cplx t = monomial(z, a) * std::conj(monomial(w, a)) / norms_[i];
            acc += t;
            shell[a.degree()] += std::abs(t);
        }
        // Geometric decay of the degree shells gives the truncation tail.
        OracleKernelResult res;
        res.value = acc;
        unsigned D = quad_.cutoff;
        double r = 0.0;
        if (shell[D - 1] > 0.0) r = shell[D] / shell[D - 1];
        if (D >= 2 && shell[D - 2] > 0.0) r = std::max(r, shell[D - 1] / shell[D - 2]);
        if (r >= 1.0)
            throw Error(ErrorCode::divergence,
                        "OracleKernel: shell sums do not decay; points too close to the boundary");
        res.tail_estimate = (r > 0.0) ? shell[D] * r / (1.0 - r) : 0.0;
        return res;
    }

private:
    static Cplx monomial(const CVector& z, const MultiIndex& a) {
        Cplx r = 1.0;
        for (std::size_t i = 0; i < z.size(); ++i)
            for (unsigned e = 0; e < a.e[i]; ++e) r *= z[i];
        return r;
    }

    DomainSpec spec_;
    QuadratureSpec quad_;
    std::vector<MultiIndex> indices_;
    std::vector<double> norms_;
};

inline OracleKernelResult oracle_kernel(const DomainSpec& spec, const CVector& z, const CVector& w,
                                        const QuadratureSpec& quad) {
    return OracleKernel(spec, quad).evaluate(z, w);
}

} // namespace bergman
