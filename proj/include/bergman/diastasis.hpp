#pragma once

// Diastasis functions: Bergman metrics via their kernels, and the
// hyperbolic / projective space forms F(N, b). Rescaling the metric by
// lambda multiplies every diastasis by exactly lambda.

#include <cmath>
#include <complex>

#include "bergman/domain.hpp"
#include "bergman/rational.hpp"

namespace bergman {

struct DiastasisValue {
    double value = 0.0;
    Rational scale{1};  // the metric rescaling already applied

    double unscaled() const { return value / scale.to_double(); }
};

// D(z,w) = log( K(z,z) K(w,w) / |K(z,w)|^2 ) for any kernel evaluator.
// Signals a Lu Qi-Keng violation when K(z,w) = 0.
template <class KernelFn>
double bergman_diastasis(KernelFn&& kernel, const CVector& z, const CVector& w) {
    double kzz = std::real(Cplx(kernel(z, z)));
    double kww = std::real(Cplx(kernel(w, w)));
    Cplx kzw = kernel(z, w);
    double cross = std::norm(kzw);
    if (!(cross > 0.0))
        throw Error(ErrorCode::lu_qi_keng, "bergman_diastasis: K(z,w) = 0, diastasis undefined");
    return std::log(kzz * kww / cross);
}

template <class KernelFn>
DiastasisValue bergman_diastasis_rescaled(KernelFn&& kernel, const Rational& lambda, const CVector& z,
                                          const CVector& w) {
    double d = bergman_diastasis(std::forward<KernelFn>(kernel), z, w);
    return DiastasisValue{lambda.to_double() * d, lambda};
}

// Space form F(N, b), b < 0, in Bochner coordinates centered at the
// reference point:
//   D(z,w) = (1/b) [ log(1+b||z||^2) + log(1+b||w||^2) - log|1+b<z,w>|^2 ].
// Points must lie in the model ball of radius 1/sqrt(-b).
inline double hyperbolic_diastasis(double b, const CVector& z, const CVector& w) {
    if (!(b < 0.0)) throw Error(ErrorCode::range, "hyperbolic_diastasis: require b < 0");
    double z2 = squared_norm(z), w2 = squared_norm(w);
    if (!(1.0 + b * z2 > 0.0) || !(1.0 + b * w2 > 0.0))
        throw Error(ErrorCode::outside_domain, "hyperbolic_diastasis: point outside the model ball");
    Cplx cross = Cplx(1.0) + b * hermitian_inner(z, w);
    return (std::log(1.0 + b * z2) + std::log(1.0 + b * w2) - std::log(std::norm(cross))) / b;
}

// F(N, b), b > 0, in homogeneous coordinates:
//   D(Z,W) = (1/b) log( ||Z||^2 ||W||^2 / |<Z,W>|^2 ).
inline double projective_diastasis(double b, const CVector& Z, const CVector& W) {
    if (!(b > 0.0)) throw Error(ErrorCode::range, "projective_diastasis: require b > 0");
    double z2 = squared_norm(Z), w2 = squared_norm(W);
    if (!(z2 > 0.0) || !(w2 > 0.0))
        throw Error(ErrorCode::schema, "projective_diastasis: homogeneous vectors must be nonzero");
    double cross = std::norm(hermitian_inner(Z, W));
    if (!(cross > 0.0))
        throw Error(ErrorCode::lu_qi_keng, "projective_diastasis: orthogonal pair, diastasis infinite");
    return std::log(z2 * w2 / cross) / b;
}

} // namespace bergman
