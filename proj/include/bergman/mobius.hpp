#pragma once

// Standard Mobius automorphisms phi_a of the unit ball and the modulus of
// their complex Jacobian determinant. These are the test fixture for the
// Bergman transformation identity and diastasis invariance.

#include <cmath>
#include <complex>

#include "bergman/domain.hpp"

namespace bergman {

// phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z,a>), with P_a the projection
// onto a, Q_a = I - P_a, s_a = sqrt(1 - ||a||^2). phi_a swaps 0 and a.
inline CVector ball_mobius(const CVector& a, const CVector& z) {
    if (a.size() != z.size()) throw Error(ErrorCode::schema, "ball_mobius: dimension mismatch");
    double a2 = squared_norm(a);
    if (!(a2 < 1.0)) throw Error(ErrorCode::range, "ball_mobius: parameter must lie in the ball");
    if (a2 == 0.0) {
        CVector r(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) r[i] = -z[i];
        return r;
    }
    Cplx za = hermitian_inner(z, a);
    double sa = std::sqrt(1.0 - a2);
    Cplx denom = Cplx(1.0) - za;
    CVector r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        Cplx proj = (za / a2) * a[i];
        r[i] = (a[i] - proj - sa * (z[i] - proj)) / denom;
    }
    return r;
}

// |det_C J(phi_a)(z)|^2 = (1 - ||a||^2)^{n+1} / |1 - <z,a>|^{2(n+1)}.
inline double ball_mobius_jacobian_det_sq(const CVector& a, const CVector& z) {
    if (a.size() != z.size())
        throw Error(ErrorCode::schema, "ball_mobius_jacobian_det_sq: dimension mismatch");
    auto n = static_cast<double>(z.size());
    double a2 = squared_norm(a);
    Cplx denom = Cplx(1.0) - hermitian_inner(z, a);
    return std::pow(1.0 - a2, n + 1.0) / std::pow(std::norm(denom), n + 1.0);
}

} // namespace bergman
