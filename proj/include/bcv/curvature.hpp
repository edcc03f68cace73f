#pragma once

#include "bcv/types.hpp"

namespace bcv {

// Curvature sign convention: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
// - nabla_{[X,Y]} Z, and R(X,Y,Z,W) = <R(X,Y)W, Z>.
//
// In any orthonormal frame whose third vector is the vertical field E3, the
// curvature tensor of the two-parameter model has the closed form below.
// The arguments are frame components; <., E3> is then just the third slot.
inline FrameVec curvature_op(const BcvParams& par, const FrameVec& X, const FrameVec& Y,
                             const FrameVec& Z) {
    const double l2 = par.l * par.l;
    const double k1 = 4.0 * par.m - 0.75 * l2; // sectional curvature of horizontal planes
    const double k2 = 4.0 * par.m - l2;
    const FrameVec e3{0.0, 0.0, 1.0};
    const FrameVec t1 = dot(Y, Z) * X - dot(X, Z) * Y;
    const FrameVec t2 = (Y.c3 * Z.c3) * X + (dot(Y, Z) * X.c3) * e3 - (X.c3 * Z.c3) * Y -
                        (dot(X, Z) * Y.c3) * e3;
    return k1 * t1 - k2 * t2;
}

inline double curvature_4(const BcvParams& par, const FrameVec& X, const FrameVec& Y,
                          const FrameVec& Z, const FrameVec& W) {
    return dot(curvature_op(par, X, Y, W), Z);
}

// Ric(v, w) = sum_i <R(v, E_i) E_i, w>.
inline double ricci(const BcvParams& par, const FrameVec& v, const FrameVec& w) {
    double out = 0.0;
    for (int i = 0; i < 3; ++i) {
        FrameVec e{0.0, 0.0, 0.0};
        e[i] = 1.0;
        out += dot(curvature_op(par, v, e, e), w);
    }
    return out;
}

// Ricci operator: Ric(v) is the frame vector with <Ric(v), w> = Ric(v, w).
inline FrameVec ricci_op(const BcvParams& par, const FrameVec& v) {
    FrameVec out{0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
        FrameVec e{0.0, 0.0, 0.0};
        e[i] = 1.0;
        out[i] = ricci(par, v, e);
    }
    return out;
}

} // namespace bcv
