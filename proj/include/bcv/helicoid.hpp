#pragma once

#include <cstddef>

#include "bcv/surface.hpp"

namespace bcv {

// Isometry from the rotationally symmetric model (m < 0) onto the
// half-space model; preserves the vertical field.
Point3 theta_isometry(const BcvParams& par, const Point3& p);

// Closed-form geometry of the parabolic helicoid (u, v) -> (u, v, a log v)
// in the half-space model, on the patch a >= 0. The input alpha >= 0 is the
// magnitude of the mean curvature; on this patch the signed mean curvature
// works out to alpha_signed = -alpha.
struct HelicoidData {
    double a = 0.0;        // slope of the profile, a >= 0
    double L = 0.0;        // normalisation sqrt(l^2 + 4m(4a^2 m - 1))
    double alpha = 0.0;    // |mean curvature| (input)
    double alpha_signed = 0.0;
    double f = 0.0;        // mean curvature computed from the shape operator
    double nu = 0.0;
    double normA2 = 0.0;   // equals (8 alpha^2 + l^2)/2
    FrameVec X1, X2;       // orthonormal tangent basis (tilde frame comps)
    FrameVec eta;
    FrameVec e3top;
    FrameVec J_e3top;
    FrameVec A_e3top;
    FrameVec A_J_e3top;
    FrameVec A2_e3top;
    FrameVec J_A_e3top;
};

// Throws Inadmissible unless m < 0 and alpha^2 + m < 0; InvalidParams for
// alpha < 0.
HelicoidData helicoid_geometry(double alpha, double m, double l);

// Third-order tension field of the parabolic helicoid. T1 = l T2, and
//   T2 = l^4 + l^2 (-16m + 6 alpha^2) + 32 (2m^2 - 3m alpha^2 - 2 alpha^4)
//   T3 = l^4 + l^2 (-8m + 2 alpha^2)  + 64 alpha^2 (m + alpha^2);
// tau3 vanishes iff T1 = T2 = T3 = 0 (alpha > 0).
struct Tau3Helicoid {
    double T1 = 0.0, T2 = 0.0, T3 = 0.0;
    FrameVec tau3; // tilde frame components
};
Tau3Helicoid tau3_helicoid(double alpha, double m, double l);

// Surface patch of the helicoid in the half-space chart.
SurfacePatch helicoid_patch(double alpha, double m, double l);

struct NonexistenceScan {
    double alpha_min = 0.1, alpha_max = 2.0;
    double m_min = -5.0;
    double m_margin = 0.01; // keep m <= -alpha^2 - margin
    double l_min = 0.0, l_max = 3.0;
    int cells = 50;     // grid cells per axis
    int samples = 100;  // random (alpha, m) draws for the identity checks
    unsigned seed = 20240815;
};

// Certificate that no proper triharmonic parabolic helicoid exists:
//  - grid scan of max(|T1|,|T2|,|T3|) over the admissible box stays > 0;
//  - eliminating l^2 from T2 = T3 and substituting back gives
//      T2 = 48 a^2 (2m + 3a^2)(-2m^2 + 9m a^2 + 8a^4) / (2m - a^2)^2
//    (checked at random admissible (alpha, m));
//  - on the branch 2m + 3 alpha^2 = 0 the eliminated l^2 equals -16 alpha^2 < 0;
//  - the quartic factor only vanishes where m + alpha^2 > 0 (inadmissible);
//  - with l = 0, T3 = 64 alpha^2 (m + alpha^2) < 0 on the admissible set.
struct NonexistenceReport {
    std::size_t cells_checked = 0;
    double grid_min_residual = 0.0;
    double identity_max_residual = 0.0;
    double branch_l2_max = 0.0;     // max of eliminated l^2 on 2m+3a^2=0 (must stay < 0)
    double quartic_min_margin = 0.0; // min of m + a^2 at the relevant quartic root (> 0)
    double l0_branch_max = 0.0;     // max of T3 at l=0 (must stay < 0)
    bool passed = false;
};

NonexistenceReport nonexistence_certify(const NonexistenceScan& scan = {});

} // namespace bcv
