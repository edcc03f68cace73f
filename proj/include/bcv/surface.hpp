#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "bcv/ambient.hpp"
#include "bcv/fd.hpp"

namespace bcv {

// An immersed parametric surface inside an ambient chart. The embedding is
// assumed smooth on a neighbourhood of the rectangle [u0,u1] x [v0,v1];
// finite-difference stencils may step slightly outside it but must stay in
// the chart domain.
struct SurfacePatch {
    std::shared_ptr<const AmbientChart> chart;
    std::function<Point3(double, double)> embedding;
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;
    double fd_step = fd::kDefaultStep;
};

// Pointwise second-order data of the immersion.
struct ShapeData {
    Point3 p;
    FrameVec X1, X2; // orthonormal tangent basis
    FrameVec eta;    // unit normal, (X1, X2, eta) positively oriented
    double nu = 0.0;          // <eta, E3>
    FrameVec e3top;           // tangential part of the vertical field E3
    double A[2][2] = {{0.0, 0.0}, {0.0, 0.0}}; // shape operator in {X1, X2}
    double f = 0.0;           // mean curvature
    double normA2 = 0.0;      // squared norm of the shape operator
    // patch-coordinate expressions X_i = a_i d/du + b_i d/dv
    double a1 = 0.0, b1 = 0.0, a2 = 0.0, b2 = 0.0;
};

using ScalarField = std::function<double(double, double)>;
using SectionField = std::function<FrameVec(double, double)>; // frame components along phi

ShapeData shape_data(const SurfacePatch& patch, double u, double v);

// Shape operator applied to a tangent vector (given in frame components).
FrameVec apply_A(const ShapeData& sd, const FrameVec& t);

// Rotation of the tangent plane by +pi/2: J(X1) = X2, J(X2) = -X1.
FrameVec apply_J(const ShapeData& sd, const FrameVec& t);

// Tangential projection v - <v, eta> eta.
FrameVec tangential(const ShapeData& sd, const FrameVec& v);

// Max residuals over the tangent basis of the structural identities of the
// vertical field:
//   nabla_X E3^T = nu (A X - (l/2) J X) + <A X, E3^T> eta,
//   X(nu)        = -<A X - (l/2) J X, E3^T>.
// Returns {first residual, second residual}.
std::pair<double, double> verify_e3_identities(const SurfacePatch& patch, double u, double v);

// Rough Laplacian of a section of the pullback bundle,
//   Delta S = -sum_i ( nabla_{e_i} nabla_{e_i} S - nabla_{grad-correction} S ),
// with the correction term nabla^M_{e_i} e_i computed through Christoffel
// symbols of the induced metric (finite differences of the first fundamental
// form).
FrameVec rough_laplacian_fd(const SurfacePatch& patch, const SectionField& section, double u,
                            double v);

// Intrinsic gradient (as an ambient tangent vector) and Laplacian of a
// scalar field on the surface. Sign convention: Delta f = -f'' on a line.
FrameVec surface_gradient(const SurfacePatch& patch, const ScalarField& fn, double u, double v);
double surface_laplacian(const SurfacePatch& patch, const ScalarField& fn, double u, double v);

// Tension field 2 f eta of the immersion.
FrameVec tension(const SurfacePatch& patch, double u, double v);

// Trace of the covariant derivative of the shape operator,
//   sum_i (nabla_{X_i} A)(X_i)
//     = sum_i [ (nabla_{X_i} A(X_i field))^T - A((nabla_{X_i} X_i field)^T) ],
// computed by finite differences. Satisfies
//   trace(nabla A) = 2 grad f + (4m - l^2) nu E3^T.
FrameVec trace_nabla_A_fd(const SurfacePatch& patch, double u, double v);

// Residuals of the biharmonicity system for a codimension-one immersion:
//   scalar : Delta f + f |A|^2 - f Ric(eta, eta)
//   tangent: 2 A(grad f) + 2 f grad f - 2 f (Ric(eta))^T
struct BiharmonicResidual {
    double scalar = 0.0;
    FrameVec tangent;
};
BiharmonicResidual biharmonic_residual(const SurfacePatch& patch, double u, double v);

// Closed-form Laplacian of the mean curvature vector H = f eta:
//   (Delta f + f |A|^2) eta + 2 A(grad f) + 2 f grad f + (4m - l^2) f nu E3^T.
FrameVec delta_h_closed(const BcvParams& par, const ShapeData& sd, const FrameVec& grad_f,
                        double delta_f);

// Closed-form Laplacian of the section V = nu E3^T.
FrameVec delta_v_closed(const BcvParams& par, const ShapeData& sd);

// Third-order tension field of a CMC immersion with mean curvature alpha,
// in closed form (needs only pointwise shape data plus the intrinsic
// gradient and Laplacian of |A|^2).
FrameVec tau3_cmc_closed(const BcvParams& par, const ShapeData& sd, double alpha,
                         const FrameVec& grad_normA2, double delta_normA2);

// Horizontal slice z = z0 of the rotationally symmetric model (totally
// geodesic when l = 0); a convenient generic test surface otherwise.
SurfacePatch slice_patch(const BcvParams& par, double z0);

} // namespace bcv
