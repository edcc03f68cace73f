#pragma once

#include <functional>

#include "bcv/ambient.hpp"
#include "bcv/fd.hpp"

namespace bcv {

// Finite-difference reconstructions of the connection and curvature from the
// metric alone. These are deliberately independent of the closed-form tables
// in AmbientChart::connection and curvature_op so that the two can be checked
// against each other.

// Frame components of nabla_{E_i} E_j at p, recovered from the Koszul formula
//   2 <E_k, nabla_{E_i} E_j> = E_j <E_i, E_k> + E_i <E_k, E_j> - E_k <E_j, E_i>
//     - <[E_j, E_k], E_i> - <[E_i, E_k], E_j> - <[E_j, E_i], E_k>,
// with the derivative terms evaluated by central differences along the
// integral directions of the frame. Every stencil point must lie in the
// chart domain; otherwise OutOfDomain propagates.
FrameVec connection_fd_oracle(const AmbientChart& chart, const Point3& p, int i, int j,
                              double h = fd::kDefaultStep);

// Frame components of R(E_i, E_j) E_k at p, recovered by differentiating the
// closed-form connection table:
//   R(E_i,E_j)E_k = nabla_{E_i}(nabla_{E_j}E_k) - nabla_{E_j}(nabla_{E_i}E_k)
//                   - nabla_{[E_i,E_j]}E_k.
FrameVec curvature_fd_oracle(const AmbientChart& chart, const Point3& p, int i, int j, int k,
                             double h = fd::kDefaultStep);

// Pullback-style derivative used by the curvature oracle and by tests:
// covariant derivative at p, along the frame direction E_i, of the vector
// field q -> field(q) given by frame components.
FrameVec covariant_of_field(const AmbientChart& chart, const Point3& p, int i,
                            const std::function<FrameVec(const Point3&)>& field,
                            double h = fd::kDefaultStep);

} // namespace bcv
