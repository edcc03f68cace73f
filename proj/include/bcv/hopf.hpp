#pragma once

#include <array>
#include <functional>
#include <utility>

#include "bcv/polynomial.hpp"
#include "bcv/surface.hpp"

namespace bcv {

// Second-order jet of a plane curve (x(s), y(s)) at a parameter value.
struct CurveJet2 {
    double x = 0.0, y = 0.0;
    double dx = 0.0, dy = 0.0;
    double ddx = 0.0, ddy = 0.0;
};

using BaseCurve = std::function<CurveJet2(double)>;

// Counterclockwise coordinate circle of radius R centred at the origin,
// parametrised by arc length of the base metric.
BaseCurve circle_curve(const BcvParams& par, double R);

// Coordinate radius of the origin-centred circle with geodesic curvature
// kappa (solves m R^2 + kappa R - 1 = 0 for the positive root).
double circle_coord_radius(double m, double kappa);

// Geodesic curvature of an arc-length parametrised curve in the base
// surface. Throws NotArcLength when |gamma'| differs from 1 beyond tol.
double geodesic_curvature(double m, const BaseCurve& curve, double s, double tol = 1e-8);

// Jet of the geodesic curvature function along the directrix.
struct KgJet {
    double k = 0.0;  // kappa_g
    double k1 = 0.0; // first derivative
    double k2 = 0.0;
    double k3 = 0.0;
    double k4 = 0.0;

    static KgJet constant(double kappa) { return {kappa, 0.0, 0.0, 0.0, 0.0}; }
};

// Taylor polynomial (degree 4) of the jet, centred at s0.
Polynomial jet_to_poly(const KgJet& jet, double s0);
// Jet of a polynomial at s.
KgJet jet_from_poly(const Polynomial& p, double s);

// Value of a section of the pullback bundle along a Hopf cylinder, in the
// adapted orthonormal frame {X, E3, eta} (X horizontal lift of the unit
// tangent, eta = X x E3 the unit normal).
struct CylVec {
    double x = 0.0, e3 = 0.0, eta = 0.0;

    CylVec operator+(const CylVec& o) const { return {x + o.x, e3 + o.e3, eta + o.eta}; }
    CylVec operator-(const CylVec& o) const { return {x - o.x, e3 - o.e3, eta - o.eta}; }
    CylVec operator*(double s) const { return {x * s, e3 * s, eta * s}; }
};
inline CylVec operator*(double s, const CylVec& v) { return v * s; }
inline double dot(const CylVec& a, const CylVec& b) {
    return a.x * b.x + a.e3 * b.e3 + a.eta * b.eta;
}

// Section whose components along {X, E3, eta} are polynomials in the
// arc-length parameter of the directrix (constant in the fibre direction).
struct CylSection {
    Polynomial a, b, c;
};

CylVec eval_at(const CylSection& w, double s);

// Exact covariant calculus on a Hopf cylinder with geodesic curvature
// polynomial kg:
//   nabla_X  w = (a' + c kg) X + (b' - l/2 c) E3 + (c' - a kg + l/2 b) eta
//   nabla_E3 w = (-l/2 c) X + (l/2 a) eta
CylSection covariant_X(const BcvParams& par, const Polynomial& kg, const CylSection& w);
CylSection covariant_E3(const BcvParams& par, const CylSection& w);

// Rough Laplacian -(nabla_X nabla_X + nabla_E3 nabla_E3) w; the adapted
// basis is parallel on the cylinder, so no correction term appears.
CylSection rough_laplacian(const BcvParams& par, const Polynomial& kg, const CylSection& w);

// Tension field of the cylinder: -kg eta.
CylSection tension_section(const Polynomial& kg);

// Pointwise wrappers taking a geodesic-curvature jet at s.
CylVec covariant_X(const BcvParams& par, const KgJet& jet, const CylSection& w, double s);
CylVec covariant_E3(const BcvParams& par, const CylSection& w, double s);
CylVec rough_laplacian_cyl(const BcvParams& par, const KgJet& jet, const CylSection& w, double s);

// Ambient curvature operator R(U,V)W restricted to the adapted frame
// (E3 is the second basis vector here).
CylVec cyl_curvature(const BcvParams& par, const CylVec& U, const CylVec& V, const CylVec& W);

// r-th tension field at s for a polynomial curvature profile, assembled
// from iterated Laplacians and curvature contractions (the recursion for
// polyharmonic maps). Independent of the closed forms below; used to
// cross-validate them.
CylVec tension_field_poly(const BcvParams& par, const Polynomial& kg, int r, double s);

// Third-order tension field of the Hopf cylinder at the given jet, in
// closed form.
CylVec tau3_hopf(const BcvParams& par, const KgJet& jet);

// The three bracketed residuals {K1, K2, K3} whose simultaneous vanishing
// characterises triharmonicity: tau3 = K1 X + (K2/2) E3 + (K3/4) eta.
std::array<double, 3> triharmonic_residuals(const BcvParams& par, const KgJet& jet);

// r-th tension field of a constant-curvature Hopf cylinder, closed form.
// Only the eta component is nonzero.
CylVec r_tension_cmc(const BcvParams& par, double kappa, int r);

// Same quantity assembled term by term from the general recursion
// (independent path, kept for cross-validation).
CylVec r_tension_assembled(const BcvParams& par, double kappa, int r);

// For a circle directrix of geodesic curvature kappa in a base sphere
// (m > 0): {circle radius R = rho / sqrt(kappa^2 rho^2 + 1), base sphere
// radius rho = 1/(2 sqrt(m))}. Throws InvalidBase when m <= 0.
std::pair<double, double> circle_radius(double m, double kappa);

// Hopf cylinder patch (s, t) -> (x(s), y(s), t) over a base curve.
SurfacePatch cylinder_patch(const BcvParams& par, const BaseCurve& curve, double s0, double s1,
                            double t0, double t1);

// Exact shape data of the constant-curvature Hopf cylinder over the
// origin-centred circle, evaluated at s = 0 (for closed-form cross-checks).
ShapeData cylinder_shape_exact(const BcvParams& par, double kappa);

} // namespace bcv
