#pragma once

#include <array>
#include <vector>

#include "bcv/types.hpp"

namespace bcv {

// The r-harmonicity condition for constant-curvature Hopf cylinders reduces
// to a quadratic in x = kappa_g^2:
//   x^2 + b x + c = 0,
//   b = -4m(r-1) + (3/4) l^2 r,    c = -(l^2/2)(4m - l^2).
struct RootReport {
    double b = 0.0, c = 0.0;
    double disc = 0.0;
    int n_real = 0;
    std::array<double, 2> roots{};     // ascending, first n_real valid
    int n_positive = 0;
    std::array<double, 2> positive{};  // ascending, first n_positive valid
};

RootReport quadratic_condition(double m, double l, int r);

enum class CaseTag {
    NoSolution = 0,              // no proper r-harmonic Hopf cylinder
    PositiveBundleCurvature = 1, // 4m - l^2 > 0: unique curvature
    Parabola = 2,                // 4m = l^2 (space forms), needs r >= 5
    SU2Negative = 3,             // 4m - l^2 < 0 inside the SU(2) strip
};

struct Classification {
    CaseTag tag = CaseTag::NoSolution;
    int n_roots = 0;
    std::array<double, 2> kappa_sq{}; // admissible curvatures, ascending
    bool has_radius = false;          // base-circle radii attached when m > 0
    double rho = 0.0;                 // base sphere radius 1/(2 sqrt(m))
    std::array<double, 2> radius{};   // aligned with kappa_sq
    bool has_r_bound = false;
    double r_bound = 0.0;             // attached inside the SU(2) strip
};

// Full classification of proper r-harmonic Hopf cylinders with constant
// geodesic curvature for the given parameters. r >= 2.
Classification classify(double m, double l, int r);

// Smallest order r for which solutions exist in the strip
// (3/4) l^2 < 4m < l^2. Throws OutOfRegion outside the strip.
double r_bound(double m, double l);

// Same bound in the normalised variable a = 4m / l^2, valid on (3/4, 1):
//   r_a(a) = 4 (a + sqrt(2 - 2a)) / (4a - 3).
double r_a(double a);

// At (m,l) = (1,2) the ambient space is the unit 3-sphere. Returns the pair
// {condition from the cylinder r-tension, condition |A|^4 - 2|A|^2
// - (r-2) kappa^2 for CMC surfaces of the sphere}; the two must agree.
std::array<double, 2> sphere_consistency(int r, double kappa);

struct DiagramGrid {
    int r = 2;
    std::vector<double> l_values;
    std::vector<double> m_values;
    std::vector<int> tags; // row-major, rows indexed by m, columns by l

    int at(int im, int il) const { return tags[static_cast<std::size_t>(im) * l_values.size() +
                                               static_cast<std::size_t>(il)]; }
};

// Case tags over a rectangular (l, m) grid for fixed order r. Resolutions
// must be at least 2; grid points include the interval endpoints.
DiagramGrid diagram_grid(int r, double l_min, double l_max, double m_min, double m_max, int res_l,
                         int res_m);

} // namespace bcv
