#include "bcv/classify.hpp"

#include <algorithm>
#include <cmath>

#include "bcv/hopf.hpp"

namespace bcv {

namespace {

constexpr double kPositiveTol = 1e-12;
constexpr double kDoubleRootWindow = 1e-9; // relative window around r = r_bound

} // namespace

RootReport quadratic_condition(double m, double l, int r) {
    if (r < 2)
        throw InvalidParams("order r must be at least 2");
    const double l2 = l * l;
    RootReport rep;
    rep.b = -4.0 * m * (r - 1) + 0.75 * l2 * r;
    rep.c = -0.5 * l2 * (4.0 * m - l2);
    rep.disc = rep.b * rep.b - 4.0 * rep.c;
    if (rep.disc < 0.0)
        return rep;

    double x1, x2;
    if (rep.c == 0.0) {
        x1 = 0.0;
        x2 = -rep.b;
    } else {
        const double sq = std::sqrt(rep.disc);
        const double q = rep.b >= 0.0 ? -0.5 * (rep.b + sq) : -0.5 * (rep.b - sq);
        x1 = q;
        x2 = rep.c / q;
    }
    if (x1 > x2)
        std::swap(x1, x2);
    rep.n_real = 2;
    rep.roots = {x1, x2};
    for (int i = 0; i < 2; ++i)
        if (rep.roots[static_cast<std::size_t>(i)] > kPositiveTol)
            rep.positive[static_cast<std::size_t>(rep.n_positive++)] =
                rep.roots[static_cast<std::size_t>(i)];
    return rep;
}

Classification classify(double m, double l, int r) {
    if (r < 2)
        throw InvalidParams("order r must be at least 2");
    Classification out;
    const double l2 = l * l;
    const double d = 4.0 * m - l2;

    if (m > 0.0) {
        out.has_radius = true;
        out.rho = 1.0 / (2.0 * std::sqrt(m));
    }

    if (m <= 0.0)
        return out; // quadratic has no positive root here

    const double beta = 4.0 * m - 0.75 * l2;
    const bool in_strip = d < 0.0 && beta > 0.0;
    if (in_strip) {
        out.has_r_bound = true;
        out.r_bound = r_bound(m, l);
    }

    RootReport rep = quadratic_condition(m, l, r);

    if (in_strip) {
        // On the strip the discriminant vanishes exactly at r = r_bound;
        // collapse nearly-coincident roots to the double root.
        const double rb = out.r_bound;
        const double scale = std::max(1.0, std::abs(rb));
        if (std::abs(r - rb) <= kDoubleRootWindow * scale) {
            rep.n_real = 2;
            rep.roots = {-0.5 * rep.b, -0.5 * rep.b};
            rep.n_positive = 1;
            rep.positive[0] = -0.5 * rep.b;
        } else if (r < rb) {
            rep.n_positive = 0;
        }
    }

    out.n_roots = rep.n_positive;
    for (int i = 0; i < rep.n_positive; ++i)
        out.kappa_sq[static_cast<std::size_t>(i)] = rep.positive[static_cast<std::size_t>(i)];

    if (out.n_roots == 0)
        return out; // tag stays NoSolution (r_bound/radius info retained)

    if (d > 0.0)
        out.tag = CaseTag::PositiveBundleCurvature;
    else if (d == 0.0)
        out.tag = CaseTag::Parabola;
    else
        out.tag = CaseTag::SU2Negative;

    for (int i = 0; i < out.n_roots; ++i) {
        const double kappa = std::sqrt(out.kappa_sq[static_cast<std::size_t>(i)]);
        out.radius[static_cast<std::size_t>(i)] = circle_radius(m, kappa).first;
    }
    return out;
}

double r_bound(double m, double l) {
    const double l2 = l * l;
    if (!(0.75 * l2 < 4.0 * m && 4.0 * m < l2))
        throw OutOfRegion("r_bound is defined for (3/4) l^2 < 4m < l^2");
    return 4.0 * (std::sqrt(2.0) * std::sqrt(l2 * l2 - 4.0 * l2 * m) + 4.0 * m) /
           (16.0 * m - 3.0 * l2);
}

double r_a(double a) {
    if (!(0.75 < a && a < 1.0))
        throw OutOfRegion("r_a is defined on (3/4, 1)");
    return 4.0 * (a + std::sqrt(2.0 - 2.0 * a)) / (4.0 * a - 3.0);
}

std::array<double, 2> sphere_consistency(int r, double kappa) {
    if (r < 2)
        throw InvalidParams("order r must be at least 2");
    const BcvParams par{1.0, 2.0}; // unit 3-sphere
    const double k2 = kappa * kappa;

    // cylinder path: the bracket of the r-tension field
    const double c = k2 + 0.5 * par.l * par.l;
    const double cyl = c * c - (4.0 * par.m - 0.5 * par.l * par.l) * c -
                       (r - 2) * (4.0 * par.m - 0.75 * par.l * par.l) * k2;

    // sphere path: |A|^4 - dim |A|^2 - (r-2) dim^2 alpha^2 for a CMC
    // surface of S^3 with |A|^2 = kappa^2 + 2 and alpha = -kappa/2
    const double normA2 = k2 + 2.0;
    const double alpha = -0.5 * kappa;
    const double dim = 2.0;
    const double sph = normA2 * normA2 - dim * normA2 - (r - 2) * dim * dim * alpha * alpha;

    return {cyl, sph};
}

DiagramGrid diagram_grid(int r, double l_min, double l_max, double m_min, double m_max, int res_l,
                         int res_m) {
    if (r < 2)
        throw InvalidParams("order r must be at least 2");
    if (res_l < 2 || res_m < 2)
        throw InvalidParams("grid resolution must be at least 2 per axis");
    if (!(l_min < l_max) || !(m_min < m_max))
        throw InvalidParams("grid bounds must be increasing");

    DiagramGrid grid;
    grid.r = r;
    grid.l_values.resize(static_cast<std::size_t>(res_l));
    grid.m_values.resize(static_cast<std::size_t>(res_m));
    for (int i = 0; i < res_l; ++i)
        grid.l_values[static_cast<std::size_t>(i)] = l_min + (l_max - l_min) * i / (res_l - 1);
    for (int i = 0; i < res_m; ++i)
        grid.m_values[static_cast<std::size_t>(i)] = m_min + (m_max - m_min) * i / (res_m - 1);

    grid.tags.reserve(static_cast<std::size_t>(res_l) * static_cast<std::size_t>(res_m));
    for (double mv : grid.m_values)
        for (double lv : grid.l_values)
            grid.tags.push_back(static_cast<int>(classify(mv, lv, r).tag));
    return grid;
}

} // namespace bcv
