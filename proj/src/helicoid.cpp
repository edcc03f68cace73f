#include "bcv/helicoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "bcv/ambient.hpp"

namespace bcv {

Point3 theta_isometry(const BcvParams& par, const Point3& p) {
    if (!(par.m < 0.0))
        throw InvalidParams("the half-space model exists for m < 0");
    const double F = conformal_factor(par, p.x, p.y);
    const double sm = std::sqrt(-par.m);
    const double gx = 1.0 / sm + p.x;
    const double G2 = gx * gx + p.y * p.y;
    if (!(G2 > 0.0))
        throw OutOfDomain("the isometry is singular at this point");
    const double G = std::sqrt(G2);
    return {2.0 * p.y / (sm * G2), F / (-par.m * G2),
            p.z + par.l / (2.0 * par.m) * std::acos(p.y / G)};
}

namespace {

void check_helicoid_params(double alpha, double m) {
    if (alpha < 0.0)
        throw InvalidParams("helicoid patch is parametrised by alpha >= 0");
    if (!(m < 0.0) || !(alpha * alpha + m < 0.0))
        throw Inadmissible("parabolic helicoids need m < 0 and alpha^2 + m < 0");
}

double slope_from_alpha(double alpha, double m, double l) {
    // a >= 0 patch; the signed mean curvature there is -alpha
    return alpha / (4.0 * (-m)) * std::sqrt((4.0 * m - l * l) / (m + alpha * alpha));
}

// Shape operator of the helicoid applied to a vector with constant tilde
// frame components (the normal has constant components, so A(w) is a pure
// connection term).
FrameVec apply_shape(const BcvParams& par, const FrameVec& eta, const FrameVec& w) {
    FrameVec out;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const double c = w[i - 1] * eta[j - 1];
            if (c != 0.0)
                out += (-c) * halfspace_connection(par, i, j);
        }
    return out;
}

} // namespace

HelicoidData helicoid_geometry(double alpha, double m, double l) {
    check_helicoid_params(alpha, m);
    const BcvParams par{m, l};
    const double sm = std::sqrt(-m);

    HelicoidData h;
    h.alpha = alpha;
    h.alpha_signed = -alpha;
    h.a = slope_from_alpha(alpha, m, l);
    h.L = std::sqrt(l * l + 4.0 * m * (4.0 * h.a * h.a * m - 1.0));

    // tangent directions (constant frame components) and the unit normal
    const FrameVec tu{1.0, 0.0, -l / (2.0 * sm)};
    const FrameVec tv{0.0, 1.0 / (2.0 * sm), h.a};
    h.X1 = (1.0 / norm(tu)) * tu;
    const FrameVec w = tv - dot(tv, h.X1) * h.X1;
    h.X2 = (1.0 / norm(w)) * w;
    h.eta = cross(h.X1, h.X2);

    h.nu = h.eta.c3;
    h.e3top = FrameVec{0.0, 0.0, 1.0} - h.nu * h.eta;
    h.J_e3top = cross(h.eta, h.e3top);
    h.A_e3top = apply_shape(par, h.eta, h.e3top);
    h.A_J_e3top = apply_shape(par, h.eta, h.J_e3top);
    h.A2_e3top = apply_shape(par, h.eta, h.A_e3top);
    h.J_A_e3top = cross(h.eta, h.A_e3top);

    const FrameVec AX1 = apply_shape(par, h.eta, h.X1);
    const FrameVec AX2 = apply_shape(par, h.eta, h.X2);
    const double a11 = dot(AX1, h.X1);
    const double a12 = dot(AX1, h.X2);
    const double a21 = dot(AX2, h.X1);
    const double a22 = dot(AX2, h.X2);
    h.f = 0.5 * (a11 + a22);
    h.normA2 = a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22;
    return h;
}

Tau3Helicoid tau3_helicoid(double alpha, double m, double l) {
    check_helicoid_params(alpha, m);
    const double a2 = alpha * alpha;
    const double l2 = l * l;

    Tau3Helicoid t;
    t.T2 = l2 * l2 + l2 * (-16.0 * m + 6.0 * a2) + 32.0 * (2.0 * m * m - 3.0 * m * a2 - 2.0 * a2 * a2);
    t.T1 = l * t.T2;
    t.T3 = l2 * l2 + l2 * (-8.0 * m + 2.0 * a2) + 64.0 * a2 * (m + a2);

    // display evaluated at the signed mean curvature -alpha of the a >= 0 patch
    const double sm = std::sqrt(-m);
    const double pref = std::sqrt((a2 + m) / (4.0 * m - l2));
    t.tau3 = {-alpha * pref / sm * t.T1, a2 / sm * t.T2, 2.0 * alpha * pref * t.T3};
    return t;
}

SurfacePatch helicoid_patch(double alpha, double m, double l) {
    check_helicoid_params(alpha, m);
    const double a = slope_from_alpha(alpha, m, l);
    SurfacePatch patch;
    patch.chart = std::make_shared<HalfSpaceChart>(BcvParams{m, l});
    patch.embedding = [a](double u, double v) { return Point3{u, v, a * std::log(v)}; };
    patch.u0 = -0.5;
    patch.u1 = 0.5;
    patch.v0 = 0.75;
    patch.v1 = 1.5;
    return patch;
}

NonexistenceReport nonexistence_certify(const NonexistenceScan& scan) {
    if (scan.cells < 2 || scan.samples < 1)
        throw InvalidParams("nonexistence scan needs at least 2 cells and 1 sample");

    NonexistenceReport rep;
    rep.grid_min_residual = std::numeric_limits<double>::infinity();

    // (a) grid scan of the residual over the admissible box
    const int n = scan.cells;
    for (int i = 0; i < n; ++i) {
        const double alpha =
            scan.alpha_min + (scan.alpha_max - scan.alpha_min) * i / (n - 1);
        const double m_max = -alpha * alpha - scan.m_margin;
        if (!(scan.m_min < m_max))
            continue;
        for (int j = 0; j < n; ++j) {
            const double m = scan.m_min + (m_max - scan.m_min) * j / (n - 1);
            for (int k = 0; k < n; ++k) {
                const double l = scan.l_min + (scan.l_max - scan.l_min) * k / (n - 1);
                const Tau3Helicoid t = tau3_helicoid(alpha, m, l);
                const double res =
                    std::max({std::abs(t.T1), std::abs(t.T2), std::abs(t.T3)});
                rep.grid_min_residual = std::min(rep.grid_min_residual, res);
                ++rep.cells_checked;
            }
        }
    }

    // (b) elimination identity at random admissible (alpha, m):
    // solving T2 = T3 for l^2 and substituting back into T2 gives
    // 48 a^2 (2m + 3a^2)(-2m^2 + 9m a^2 + 8a^4) / (2m - a^2)^2.
    rep.branch_l2_max = -std::numeric_limits<double>::infinity();
    rep.l0_branch_max = -std::numeric_limits<double>::infinity();
    rep.quartic_min_margin = std::numeric_limits<double>::infinity();
    std::mt19937 rng(scan.seed);
    std::uniform_real_distribution<double> ua(scan.alpha_min, scan.alpha_max);
    const auto t2_at = [](double l2, double m, double a2) {
        return l2 * l2 + l2 * (-16.0 * m + 6.0 * a2) +
               32.0 * (2.0 * m * m - 3.0 * m * a2 - 2.0 * a2 * a2);
    };
    const auto t3_at = [](double l2, double m, double a2) {
        return l2 * l2 + l2 * (-8.0 * m + 2.0 * a2) + 64.0 * a2 * (m + a2);
    };
    for (int s = 0; s < scan.samples; ++s) {
        const double alpha = ua(rng);
        const double m_max = -alpha * alpha - scan.m_margin;
        std::uniform_real_distribution<double> um(scan.m_min, m_max);
        const double m = um(rng);
        const double a2 = alpha * alpha;

        const double q = -8.0 * (-2.0 * m * m + 5.0 * m * a2 + 4.0 * a2 * a2) / (2.0 * m - a2);
        const double denom = (2.0 * m - a2) * (2.0 * m - a2);
        const double closed =
            48.0 * a2 * (2.0 * m + 3.0 * a2) * (-2.0 * m * m + 9.0 * m * a2 + 8.0 * a2 * a2) /
            denom;
        const double direct = t2_at(q, m, a2);
        const double scale = std::max({1.0, std::abs(direct), std::abs(closed)});
        rep.identity_max_residual = std::max(
            {rep.identity_max_residual, std::abs(direct - closed) / scale,
             std::abs(t2_at(q, m, a2) - t3_at(q, m, a2)) / scale});

        // (c) branch 2m + 3 alpha^2 = 0: the eliminated l^2 is -16 alpha^2
        const double mb = -1.5 * a2;
        const double qb = -8.0 * (-2.0 * mb * mb + 5.0 * mb * a2 + 4.0 * a2 * a2) / (2.0 * mb - a2);
        rep.branch_l2_max = std::max(rep.branch_l2_max, qb);

        // (d) quartic factor -2m^2 + 9m a^2 + 8 a^4 = 0: its root on the
        // relevant side sits at m + alpha^2 > 0, hence is inadmissible
        const double mq = 0.25 * a2 * (9.0 - std::sqrt(145.0));
        rep.quartic_min_margin = std::min(rep.quartic_min_margin, mq + a2);

        // (e) l = 0 branch: T3 < 0 on the admissible set
        rep.l0_branch_max = std::max(rep.l0_branch_max, t3_at(0.0, m, a2));
    }

    rep.passed = rep.grid_min_residual > 0.0 && rep.identity_max_residual <= 1e-9 &&
                 rep.branch_l2_max < 0.0 && rep.quartic_min_margin > 0.0 &&
                 rep.l0_branch_max < 0.0;
    return rep;
}

} // namespace bcv
