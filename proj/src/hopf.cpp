#include "bcv/hopf.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace bcv {

BaseCurve circle_curve(const BcvParams& par, double R) {
    if (!(R > 0.0))
        throw InvalidParams("circle radius must be positive");
    const double FR = 1.0 + par.m * R * R;
    if (!(FR > 0.0))
        throw OutOfDomain("circle lies outside the chart domain");
    const double w = FR / R; // arc-length angular speed
    return [R, w](double s) {
        CurveJet2 j;
        const double c = std::cos(w * s);
        const double sn = std::sin(w * s);
        j.x = R * c;
        j.y = R * sn;
        j.dx = -R * w * sn;
        j.dy = R * w * c;
        j.ddx = -R * w * w * c;
        j.ddy = -R * w * w * sn;
        return j;
    };
}

double circle_coord_radius(double m, double kappa) {
    if (m == 0.0) {
        if (!(kappa > 0.0))
            throw InvalidParams("flat base needs positive geodesic curvature");
        return 1.0 / kappa;
    }
    const double disc = kappa * kappa + 4.0 * m;
    if (disc < 0.0)
        throw InvalidParams("no circle with this curvature in the hyperbolic base");
    const double R = (-kappa + std::sqrt(disc)) / (2.0 * m);
    if (!(R > 0.0))
        throw InvalidParams("no positive circle radius for these parameters");
    return R;
}

double geodesic_curvature(double m, const BaseCurve& curve, double s, double tol) {
    const CurveJet2 j = curve(s);
    const double F = 1.0 + m * (j.x * j.x + j.y * j.y);
    if (!(F > 0.0))
        throw OutOfDomain("curve point outside the chart domain");
    const double speed2 = (j.dx * j.dx + j.dy * j.dy) / (F * F);
    if (std::abs(speed2 - 1.0) > tol)
        throw NotArcLength("curve is not arc-length parametrised, |gamma'|^2 = " +
                           std::to_string(speed2));
    return 2.0 * m / F * (j.dx * j.y - j.dy * j.x) + (j.ddy * j.dx - j.ddx * j.dy) / (F * F);
}

Polynomial jet_to_poly(const KgJet& jet, double s0) {
    // Horner in (s - s0)
    const Polynomial shift{-s0, 1.0};
    Polynomial p = Polynomial::constant(jet.k4 / 24.0);
    for (double c : {jet.k3 / 6.0, jet.k2 / 2.0, jet.k1, jet.k})
        p = p * shift + Polynomial::constant(c);
    return p;
}

KgJet jet_from_poly(const Polynomial& p, double s) {
    KgJet j;
    Polynomial q = p;
    j.k = q.eval(s);
    q = q.derivative();
    j.k1 = q.eval(s);
    q = q.derivative();
    j.k2 = q.eval(s);
    q = q.derivative();
    j.k3 = q.eval(s);
    q = q.derivative();
    j.k4 = q.eval(s);
    return j;
}

CylVec eval_at(const CylSection& w, double s) {
    return {w.a.eval(s), w.b.eval(s), w.c.eval(s)};
}

CylSection covariant_X(const BcvParams& par, const Polynomial& kg, const CylSection& w) {
    const double hl = 0.5 * par.l;
    CylSection out;
    out.a = w.a.derivative() + w.c * kg;
    out.b = w.b.derivative() - hl * w.c;
    out.c = w.c.derivative() - w.a * kg + hl * w.b;
    return out;
}

CylSection covariant_E3(const BcvParams& par, const CylSection& w) {
    const double hl = 0.5 * par.l;
    CylSection out;
    out.a = -hl * w.c;
    out.b = Polynomial();
    out.c = hl * w.a;
    return out;
}

CylSection rough_laplacian(const BcvParams& par, const Polynomial& kg, const CylSection& w) {
    const CylSection xx = covariant_X(par, kg, covariant_X(par, kg, w));
    const CylSection zz = covariant_E3(par, covariant_E3(par, w));
    CylSection out;
    out.a = -1.0 * (xx.a + zz.a);
    out.b = -1.0 * (xx.b + zz.b);
    out.c = -1.0 * (xx.c + zz.c);
    return out;
}

CylSection tension_section(const Polynomial& kg) {
    CylSection t;
    t.c = -1.0 * kg;
    return t;
}

CylVec covariant_X(const BcvParams& par, const KgJet& jet, const CylSection& w, double s) {
    return eval_at(covariant_X(par, jet_to_poly(jet, s), w), s);
}

CylVec covariant_E3(const BcvParams& par, const CylSection& w, double s) {
    return eval_at(covariant_E3(par, w), s);
}

CylVec rough_laplacian_cyl(const BcvParams& par, const KgJet& jet, const CylSection& w, double s) {
    return eval_at(rough_laplacian(par, jet_to_poly(jet, s), w), s);
}

CylVec cyl_curvature(const BcvParams& par, const CylVec& U, const CylVec& V, const CylVec& W) {
    const double l2 = par.l * par.l;
    const double k1 = 4.0 * par.m - 0.75 * l2;
    const double k2 = 4.0 * par.m - l2;
    const CylVec e3{0.0, 1.0, 0.0};
    const CylVec t1 = dot(V, W) * U - dot(U, W) * V;
    const CylVec t2 = (V.e3 * W.e3) * U + (dot(V, W) * U.e3) * e3 - (U.e3 * W.e3) * V -
                      (dot(U, W) * V.e3) * e3;
    return k1 * t1 - k2 * t2;
}

namespace {

// Sum over the adapted tangent frame {X, E3} of R(U, e_i) e_i at s, where
// U is a section (evaluated pointwise; curvature is algebraic here).
CylVec curvature_trace(const BcvParams& par, const CylVec& U) {
    const CylVec X{1.0, 0.0, 0.0};
    const CylVec E3{0.0, 1.0, 0.0};
    return cyl_curvature(par, U, X, X) + cyl_curvature(par, U, E3, E3);
}

// R(nabla_{e_i} P, Q) e_i + optional transpose term, evaluated at s.
CylVec curvature_mixed(const BcvParams& par, const Polynomial& kg, const CylSection& P,
                       const CylSection& Q, double s) {
    const CylVec X{1.0, 0.0, 0.0};
    const CylVec E3{0.0, 1.0, 0.0};
    const CylVec dPx = eval_at(covariant_X(par, kg, P), s);
    const CylVec dPz = eval_at(covariant_E3(par, P), s);
    const CylVec q = eval_at(Q, s);
    return cyl_curvature(par, dPx, q, X) + cyl_curvature(par, dPz, q, E3);
}

CylVec curvature_mixed_right(const BcvParams& par, const Polynomial& kg, const CylSection& P,
                             const CylSection& Q, double s) {
    const CylVec X{1.0, 0.0, 0.0};
    const CylVec E3{0.0, 1.0, 0.0};
    const CylVec p = eval_at(P, s);
    const CylVec dQx = eval_at(covariant_X(par, kg, Q), s);
    const CylVec dQz = eval_at(covariant_E3(par, Q), s);
    return cyl_curvature(par, p, dQx, X) + cyl_curvature(par, p, dQz, E3);
}

} // namespace

CylVec tension_field_poly(const BcvParams& par, const Polynomial& kg, int r, double s) {
    if (r < 2)
        throw InvalidParams("tension order must be at least 2");

    // iterated Laplacians of the tension field; lap[k] = Delta^k tau
    const int s_half = r / 2;
    const int max_lap = r - 1;
    std::vector<CylSection> lap;
    lap.reserve(static_cast<std::size_t>(max_lap) + 1);
    lap.push_back(tension_section(kg));
    for (int k = 1; k <= max_lap; ++k)
        lap.push_back(rough_laplacian(par, kg, lap.back()));

    CylVec out = eval_at(lap[static_cast<std::size_t>(max_lap)], s);
    out = out - curvature_trace(par, eval_at(lap[static_cast<std::size_t>(max_lap - 1)], s));

    if (r % 2 == 0) {
        const int sh = s_half; // r = 2 sh
        for (int p = 1; p <= sh - 1; ++p) {
            const CylSection& P = lap[static_cast<std::size_t>(sh + p - 2)];
            const CylSection& Q = lap[static_cast<std::size_t>(sh - p - 1)];
            out = out - (curvature_mixed(par, kg, P, Q, s) - curvature_mixed_right(par, kg, P, Q, s));
        }
    } else {
        const int sh = s_half; // r = 2 sh + 1
        for (int p = 1; p <= sh - 1; ++p) {
            const CylSection& P = lap[static_cast<std::size_t>(sh + p - 1)];
            const CylSection& Q = lap[static_cast<std::size_t>(sh - p - 1)];
            out = out - (curvature_mixed(par, kg, P, Q, s) - curvature_mixed_right(par, kg, P, Q, s));
        }
        const CylSection& M = lap[static_cast<std::size_t>(sh - 1)];
        out = out - curvature_mixed(par, kg, M, M, s);
    }
    return out;
}

CylVec tau3_hopf(const BcvParams& par, const KgJet& jet) {
    const double m = par.m;
    const double l2 = par.l * par.l;
    const double k = jet.k, k1 = jet.k1, k2 = jet.k2, k3 = jet.k3, k4 = jet.k4;
    CylVec out;
    out.x = 2.0 * k1 * (l2 * k + 5.0 * k * k * k - 5.0 * k2) - 5.0 * k * k3;
    out.e3 = 0.5 * par.l * (-(l2 + 9.0 * k * k) * k1 + 4.0 * k3);
    out.eta = 0.25 * (k * (60.0 * k1 * k1 -
                           (l2 + 4.0 * k * k) * (2.0 * l2 - 8.0 * m + k * k)) +
                      2.0 * (5.0 * l2 - 8.0 * m + 20.0 * k * k) * k2 - 4.0 * k4);
    return out;
}

std::array<double, 3> triharmonic_residuals(const BcvParams& par, const KgJet& jet) {
    const CylVec t = tau3_hopf(par, jet);
    return {t.x, 2.0 * t.e3, 4.0 * t.eta};
}

CylVec r_tension_cmc(const BcvParams& par, double kappa, int r) {
    if (r < 2)
        throw InvalidParams("tension order must be at least 2");
    CylVec out;
    if (kappa == 0.0)
        return out; // geodesic directrix: harmonic, hence r-harmonic
    const double m = par.m;
    const double l2 = par.l * par.l;
    const double c = kappa * kappa + 0.5 * l2;
    if (r == 2) {
        out.eta = -kappa * (c - (4.0 * m - 0.5 * l2));
        return out;
    }
    const double quad =
        c * c - (4.0 * m - 0.5 * l2) * c - (r - 2) * (4.0 * m - 0.75 * l2) * kappa * kappa;
    out.eta = -kappa * std::pow(c, r - 3) * quad;
    return out;
}

CylVec r_tension_assembled(const BcvParams& par, double kappa, int r) {
    return tension_field_poly(par, Polynomial::constant(kappa), r, 0.0);
}

std::pair<double, double> circle_radius(double m, double kappa) {
    if (!(m > 0.0))
        throw InvalidBase("base sphere radius needs m > 0");
    const double rho = 1.0 / (2.0 * std::sqrt(m));
    const double R = rho / std::sqrt(kappa * kappa * rho * rho + 1.0);
    return {R, rho};
}

SurfacePatch cylinder_patch(const BcvParams& par, const BaseCurve& curve, double s0, double s1,
                            double t0, double t1) {
    SurfacePatch patch;
    patch.chart = std::make_shared<BcvChart>(par);
    patch.embedding = [curve](double s, double t) {
        const CurveJet2 j = curve(s);
        return Point3{j.x, j.y, t};
    };
    patch.u0 = s0;
    patch.u1 = s1;
    patch.v0 = t0;
    patch.v1 = t1;
    return patch;
}

ShapeData cylinder_shape_exact(const BcvParams& par, double kappa) {
    const double R = circle_coord_radius(par.m, kappa);
    ShapeData sd;
    sd.p = {R, 0.0, 0.0};
    sd.X1 = {0.0, 1.0, 0.0}; // horizontal lift of the tangent at s = 0
    sd.X2 = {0.0, 0.0, 1.0}; // vertical field
    sd.eta = {1.0, 0.0, 0.0};
    sd.nu = 0.0;
    sd.e3top = {0.0, 0.0, 1.0};
    sd.A[0][0] = -kappa;
    sd.A[0][1] = 0.5 * par.l;
    sd.A[1][0] = 0.5 * par.l;
    sd.A[1][1] = 0.0;
    sd.f = -0.5 * kappa;
    sd.normA2 = kappa * kappa + 0.5 * par.l * par.l;
    sd.a1 = 1.0;
    sd.b1 = 0.0;
    sd.a2 = 0.0;
    sd.b2 = 1.0;
    return sd;
}

} // namespace bcv
