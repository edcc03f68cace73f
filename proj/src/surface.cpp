#include "bcv/surface.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bcv/curvature.hpp"

namespace bcv {

namespace {

constexpr double kDegenerateTol = 1e-10;

CoordVec embedding_tangent(const SurfacePatch& patch, double u, double v, int dir) {
    const double h = patch.fd_step;
    const auto at = [&](double t) {
        return dir == 0 ? patch.embedding(u + t, v) : patch.embedding(u, v + t);
    };
    return {fd::d1([&](double t) { return at(t).x; }, h),
            fd::d1([&](double t) { return at(t).y; }, h),
            fd::d1([&](double t) { return at(t).z; }, h)};
}

struct TangentBasis {
    Point3 p;
    FrameVec X1, X2;
    double a1, b1, a2, b2;
};

TangentBasis tangent_basis(const SurfacePatch& patch, double u, double v) {
    const Point3 p = patch.embedding(u, v);
    patch.chart->require_admissible(p);
    const FrameVec Tu = patch.chart->to_frame(p, embedding_tangent(patch, u, v, 0));
    const FrameVec Tv = patch.chart->to_frame(p, embedding_tangent(patch, u, v, 1));

    const double n1 = norm(Tu);
    if (n1 <= kDegenerateTol)
        throw DegenerateImmersion("vanishing first coordinate tangent");
    const FrameVec X1 = (1.0 / n1) * Tu;
    const double proj = dot(Tv, X1);
    const FrameVec W = Tv - proj * X1;
    const double n2 = norm(W);
    if (n2 <= kDegenerateTol)
        throw DegenerateImmersion("coordinate tangents are linearly dependent");
    const FrameVec X2 = (1.0 / n2) * W;

    TangentBasis tb;
    tb.p = p;
    tb.X1 = X1;
    tb.X2 = X2;
    tb.a1 = 1.0 / n1;
    tb.b1 = 0.0;
    tb.a2 = -proj / (n1 * n2);
    tb.b2 = 1.0 / n2;
    return tb;
}

FrameVec unit_normal(const SurfacePatch& patch, double u, double v) {
    const TangentBasis tb = tangent_basis(patch, u, v);
    return cross(tb.X1, tb.X2);
}

// Derivative of a scalar field on the patch along a coordinate direction.
double coord_derivative(const SurfacePatch& patch, const ScalarField& fn, double u, double v,
                        int dir) {
    const double h = patch.fd_step;
    if (dir == 0)
        return fd::d1([&](double t) { return fn(u + t, v); }, h);
    return fd::d1([&](double t) { return fn(u, v + t); }, h);
}

// Pullback covariant derivative of a section along a coordinate direction.
FrameVec covariant_coord(const SurfacePatch& patch, const SectionField& section, double u,
                         double v, int dir) {
    const double h = patch.fd_step;
    const auto at = [&](double t) { return dir == 0 ? section(u + t, v) : section(u, v + t); };
    FrameVec deriv;
    for (int c = 0; c < 3; ++c)
        deriv[c] = fd::d1([&](double t) { return at(t)[c]; }, h);
    const Point3 p = patch.embedding(u, v);
    const FrameVec T = patch.chart->to_frame(p, embedding_tangent(patch, u, v, dir));
    return deriv + patch.chart->covariant_constant(p, T, section(u, v));
}

// Covariant derivative along the tangent direction au*d/du + av*d/dv.
FrameVec covariant_patch_dir(const SurfacePatch& patch, const SectionField& section, double u,
                             double v, double au, double av) {
    return au * covariant_coord(patch, section, u, v, 0) +
           av * covariant_coord(patch, section, u, v, 1);
}

// First fundamental form [g_uu, g_uv, g_vv] at (u,v).
std::array<double, 3> first_fundamental(const SurfacePatch& patch, double u, double v) {
    const Point3 p = patch.embedding(u, v);
    const CoordVec Tu = embedding_tangent(patch, u, v, 0);
    const CoordVec Tv = embedding_tangent(patch, u, v, 1);
    return {patch.chart->metric(p, Tu, Tu), patch.chart->metric(p, Tu, Tv),
            patch.chart->metric(p, Tv, Tv)};
}

// Christoffel symbols G[c][a][b] of the induced metric, via central
// differences of the first fundamental form.
void christoffels(const SurfacePatch& patch, double u, double v, double G[2][2][2]) {
    const double h = patch.fd_step;
    double g[2][2], dg[2][2][2]; // dg[d][a][b] = d_d g_ab
    const auto ff = first_fundamental(patch, u, v);
    g[0][0] = ff[0];
    g[0][1] = g[1][0] = ff[1];
    g[1][1] = ff[2];
    for (int d = 0; d < 2; ++d) {
        const auto comp = [&](int idx) {
            return fd::d1(
                [&](double t) {
                    const auto f =
                        d == 0 ? first_fundamental(patch, u + t, v) : first_fundamental(patch, u, v + t);
                    return f[idx];
                },
                h);
        };
        dg[d][0][0] = comp(0);
        dg[d][0][1] = dg[d][1][0] = comp(1);
        dg[d][1][1] = comp(2);
    }
    const double det = g[0][0] * g[1][1] - g[0][1] * g[0][1];
    if (std::abs(det) <= kDegenerateTol)
        throw DegenerateImmersion("degenerate first fundamental form");
    double ginv[2][2];
    ginv[0][0] = g[1][1] / det;
    ginv[1][1] = g[0][0] / det;
    ginv[0][1] = ginv[1][0] = -g[0][1] / det;
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double s = 0.0;
                for (int d = 0; d < 2; ++d)
                    s += ginv[c][d] * (dg[a][b][d] + dg[b][a][d] - dg[d][a][b]);
                G[c][a][b] = 0.5 * s;
            }
}

// Patch components of nabla^M_{e_i} e_i for the orthonormal basis fields.
void basis_self_derivatives(const SurfacePatch& patch, double u, double v, double cu[2],
                            double cv[2]) {
    const double h = patch.fd_step;
    double G[2][2][2];
    christoffels(patch, u, v, G);
    const TangentBasis tb = tangent_basis(patch, u, v);
    const double coef[2][2] = {{tb.a1, tb.b1}, {tb.a2, tb.b2}};

    // derivatives of the coefficient fields
    double d_coef[2][2][2]; // d_coef[d][i][c] = d_d (coef of e_i along c)
    for (int d = 0; d < 2; ++d) {
        const auto basis_at = [&](double t) {
            return d == 0 ? tangent_basis(patch, u + t, v) : tangent_basis(patch, u, v + t);
        };
        d_coef[d][0][0] = fd::d1([&](double t) { return basis_at(t).a1; }, h);
        d_coef[d][0][1] = fd::d1([&](double t) { return basis_at(t).b1; }, h);
        d_coef[d][1][0] = fd::d1([&](double t) { return basis_at(t).a2; }, h);
        d_coef[d][1][1] = fd::d1([&](double t) { return basis_at(t).b2; }, h);
    }

    for (int i = 0; i < 2; ++i) {
        const double a = coef[i][0];
        const double b = coef[i][1];
        const double ea = a * d_coef[0][i][0] + b * d_coef[1][i][0];
        const double eb = a * d_coef[0][i][1] + b * d_coef[1][i][1];
        cu[i] = ea + a * a * G[0][0][0] + 2.0 * a * b * G[0][0][1] + b * b * G[0][1][1];
        cv[i] = eb + a * a * G[1][0][0] + 2.0 * a * b * G[1][0][1] + b * b * G[1][1][1];
    }
}

} // namespace

ShapeData shape_data(const SurfacePatch& patch, double u, double v) {
    const TangentBasis tb = tangent_basis(patch, u, v);
    ShapeData sd;
    sd.p = tb.p;
    sd.X1 = tb.X1;
    sd.X2 = tb.X2;
    sd.eta = cross(tb.X1, tb.X2);
    sd.nu = sd.eta.c3;
    sd.e3top = FrameVec{0.0, 0.0, 1.0} - sd.nu * sd.eta;
    sd.a1 = tb.a1;
    sd.b1 = tb.b1;
    sd.a2 = tb.a2;
    sd.b2 = tb.b2;

    const SectionField normal_field = [&patch](double uu, double vv) {
        return unit_normal(patch, uu, vv);
    };
    const double coef[2][2] = {{tb.a1, tb.b1}, {tb.a2, tb.b2}};
    const FrameVec X[2] = {tb.X1, tb.X2};
    for (int i = 0; i < 2; ++i) {
        const FrameVec AXi =
            -covariant_patch_dir(patch, normal_field, u, v, coef[i][0], coef[i][1]);
        for (int j = 0; j < 2; ++j)
            sd.A[i][j] = dot(AXi, X[j]);
    }
    sd.f = 0.5 * (sd.A[0][0] + sd.A[1][1]);
    sd.normA2 = sd.A[0][0] * sd.A[0][0] + sd.A[0][1] * sd.A[0][1] + sd.A[1][0] * sd.A[1][0] +
                sd.A[1][1] * sd.A[1][1];
    return sd;
}

FrameVec apply_A(const ShapeData& sd, const FrameVec& t) {
    const double t1 = dot(t, sd.X1);
    const double t2 = dot(t, sd.X2);
    return (t1 * sd.A[0][0] + t2 * sd.A[1][0]) * sd.X1 + (t1 * sd.A[0][1] + t2 * sd.A[1][1]) * sd.X2;
}

FrameVec apply_J(const ShapeData& sd, const FrameVec& t) {
    return cross(sd.eta, t);
}

FrameVec tangential(const ShapeData& sd, const FrameVec& v) {
    return v - dot(v, sd.eta) * sd.eta;
}

std::pair<double, double> verify_e3_identities(const SurfacePatch& patch, double u, double v) {
    const ShapeData sd = shape_data(patch, u, v);
    const double hl = 0.5 * patch.chart->params().l;

    const SectionField e3top_field = [&patch](double uu, double vv) {
        return shape_data(patch, uu, vv).e3top;
    };
    const ScalarField nu_field = [&patch](double uu, double vv) {
        return shape_data(patch, uu, vv).nu;
    };

    const double coef[2][2] = {{sd.a1, sd.b1}, {sd.a2, sd.b2}};
    const FrameVec X[2] = {sd.X1, sd.X2};
    double res1 = 0.0, res2 = 0.0;
    for (int i = 0; i < 2; ++i) {
        const FrameVec lhs = covariant_patch_dir(patch, e3top_field, u, v, coef[i][0], coef[i][1]);
        const FrameVec AX = apply_A(sd, X[i]);
        const FrameVec rhs = sd.nu * (AX - hl * apply_J(sd, X[i])) + dot(AX, sd.e3top) * sd.eta;
        res1 = std::max(res1, norm(lhs - rhs));

        const double dnu = coef[i][0] * coord_derivative(patch, nu_field, u, v, 0) +
                           coef[i][1] * coord_derivative(patch, nu_field, u, v, 1);
        res2 = std::max(res2, std::abs(dnu + dot(AX - hl * apply_J(sd, X[i]), sd.e3top)));
    }
    return {res1, res2};
}

FrameVec rough_laplacian_fd(const SurfacePatch& patch, const SectionField& section, double u,
                            double v) {
    double cu[2], cv[2];
    basis_self_derivatives(patch, u, v, cu, cv);
    const TangentBasis tb = tangent_basis(patch, u, v);
    const double coef[2][2] = {{tb.a1, tb.b1}, {tb.a2, tb.b2}};

    FrameVec acc;
    for (int i = 0; i < 2; ++i) {
        const SectionField Wi = [&patch, &section, i](double uu, double vv) {
            const TangentBasis t = tangent_basis(patch, uu, vv);
            const double a = i == 0 ? t.a1 : t.a2;
            const double b = i == 0 ? t.b1 : t.b2;
            return covariant_patch_dir(patch, section, uu, vv, a, b);
        };
        const FrameVec second = covariant_patch_dir(patch, Wi, u, v, coef[i][0], coef[i][1]);
        const FrameVec corr = covariant_patch_dir(patch, section, u, v, cu[i], cv[i]);
        acc += second - corr;
    }
    return -acc;
}

FrameVec surface_gradient(const SurfacePatch& patch, const ScalarField& fn, double u, double v) {
    const TangentBasis tb = tangent_basis(patch, u, v);
    const double du = coord_derivative(patch, fn, u, v, 0);
    const double dv = coord_derivative(patch, fn, u, v, 1);
    const double e1f = tb.a1 * du + tb.b1 * dv;
    const double e2f = tb.a2 * du + tb.b2 * dv;
    return e1f * tb.X1 + e2f * tb.X2;
}

double surface_laplacian(const SurfacePatch& patch, const ScalarField& fn, double u, double v) {
    double cu[2], cv[2];
    basis_self_derivatives(patch, u, v, cu, cv);
    const TangentBasis tb = tangent_basis(patch, u, v);
    const double coef[2][2] = {{tb.a1, tb.b1}, {tb.a2, tb.b2}};

    double acc = 0.0;
    for (int i = 0; i < 2; ++i) {
        const ScalarField Fi = [&patch, &fn, i](double uu, double vv) {
            const TangentBasis t = tangent_basis(patch, uu, vv);
            const double a = i == 0 ? t.a1 : t.a2;
            const double b = i == 0 ? t.b1 : t.b2;
            return a * coord_derivative(patch, fn, uu, vv, 0) +
                   b * coord_derivative(patch, fn, uu, vv, 1);
        };
        const double second = coef[i][0] * coord_derivative(patch, Fi, u, v, 0) +
                              coef[i][1] * coord_derivative(patch, Fi, u, v, 1);
        const double corr = cu[i] * coord_derivative(patch, fn, u, v, 0) +
                            cv[i] * coord_derivative(patch, fn, u, v, 1);
        acc += second - corr;
    }
    return -acc;
}

FrameVec tension(const SurfacePatch& patch, double u, double v) {
    const ShapeData sd = shape_data(patch, u, v);
    return 2.0 * sd.f * sd.eta;
}

FrameVec trace_nabla_A_fd(const SurfacePatch& patch, double u, double v) {
    const ShapeData sd = shape_data(patch, u, v);
    const double coef[2][2] = {{sd.a1, sd.b1}, {sd.a2, sd.b2}};

    FrameVec acc;
    for (int i = 0; i < 2; ++i) {
        const SectionField AXi_field = [&patch, i](double uu, double vv) {
            const ShapeData s = shape_data(patch, uu, vv);
            return apply_A(s, i == 0 ? s.X1 : s.X2);
        };
        const SectionField Xi_field = [&patch, i](double uu, double vv) {
            const ShapeData s = shape_data(patch, uu, vv);
            return i == 0 ? s.X1 : s.X2;
        };
        const FrameVec dAX =
            covariant_patch_dir(patch, AXi_field, u, v, coef[i][0], coef[i][1]);
        const FrameVec dX = covariant_patch_dir(patch, Xi_field, u, v, coef[i][0], coef[i][1]);
        acc += tangential(sd, dAX) - apply_A(sd, tangential(sd, dX));
    }
    return acc;
}

BiharmonicResidual biharmonic_residual(const SurfacePatch& patch, double u, double v) {
    const ShapeData sd = shape_data(patch, u, v);
    const BcvParams par = patch.chart->params();
    const ScalarField f_field = [&patch](double uu, double vv) {
        return shape_data(patch, uu, vv).f;
    };
    // The mean curvature field is itself FD-derived, so its evaluation noise
    // (~1e-12) would be amplified by 1/h^2 in the nested derivatives below.
    // A coarser outer step keeps that amplification below the truncation
    // error instead of letting it dominate.
    SurfacePatch coarse = patch;
    coarse.fd_step = std::max(patch.fd_step, 5e-2);
    const double delta_f = surface_laplacian(coarse, f_field, u, v);
    const FrameVec grad_f = surface_gradient(coarse, f_field, u, v);

    BiharmonicResidual out;
    out.scalar = delta_f + sd.f * sd.normA2 - sd.f * ricci(par, sd.eta, sd.eta);
    out.tangent = 2.0 * apply_A(sd, grad_f) + 2.0 * sd.f * grad_f -
                  2.0 * sd.f * tangential(sd, ricci_op(par, sd.eta));
    return out;
}

FrameVec delta_h_closed(const BcvParams& par, const ShapeData& sd, const FrameVec& grad_f,
                        double delta_f) {
    const double k2 = 4.0 * par.m - par.l * par.l;
    return (delta_f + sd.f * sd.normA2) * sd.eta + 2.0 * apply_A(sd, grad_f) +
           2.0 * sd.f * grad_f + k2 * sd.f * sd.nu * sd.e3top;
}

FrameVec delta_v_closed(const BcvParams& par, const ShapeData& sd) {
    const double l = par.l;
    const double k2 = 4.0 * par.m - l * l;
    const double nu = sd.nu;
    const FrameVec E3t = sd.e3top;
    const FrameVec AE3 = apply_A(sd, E3t);
    const FrameVec A2E3 = apply_A(sd, AE3);
    const FrameVec AJE3 = apply_A(sd, apply_J(sd, E3t));
    const FrameVec JAE3 = apply_J(sd, AE3);
    const double e3t2 = dot(E3t, E3t);

    const FrameVec tangent_part =
        2.0 * nu * (2.0 * A2E3 + 0.75 * l * (AJE3 - JAE3)) +
        (k2 * (e3t2 - nu * nu) + sd.normA2 + 1.25 * l * l) * nu * E3t;
    const double eta_coeff = 2.0 * dot(AE3, AE3) + l * dot(apply_J(sd, E3t), AE3) -
                             2.0 * nu * nu * sd.normA2 - k2 * nu * nu * e3t2;
    return tangent_part + eta_coeff * sd.eta;
}

FrameVec tau3_cmc_closed(const BcvParams& par, const ShapeData& sd, double alpha,
                         const FrameVec& grad_normA2, double delta_normA2) {
    const double m = par.m;
    const double l = par.l;
    const double k2 = 4.0 * m - l * l;
    const double nu = sd.nu;
    const double nu2 = nu * nu;
    const double A2 = sd.normA2;
    const FrameVec E3t = sd.e3top;
    const FrameVec AE3 = apply_A(sd, E3t);
    const FrameVec A2E3 = apply_A(sd, AE3);
    const FrameVec JAE3 = apply_J(sd, AE3);
    const FrameVec AJE3 = apply_A(sd, apply_J(sd, E3t));

    const double eta_coeff =
        2.0 * delta_normA2 + 2.0 * A2 * A2 + A2 * (l * l * (1.0 + 2.0 * nu2) - 8.0 * m * (1.0 + nu2)) +
        4.0 * k2 * dot(AE3, AE3) + 2.0 * l * k2 * dot(apply_J(sd, E3t), AE3) -
        4.0 * alpha * k2 * dot(AE3, E3t) + 2.0 * alpha * alpha * l * l * (3.0 + 4.0 * nu2) -
        32.0 * m * alpha * alpha * (1.0 + nu2);

    return alpha * eta_coeff * sd.eta +
           2.0 * alpha * k2 * nu *
               (3.0 * A2 + 4.0 * alpha * alpha + 3.0 * l * l * nu2 + m * (4.0 - 12.0 * nu2)) * E3t +
           4.0 * alpha * k2 * nu * (2.0 * A2E3 - 0.75 * l * JAE3 + 0.75 * l * AJE3) -
           4.0 * alpha * alpha * k2 * nu * AE3 + 4.0 * alpha * apply_A(sd, grad_normA2);
}

SurfacePatch slice_patch(const BcvParams& par, double z0) {
    SurfacePatch patch;
    patch.chart = std::make_shared<BcvChart>(par);
    patch.embedding = [z0](double u, double v) { return Point3{u, v, z0}; };
    patch.u0 = -0.5;
    patch.u1 = 0.5;
    patch.v0 = -0.5;
    patch.v1 = 0.5;
    return patch;
}

} // namespace bcv
