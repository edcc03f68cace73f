#include "bcv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "bcv/ambient.hpp"
#include "bcv/classify.hpp"
#include "bcv/curvature.hpp"
#include "bcv/fd.hpp"
#include "bcv/helicoid.hpp"
#include "bcv/hopf.hpp"
#include "bcv/oracles.hpp"
#include "bcv/surface.hpp"

namespace bcv {

namespace {

void record(SuiteReport& rep, const std::string& name, double residual, double tol) {
    rep.checks.push_back({name, residual, tol, residual <= tol});
}

double rel(double got, double want) { return fd::rel_err(got, want); }

double rel_vec(const FrameVec& got, const FrameVec& want) {
    const double scale = std::max({1.0, norm(got), norm(want)});
    return norm(got - want) / scale;
}

double rel_cyl(const CylVec& got, const CylVec& want) {
    const CylVec d = got - want;
    const double scale =
        std::max({1.0, std::sqrt(dot(got, got)), std::sqrt(dot(want, want))});
    return std::sqrt(dot(d, d)) / scale;
}

Point3 random_admissible_point(const AmbientChart& chart, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    for (int tries = 0; tries < 200; ++tries) {
        Point3 p{u(rng), u(rng), u(rng)};
        if (chart.admissible(p))
            return p;
    }
    throw Error("could not sample an admissible point");
}

const BcvParams kParamSample[] = {{1.0, 2.0}, {-1.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}};

} // namespace

SuiteReport verify_core(const VerifyConfig& cfg) {
    SuiteReport rep;
    rep.suite = "core";
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> uc(-1.0, 1.0);

    double worst_frame = 0.0, worst_round = 0.0, worst_metric = 0.0, worst_conn = 0.0,
           worst_curv_fd = 0.0, worst_bracket = 0.0;
    for (const BcvParams& par : kParamSample) {
        const BcvChart chart(par);
        for (int t = 0; t < 25; ++t) {
            const Point3 p = random_admissible_point(chart, rng);
            const auto fr = chart.frame(p);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const double want = i == j ? 1.0 : 0.0;
                    worst_frame = std::max(
                        worst_frame, std::abs(chart.metric(p, fr[i], fr[j]) - want));
                }

            const CoordVec v{uc(rng), uc(rng), uc(rng)};
            const CoordVec w{uc(rng), uc(rng), uc(rng)};
            const FrameVec vf = chart.to_frame(p, v);
            const CoordVec back = chart.to_coord(p, vf);
            worst_round = std::max({worst_round, std::abs(back.vx - v.vx),
                                    std::abs(back.vy - v.vy), std::abs(back.vz - v.vz)});
            worst_metric = std::max(
                worst_metric,
                rel(chart.metric(p, v, w), dot(vf, chart.to_frame(p, w))));

            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    const FrameVec closed = chart.connection(p, i, j);
                    const FrameVec oracle = connection_fd_oracle(chart, p, i, j, cfg.fd_step);
                    worst_conn = std::max(worst_conn, rel_vec(oracle, closed));
                }

            // torsion-free consistency of the closed tables
            const FrameVec lhs = chart.bracket(p, 1, 2);
            const FrameVec rhs = chart.connection(p, 1, 2) - chart.connection(p, 2, 1);
            worst_bracket = std::max(worst_bracket, rel_vec(lhs, rhs));
        }

        const Point3 p = random_admissible_point(chart, rng);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) {
                    const FrameVec oracle =
                        curvature_fd_oracle(chart, p, i, j, k, cfg.fd_step);
                    const FrameVec closed = curvature_op(par, FrameVec::basis(i),
                                                         FrameVec::basis(j), FrameVec::basis(k));
                    worst_curv_fd = std::max(worst_curv_fd, rel_vec(oracle, closed));
                }
    }
    record(rep, "frame orthonormal under the metric", worst_frame, cfg.tol_exact);
    record(rep, "frame/coordinate round trip", worst_round, cfg.tol_exact);
    record(rep, "metric equals frame-component dot product", worst_metric, cfg.tol_exact);
    record(rep, "connection table vs Koszul FD oracle", worst_conn, cfg.tol_first);
    record(rep, "connection table torsion-free", worst_bracket, cfg.tol_exact);
    record(rep, "curvature operator vs FD oracle", worst_curv_fd, cfg.tol_first);

    // curvature components and Ricci diagonal
    double worst_vals = 0.0;
    for (const BcvParams& par : kParamSample) {
        const double l2 = par.l * par.l;
        const FrameVec e1 = FrameVec::basis(1), e2 = FrameVec::basis(2), e3 = FrameVec::basis(3);
        worst_vals = std::max(
            {worst_vals,
             rel(curvature_4(par, e1, e2, e1, e2), 4.0 * par.m - 0.75 * l2),
             rel(curvature_4(par, e1, e3, e1, e3), 0.25 * l2),
             rel(curvature_4(par, e2, e3, e2, e3), 0.25 * l2),
             rel(ricci(par, e1, e1), 4.0 * par.m - 0.5 * l2),
             rel(ricci(par, e2, e2), 4.0 * par.m - 0.5 * l2),
             rel(ricci(par, e3, e3), 0.5 * l2), std::abs(ricci(par, e1, e2)),
             std::abs(ricci(par, e1, e3)), std::abs(ricci(par, e2, e3))});
    }
    record(rep, "curvature components and Ricci diagonal", worst_vals, cfg.tol_exact);

    // space forms: l^2 = 4m makes the curvature constant
    double worst_sf = 0.0;
    for (double m : {0.25, 1.0}) {
        const BcvParams par{m, 2.0 * std::sqrt(m)};
        for (int t = 0; t < 10; ++t) {
            const FrameVec X{uc(rng), uc(rng), uc(rng)};
            const FrameVec Y{uc(rng), uc(rng), uc(rng)};
            const FrameVec Z{uc(rng), uc(rng), uc(rng)};
            const FrameVec want = m * (dot(Y, Z) * X - dot(X, Z) * Y);
            worst_sf = std::max(worst_sf, rel_vec(curvature_op(par, X, Y, Z), want));
        }
    }
    record(rep, "space-form curvature when l^2 = 4m", worst_sf, cfg.tol_exact);

    // half-space model: connection table vs FD oracle
    double worst_hs = 0.0;
    {
        const HalfSpaceChart chart({-1.0, 1.5});
        std::uniform_real_distribution<double> uy(0.5, 2.0);
        for (int t = 0; t < 10; ++t) {
            const Point3 p{uc(rng), uy(rng), uc(rng)};
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    worst_hs = std::max(
                        worst_hs, rel_vec(connection_fd_oracle(chart, p, i, j, cfg.fd_step),
                                          chart.connection(p, i, j)));
        }
    }
    record(rep, "half-space connection vs Koszul FD oracle", worst_hs, cfg.tol_first);
    return rep;
}

SuiteReport verify_hopf(const VerifyConfig& cfg) {
    SuiteReport rep;
    rep.suite = "hopf";
    std::mt19937 rng(cfg.seed + 1);
    std::uniform_real_distribution<double> uc(-1.0, 1.0);

    // geodesic curvature of circles
    double worst_kg = 0.0;
    for (const double m : {1.0, 0.0, -0.25}) {
        for (double R : {0.3, 0.8}) {
            if (1.0 + m * R * R <= 0.0)
                continue;
            const BaseCurve c = circle_curve({m, 0.7}, R);
            for (double s : {0.0, 0.4, 1.1})
                worst_kg = std::max(
                    worst_kg, rel(geodesic_curvature(m, c, s), (1.0 - m * R * R) / R));
        }
    }
    record(rep, "circle geodesic curvature (1 - mR^2)/R", worst_kg, cfg.tol_exact);

    // covariant table on the adapted frame
    double worst_tab = 0.0;
    {
        const BcvParams par{0.7, 1.3};
        const Polynomial kg{0.9, 0.3, -0.2};
        const CylSection X{Polynomial::constant(1.0), Polynomial(), Polynomial()};
        const CylSection E3{Polynomial(), Polynomial::constant(1.0), Polynomial()};
        const CylSection eta{Polynomial(), Polynomial(), Polynomial::constant(1.0)};
        for (double s : {0.0, 0.5}) {
            const double k = kg.eval(s);
            const double hl = 0.5 * par.l;
            worst_tab = std::max(
                {worst_tab,
                 rel_cyl(eval_at(covariant_X(par, kg, X), s), {0.0, 0.0, -k}),
                 rel_cyl(eval_at(covariant_X(par, kg, eta), s), {k, -hl, 0.0}),
                 rel_cyl(eval_at(covariant_X(par, kg, E3), s), {0.0, 0.0, hl}),
                 rel_cyl(eval_at(covariant_E3(par, X), s), {0.0, 0.0, hl}),
                 rel_cyl(eval_at(covariant_E3(par, eta), s), {-hl, 0.0, 0.0}),
                 rel_cyl(eval_at(covariant_E3(par, E3), s), {0.0, 0.0, 0.0})});
        }
    }
    record(rep, "adapted-frame covariant derivative table", worst_tab, cfg.tol_exact);

    // Laplacian of the tension field against its displayed coefficients
    double worst_lap = 0.0;
    for (int t = 0; t < 20; ++t) {
        const BcvParams par{uc(rng), uc(rng)};
        const Polynomial kg{uc(rng), uc(rng), uc(rng), uc(rng), uc(rng)};
        const CylSection lap = rough_laplacian(par, kg, tension_section(kg));
        const double s = 0.3 * uc(rng);
        const double k = kg.eval(s);
        const double k1 = kg.derivative().eval(s);
        const double k2 = kg.derivative().derivative().eval(s);
        const CylVec want{3.0 * k * k1, -par.l * k1,
                          k2 - 0.5 * par.l * par.l * k - k * k * k};
        worst_lap = std::max(worst_lap, rel_cyl(eval_at(lap, s), want));
    }
    record(rep, "Laplacian of the tension field (closed coefficients)", worst_lap,
           cfg.tol_exact);

    // closed-form third-order tension vs term-by-term assembly
    double worst_t3 = 0.0;
    for (int t = 0; t < 30; ++t) {
        const BcvParams par{uc(rng), uc(rng)};
        const Polynomial kg{uc(rng), uc(rng), uc(rng), uc(rng), uc(rng)};
        const double s = 0.4 * uc(rng);
        const CylVec assembled = tension_field_poly(par, kg, 3, s);
        const CylVec closed = tau3_hopf(par, jet_from_poly(kg, s));
        worst_t3 = std::max(worst_t3, rel_cyl(closed, assembled));
    }
    record(rep, "third-order tension closed form vs assembly", worst_t3, cfg.tol_exact);

    // residual combination identity and the l = 0 first integral
    double worst_id = 0.0;
    for (int t = 0; t < 20; ++t) {
        const BcvParams par{uc(rng), uc(rng)};
        const Polynomial kg{uc(rng), uc(rng), uc(rng), uc(rng)};
        const double s = 0.4 * uc(rng);
        const KgJet j = jet_from_poly(kg, s);
        const auto K = triharmonic_residuals(par, j);
        const double want =
            par.l * j.k1 *
            (3.0 * par.l * par.l * j.k - 5.0 * j.k * j.k * j.k - 40.0 * j.k2);
        worst_id = std::max(worst_id,
                            rel(4.0 * par.l * K[0] + 5.0 * j.k * K[1], want));

        const BcvParams par0{par.m, 0.0};
        const auto K0 = triharmonic_residuals(par0, j);
        const Polynomial first_integral =
            2.0 * kg * kg.derivative().derivative() - kg * kg * (kg * kg) +
            kg.derivative() * kg.derivative();
        worst_id = std::max(
            worst_id, rel(K0[0], -2.5 * first_integral.derivative().eval(s)));
    }
    record(rep, "residual identities (combination and first integral)", worst_id,
           cfg.tol_exact);

    // closed r-tension of constant-curvature cylinders vs assembly
    double worst_rt = 0.0;
    std::uniform_real_distribution<double> uk(0.2, 1.5);
    for (int r = 2; r <= 8; ++r) {
        for (int t = 0; t < 6; ++t) {
            const BcvParams par{uc(rng), uc(rng)};
            const double kappa = uk(rng);
            worst_rt = std::max(
                worst_rt, rel_cyl(r_tension_cmc(par, kappa, r), r_tension_assembled(par, kappa, r)));
        }
    }
    record(rep, "constant-curvature r-tension closed form vs assembly", worst_rt, 1e-9);

    // quadratic-condition roots annihilate the r-tension
    double worst_root = 0.0;
    for (int r = 2; r <= 6; ++r) {
        for (const BcvParams& par : kParamSample) {
            if (par.m <= 0.0)
                continue;
            const RootReport rr = quadratic_condition(par.m, par.l, r);
            for (int i = 0; i < rr.n_positive; ++i) {
                const double ksq = rr.positive[static_cast<std::size_t>(i)];
                const double kappa = std::sqrt(ksq);
                const CylVec tau = r_tension_cmc(par, kappa, r);
                // normalise by the size of the leading term c^(r-1)
                const double c = ksq + 0.5 * par.l * par.l;
                const double scale = std::pow(std::max(1.0, c), r - 1);
                worst_root = std::max(worst_root, std::sqrt(dot(tau, tau)) / scale);
            }
        }
    }
    record(rep, "quadratic roots annihilate the r-tension", worst_root, 1e-9);

    // base radii relations
    double worst_rad = 0.0;
    for (double m : {0.5, 1.0}) {
        for (double kappa : {0.4, 1.0, 2.0}) {
            const auto [R, rho] = circle_radius(m, kappa);
            worst_rad = std::max(worst_rad, rel(rho, 1.0 / (2.0 * std::sqrt(m))));
            // coordinate circle of the same curvature sits at distance R
            // from the centre of the round base sphere of radius rho
            const double Rc = circle_coord_radius(m, kappa);
            const double F = 1.0 + m * Rc * Rc;
            worst_rad = std::max(worst_rad, rel(R, Rc / F));
        }
    }
    record(rep, "base circle radii relations", worst_rad, cfg.tol_exact);
    return rep;
}

SuiteReport verify_classify(const VerifyConfig& cfg) {
    SuiteReport rep;
    rep.suite = "classify";
    std::mt19937 rng(cfg.seed + 2);

    // reference classifications
    double worst_table = 0.0;
    {
        const Classification c1 = classify(1.0, 1.0, 2);
        worst_table = std::max(worst_table,
                               c1.n_roots == 1 ? rel(c1.kappa_sq[0], 3.0) : 1.0);
        const Classification c2 = classify(1.0, 0.0, 3);
        worst_table = std::max(
            {worst_table, c2.n_roots == 1 ? rel(c2.kappa_sq[0], 8.0) : 1.0,
             c2.n_roots == 1 ? rel(c2.radius[0], 1.0 / std::sqrt(12.0)) : 1.0});
        const Classification c3 = classify(1.0, 2.0, 4);
        worst_table = std::max(worst_table, c3.n_roots == 0 ? 0.0 : 1.0);
        const Classification c4 = classify(1.0, 2.0, 5);
        worst_table = std::max(worst_table,
                               c4.n_roots == 1 ? rel(c4.kappa_sq[0], 1.0) : 1.0);
        const Classification c5 = classify(0.9, 2.0, 8);
        worst_table = std::max(worst_table, c5.n_roots == 0 ? 0.0 : 1.0);
        const Classification c6 = classify(0.9, 2.0, 10);
        worst_table =
            std::max({worst_table, c6.n_roots == 2 ? rel(c6.kappa_sq[0], 0.4) : 1.0,
                      c6.n_roots == 2 ? rel(c6.kappa_sq[1], 2.0) : 1.0});
        worst_table = std::max(worst_table, std::abs(c6.r_bound - 8.9814239699) < 1e-3 ? 0.0 : 1.0);
        for (double m : {0.0, -0.7})
            for (int r : {2, 3, 7})
                worst_table =
                    std::max(worst_table, classify(m, 1.1, r).n_roots == 0 ? 0.0 : 1.0);
    }
    record(rep, "reference classification table", worst_table, cfg.tol_exact);

    // r_a limits and monotonicity
    double worst_ra = 0.0;
    {
        worst_ra = std::max(worst_ra, std::abs(r_a(1.0 - 1e-6) - 4.0) <= 1e-2 ? 0.0 : 1.0);
        worst_ra = std::max(worst_ra, r_a(0.75 + 1e-6) > 1e3 ? 0.0 : 1.0);
        double prev = std::numeric_limits<double>::infinity();
        bool monotone = true;
        for (int i = 1; i <= 1000; ++i) {
            const double a = 0.75 + 0.25 * i / 1001.0;
            const double v = r_a(a);
            if (v >= prev)
                monotone = false;
            prev = v;
        }
        worst_ra = std::max(worst_ra, monotone ? 0.0 : 1.0);
    }
    record(rep, "r_a limits and strict monotonicity", worst_ra, cfg.tol_exact);

    // r_bound consistency with the normalised bound
    double worst_rb = 0.0;
    std::uniform_real_distribution<double> ua(0.76, 0.99);
    for (int t = 0; t < 50; ++t) {
        const double a = ua(rng);
        const double l = 1.0 + t * 0.01;
        const double m = 0.25 * a * l * l;
        worst_rb = std::max(worst_rb, rel(r_bound(m, l), r_a(a)));
    }
    record(rep, "r_bound agrees with the normalised bound", worst_rb, cfg.tol_exact);

    // sphere consistency at (m,l) = (1,2)
    double worst_sp = 0.0;
    std::uniform_real_distribution<double> uk(0.1, 2.0);
    for (int r = 2; r <= 6; ++r)
        for (int t = 0; t < 10; ++t) {
            const auto [cyl, sph] = sphere_consistency(r, uk(rng));
            worst_sp = std::max(worst_sp, rel(cyl, sph));
        }
    record(rep, "unit-sphere consistency of the condition", worst_sp, 1e-12);

    // diagram grid spot checks
    double worst_grid = 0.0;
    {
        const DiagramGrid g = diagram_grid(3, 0.0, 2.0, -1.0, 1.0, 5, 5);
        // l = 0 column: tag follows the sign of m
        for (int im = 0; im < 5; ++im) {
            const double m = g.m_values[static_cast<std::size_t>(im)];
            const int want = m > 0.0 ? 1 : 0;
            worst_grid = std::max(worst_grid, g.at(im, 0) == want ? 0.0 : 1.0);
        }
        const DiagramGrid g2 = diagram_grid(5, 2.0, 2.0 + 1e-9, 1.0, 1.0 + 1e-9, 2, 2);
        worst_grid = std::max(worst_grid, g2.at(0, 0) == 2 ? 0.0 : 1.0);
    }
    record(rep, "diagram grid spot cells", worst_grid, cfg.tol_exact);
    return rep;
}

SuiteReport verify_surface(const VerifyConfig& cfg) {
    SuiteReport rep;
    rep.suite = "surface";

    const BcvParams par{0.8, 1.1};
    const double kappa = 0.9;
    const BaseCurve circle = circle_curve(par, circle_coord_radius(par.m, kappa));
    const SurfacePatch cyl = cylinder_patch(par, circle, 0.0, 1.0, -0.5, 0.5);
    const SurfacePatch slice = slice_patch({0.6, 0.9}, 0.2);

    // shape data on the cylinder against the exact values; the patch picks
    // its own orthonormal tangent basis, so compare basis-invariant
    // quantities and the shape operator as an operator
    double worst_sd = 0.0;
    {
        const ShapeData got = shape_data(cyl, 0.0, 0.1);
        const ShapeData want = cylinder_shape_exact(par, kappa);
        worst_sd = std::max({rel(got.f, want.f), rel(got.normA2, want.normA2),
                             std::abs(got.nu - want.nu), rel_vec(got.eta, want.eta),
                             rel_vec(apply_A(got, want.X1), apply_A(want, want.X1)),
                             rel_vec(apply_A(got, want.X2), apply_A(want, want.X2))});
    }
    record(rep, "cylinder shape data vs exact values", worst_sd, cfg.tol_first);

    // shape operator symmetry on a generic patch
    double worst_sym = 0.0;
    for (double u : {-0.2, 0.15})
        for (double v : {-0.1, 0.2}) {
            const ShapeData sd = shape_data(slice, u, v);
            worst_sym = std::max(worst_sym, std::abs(sd.A[0][1] - sd.A[1][0]));
        }
    record(rep, "shape operator symmetric", worst_sym, cfg.tol_first);

    // structural identities of the vertical field
    double worst_e3 = 0.0;
    for (const SurfacePatch* patch : {&cyl, &slice}) {
        const auto [r1, r2] = verify_e3_identities(*patch, 0.1, 0.05);
        worst_e3 = std::max({worst_e3, r1, r2});
    }
    record(rep, "vertical-field structural identities", worst_e3, cfg.tol_second);

    // FD rough Laplacian vs the exact cylinder calculus, with the section
    // expressed in the adapted frame {X, E3, eta} of the cylinder
    double worst_lap = 0.0;
    {
        const Polynomial kg = Polynomial::constant(kappa);
        const CylSection w{Polynomial{0.3, -0.2}, Polynomial{-1.0, 0.5}, Polynomial{0.2, 0.1}};
        const auto adapted = [&](double s) {
            const CurveJet2 j = circle(s);
            const double F = conformal_factor(par, j.x, j.y);
            return std::array<FrameVec, 3>{FrameVec{j.dx / F, j.dy / F, 0.0},
                                           FrameVec{0.0, 0.0, 1.0},
                                           FrameVec{j.dy / F, -j.dx / F, 0.0}};
        };
        const SectionField section = [&](double s, double t) {
            (void)t;
            const auto fr = adapted(s);
            const CylVec val = eval_at(w, s);
            return val.x * fr[0] + val.e3 * fr[1] + val.eta * fr[2];
        };
        const CylVec want_c = eval_at(rough_laplacian(par, kg, w), 0.2);
        const auto fr = adapted(0.2);
        const FrameVec want = want_c.x * fr[0] + want_c.e3 * fr[1] + want_c.eta * fr[2];
        worst_lap = rel_vec(rough_laplacian_fd(cyl, section, 0.2, 0.0), want);
    }
    record(rep, "FD rough Laplacian vs exact cylinder calculus", worst_lap, cfg.tol_second);

    // closed Laplacian of H and V vs FD on the cylinder
    double worst_dh = 0.0, worst_dv = 0.0;
    {
        const double u = 0.15, v = 0.0;
        const ShapeData sd = shape_data(cyl, u, v);
        const ScalarField f_field = [&](double uu, double vv) {
            return shape_data(cyl, uu, vv).f;
        };
        const FrameVec grad_f = surface_gradient(cyl, f_field, u, v);
        const double delta_f = surface_laplacian(cyl, f_field, u, v);
        const SectionField H = [&](double uu, double vv) {
            const ShapeData s = shape_data(cyl, uu, vv);
            return s.f * s.eta;
        };
        worst_dh = rel_vec(rough_laplacian_fd(cyl, H, u, v),
                           delta_h_closed(par, sd, grad_f, delta_f));
        const SectionField V = [&](double uu, double vv) {
            const ShapeData s = shape_data(cyl, uu, vv);
            return s.nu * s.e3top;
        };
        worst_dv = rel_vec(rough_laplacian_fd(cyl, V, u, v), delta_v_closed(par, sd));
    }
    record(rep, "closed Laplacian of the mean curvature vector", worst_dh, cfg.tol_second);
    record(rep, "closed Laplacian of the vertical section", worst_dv, cfg.tol_second);

    // trace of nabla A identity
    double worst_tr = 0.0;
    for (const SurfacePatch* patch : {&cyl, &slice}) {
        const double u = 0.1, v = 0.05;
        const ShapeData sd = shape_data(*patch, u, v);
        const ScalarField f_field = [patch](double uu, double vv) {
            return shape_data(*patch, uu, vv).f;
        };
        const FrameVec grad_f = surface_gradient(*patch, f_field, u, v);
        const BcvParams pp = patch->chart->params();
        const FrameVec want =
            2.0 * grad_f + (4.0 * pp.m - pp.l * pp.l) * sd.nu * sd.e3top;
        worst_tr = std::max(worst_tr, rel_vec(trace_nabla_A_fd(*patch, u, v), want));
    }
    record(rep, "trace of nabla A identity", worst_tr, cfg.tol_second);

    // third-order tension closed form vs the cylinder calculus
    double worst_t3 = 0.0;
    for (const BcvParams p3 : {BcvParams{1.0, 1.2}, BcvParams{0.7, 0.0}}) {
        for (double k3 : {0.5, 1.3}) {
            const ShapeData sd = cylinder_shape_exact(p3, k3);
            const FrameVec closed =
                tau3_cmc_closed(p3, sd, sd.f, FrameVec{}, 0.0);
            const CylVec want_c = tau3_hopf(p3, KgJet::constant(k3));
            const FrameVec want = want_c.x * sd.X1 + want_c.e3 * sd.X2 + want_c.eta * sd.eta;
            worst_t3 = std::max(worst_t3, rel_vec(closed, want));
        }
    }
    record(rep, "CMC third-order tension vs cylinder closed form", worst_t3, cfg.tol_exact);

    // proper biharmonic cylinders have vanishing biharmonic residual
    double worst_bh = 0.0;
    for (const BcvParams pb : {BcvParams{1.0, 1.0}, BcvParams{1.0, 0.0}}) {
        const double k2 = 4.0 * pb.m - pb.l * pb.l;
        const SurfacePatch patch = cylinder_patch(
            pb, circle_curve(pb, circle_coord_radius(pb.m, std::sqrt(k2))), 0.0, 1.0, -0.5, 0.5);
        const BiharmonicResidual res = biharmonic_residual(patch, 0.1, 0.0);
        worst_bh = std::max({worst_bh, std::abs(res.scalar), norm(res.tangent)});
    }
    record(rep, "biharmonic cylinders have zero residual", worst_bh, cfg.tol_first);
    return rep;
}

SuiteReport verify_helicoid(const VerifyConfig& cfg) {
    SuiteReport rep;
    rep.suite = "helicoid";
    std::mt19937 rng(cfg.seed + 3);
    std::uniform_real_distribution<double> ua(0.1, 1.2);
    std::uniform_real_distribution<double> ul(0.0, 2.0);

    // isometry onto the half-space model
    double worst_iso = 0.0;
    {
        const BcvParams par{-1.0, 1.3};
        const BcvChart chart(par);
        const HalfSpaceChart hchart(par);
        std::uniform_real_distribution<double> uc(-0.4, 0.4);
        for (int t = 0; t < 10; ++t) {
            const Point3 p = random_admissible_point(chart, rng);
            const Point3 q = theta_isometry(par, p);
            worst_iso = std::max(worst_iso, q.y > 0.0 ? 0.0 : 1.0);

            // push forward two coordinate vectors by finite differences and
            // compare inner products
            const CoordVec v{uc(rng), uc(rng), uc(rng)};
            const CoordVec w{uc(rng), uc(rng), uc(rng)};
            const auto push = [&](const CoordVec& vec) {
                const auto line = [&](double t2) {
                    return theta_isometry(
                        par, {p.x + t2 * vec.vx, p.y + t2 * vec.vy, p.z + t2 * vec.vz});
                };
                return CoordVec{fd::d1([&](double t2) { return line(t2).x; }, cfg.fd_step),
                                fd::d1([&](double t2) { return line(t2).y; }, cfg.fd_step),
                                fd::d1([&](double t2) { return line(t2).z; }, cfg.fd_step)};
            };
            const CoordVec dv = push(v), dw = push(w);
            worst_iso = std::max(worst_iso, rel(hchart.metric(q, dv, dw), chart.metric(p, v, w)));

            // the vertical field is preserved
            const CoordVec d3 = push({0.0, 0.0, 1.0});
            worst_iso = std::max({worst_iso, std::abs(d3.vx), std::abs(d3.vy),
                                  std::abs(d3.vz - 1.0)});
        }
    }
    record(rep, "half-space isometry preserves metric and vertical field", worst_iso,
           cfg.tol_first);

    // closed geometry of the helicoid
    double worst_geo = 0.0;
    for (int t = 0; t < 40; ++t) {
        const double alpha = ua(rng);
        std::uniform_real_distribution<double> um(-4.0, -alpha * alpha - 0.05);
        const double m = um(rng);
        const double l = ul(rng);
        const HelicoidData h = helicoid_geometry(alpha, m, l);
        const double sm = std::sqrt(-m);

        worst_geo = std::max(
            {worst_geo, rel(h.f, h.alpha_signed), rel(h.normA2, 0.5 * (8.0 * alpha * alpha + l * l)),
             rel(h.nu, 2.0 * sm / h.L),
             rel_vec(h.eta, (1.0 / h.L) * FrameVec{l, 4.0 * h.a * m, 2.0 * sm})});

        // displayed component formulas (tangential quantities)
        const double L = h.L, L2 = h.L * h.L, a = h.a;
        worst_geo = std::max(
            {worst_geo,
             rel_vec(h.e3top, FrameVec{-2.0 * l * sm / L2, 8.0 * a * std::pow(sm, 3) / L2,
                                       4.0 * m / L2 + 1.0}),
             rel_vec(h.J_e3top, FrameVec{4.0 * a * m / L, -l / L, 0.0}),
             rel_vec(h.A_e3top, FrameVec{-2.0 * a * l * m / L, l * l / (2.0 * L), 0.0}),
             rel_vec(h.A_J_e3top,
                     FrameVec{sm * (32.0 * a * a * m * m + l * l) / L2,
                              4.0 * a * l * std::pow(sm, 3) / L2,
                              -(16.0 * a * a * l * m * m + l * l * l) / (2.0 * L2)}),
             rel_vec(h.A2_e3top,
                     FrameVec{-l * sm * (32.0 * a * a * m * m + l * l) / (2.0 * L2),
                              -2.0 * a * l * l * std::pow(sm, 3) / L2,
                              (16.0 * a * a * l * l * m * m + l * l * l * l) / (4.0 * L2)}),
             rel_vec(h.J_A_e3top,
                     FrameVec{-l * l * sm / L2, 4.0 * a * l * std::pow(sm, 3) / L2,
                              (16.0 * a * a * l * m * m + l * l * l) / (2.0 * L2)}),
             std::abs(dot(h.A_e3top, h.e3top))});
    }
    record(rep, "closed helicoid geometry (normal, shape vectors, |A|^2)", worst_geo,
           cfg.tol_exact);

    // third-order tension against the general CMC closed form
    double worst_t3 = 0.0;
    for (int t = 0; t < 25; ++t) {
        const double alpha = ua(rng);
        std::uniform_real_distribution<double> um(-4.0, -alpha * alpha - 0.05);
        const double m = um(rng);
        const double l = ul(rng);
        const BcvParams par{m, l};
        const SurfacePatch patch = helicoid_patch(alpha, m, l);
        const ShapeData psd = shape_data(patch, 0.0, 1.0);
        const FrameVec closed = tau3_cmc_closed(par, psd, psd.f, FrameVec{}, 0.0);
        const Tau3Helicoid want = tau3_helicoid(alpha, m, l);
        worst_t3 = std::max(worst_t3, rel_vec(closed, want.tau3));
    }
    record(rep, "helicoid third-order tension vs CMC closed form", worst_t3, cfg.tol_second);

    // nonexistence certificate (small scan)
    NonexistenceScan scan;
    scan.cells = 12;
    scan.samples = 40;
    scan.seed = cfg.seed;
    const NonexistenceReport nrep = nonexistence_certify(scan);
    record(rep, "triharmonic nonexistence certificate", nrep.passed ? 0.0 : 1.0,
           cfg.tol_exact);
    return rep;
}

std::vector<SuiteReport> verify_all(const VerifyConfig& cfg) {
    return {verify_core(cfg), verify_hopf(cfg), verify_classify(cfg), verify_surface(cfg),
            verify_helicoid(cfg)};
}

std::vector<SuiteReport> verify_by_name(const std::string& name, const VerifyConfig& cfg) {
    if (name == "all")
        return verify_all(cfg);
    if (name == "core")
        return {verify_core(cfg)};
    if (name == "hopf")
        return {verify_hopf(cfg)};
    if (name == "classify")
        return {verify_classify(cfg)};
    if (name == "surface")
        return {verify_surface(cfg)};
    if (name == "helicoid")
        return {verify_helicoid(cfg)};
    throw InvalidParams("unknown verification suite: " + name);
}

} // namespace bcv
