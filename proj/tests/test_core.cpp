#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "bcv/ambient.hpp"
#include "bcv/curvature.hpp"
#include "bcv/fd.hpp"
#include "bcv/oracles.hpp"

using namespace bcv;

namespace {

const std::vector<BcvParams> kParams = {{1.0, 2.0}, {-1.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}};

std::vector<Point3> sample_points(double m) {
    if (m < 0.0) {
        // stay well inside the disk x^2 + y^2 < 1/(-m)
        const double s = 0.4 / std::sqrt(-m);
        return {{0.3 * s, -0.2 * s, 0.7}, {-0.8 * s, 0.5 * s, -1.1}, {0.1 * s, 0.9 * s, 0.0}};
    }
    return {{0.4, -0.3, 0.2}, {-1.1, 0.7, -0.5}, {0.0, 1.3, 2.0}};
}

double frame_rel(const FrameVec& a, const FrameVec& b) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        worst = std::max(worst, fd::rel_err(a[i], b[i]));
    return worst;
}

} // namespace

TEST_SUITE("core") {

TEST_CASE("conformal factor values and domain guard") {
    CHECK(conformal_factor({0.0, 0.0}, 7.0, -3.0) == doctest::Approx(1.0));
    CHECK(conformal_factor({1.0, 2.0}, 1.0, 0.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(conformal_factor({-1.0, 0.0}, 1.0, 0.0), OutOfDomain);
    CHECK_THROWS_AS(conformal_factor({-1.0, 0.0}, 1.5, 0.0), OutOfDomain);

    const BcvChart chart{{-1.0, 1.0}};
    CHECK(chart.admissible({0.5, 0.0, 3.0}));
    CHECK_FALSE(chart.admissible({1.0, 0.5, 0.0}));
}

TEST_CASE("frame components at reference points") {
    const auto [e1, e2, e3] = frame_at({1.0, 2.0}, {1.0, 0.0, 0.0});
    CHECK(e1.vx == doctest::Approx(2.0));
    CHECK(e1.vy == doctest::Approx(0.0));
    CHECK(e1.vz == doctest::Approx(0.0));
    CHECK(e2.vx == doctest::Approx(0.0));
    CHECK(e2.vy == doctest::Approx(2.0));
    CHECK(e2.vz == doctest::Approx(1.0));
    CHECK(e3.vx == doctest::Approx(0.0));
    CHECK(e3.vy == doctest::Approx(0.0));
    CHECK(e3.vz == doctest::Approx(1.0));

    // Euclidean degeneration
    const auto [f1, f2, f3] = frame_at({0.0, 0.0}, {2.0, -5.0, 1.0});
    CHECK(f1.vx == doctest::Approx(1.0));
    CHECK(f2.vy == doctest::Approx(1.0));
    CHECK(f3.vz == doctest::Approx(1.0));
    CHECK(std::abs(f1.vy) + std::abs(f1.vz) + std::abs(f2.vx) + std::abs(f2.vz) +
              std::abs(f3.vx) + std::abs(f3.vy) ==
          doctest::Approx(0.0));
}

TEST_CASE("frame is orthonormal and conversions round trip") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> comp(-2.0, 2.0);
    for (const auto& par : kParams) {
        const BcvChart chart{par};
        for (const auto& p : sample_points(par.m)) {
            const auto E = chart.frame(p);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const double want = i == j ? 1.0 : 0.0;
                    CHECK(chart.metric(p, E[static_cast<std::size_t>(i)],
                                       E[static_cast<std::size_t>(j)]) ==
                          doctest::Approx(want).epsilon(1e-12));
                }
            const CoordVec v{comp(rng), comp(rng), comp(rng)};
            const CoordVec back = chart.to_coord(p, chart.to_frame(p, v));
            CHECK(v.vx == doctest::Approx(back.vx).epsilon(1e-12));
            CHECK(v.vy == doctest::Approx(back.vy).epsilon(1e-12));
            CHECK(v.vz == doctest::Approx(back.vz).epsilon(1e-12));

            // metric equals the dot product of frame components
            const CoordVec w{comp(rng), comp(rng), comp(rng)};
            CHECK(chart.metric(p, v, w) ==
                  doctest::Approx(dot(chart.to_frame(p, v), chart.to_frame(p, w)))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("metric reference values") {
    const BcvParams par{1.0, 2.0};
    const Point3 p{1.0, 0.0, 0.0};
    CHECK(metric_at(par, p, {0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}) == doctest::Approx(1.0));
    CHECK(metric_at(par, p, {1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}) == doctest::Approx(0.25));
}

TEST_CASE("frame brackets") {
    const BcvParams par{1.0, 3.0};
    const Point3 p{1.0, 0.0, 0.0};
    const FrameVec b12 = lie_bracket_frame(par, p, 1, 2);
    CHECK(b12.c1 == doctest::Approx(0.0));
    CHECK(b12.c2 == doctest::Approx(2.0));
    CHECK(b12.c3 == doctest::Approx(3.0));

    const FrameVec b23 = lie_bracket_frame(par, p, 2, 3);
    CHECK(norm(b23) == doctest::Approx(0.0));

    // antisymmetry and the general formula at another point
    const Point3 q{0.3, -0.6, 1.0};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const FrameVec bij = lie_bracket_frame(par, q, i, j);
            const FrameVec bji = lie_bracket_frame(par, q, j, i);
            CHECK(norm(bij + bji) == doctest::Approx(0.0).epsilon(1e-15));
        }
    const FrameVec b = lie_bracket_frame(par, q, 1, 2);
    CHECK(b.c1 == doctest::Approx(-2.0 * par.m * q.y));
    CHECK(b.c2 == doctest::Approx(2.0 * par.m * q.x));
    CHECK(b.c3 == doctest::Approx(par.l));
}

TEST_CASE("connection table reference entries") {
    const Point3 p{0.2, 2.0, -1.0};
    const FrameVec c11 = connection_frame({1.0, 0.7}, p, 1, 1);
    CHECK(c11.c1 == doctest::Approx(0.0));
    CHECK(c11.c2 == doctest::Approx(4.0)); // 2my with m=1, y=2
    CHECK(c11.c3 == doctest::Approx(0.0));

    CHECK(norm(connection_frame({1.0, 0.7}, p, 3, 3)) == doctest::Approx(0.0));

    const FrameVec c12 = connection_frame({0.0, 0.7}, p, 1, 2);
    CHECK(c12.c1 == doctest::Approx(0.0));
    CHECK(c12.c2 == doctest::Approx(0.0));
    CHECK(c12.c3 == doctest::Approx(0.35));
}

TEST_CASE("vertical field rotates tangent vectors") {
    // nabla_X E3 = (l/2) X x E3 for horizontal X, read off the table
    const BcvParams par{0.5, 1.6};
    const Point3 p{0.4, -0.1, 0.9};
    const FrameVec e1 = FrameVec::basis(1), e2 = FrameVec::basis(2), e3 = FrameVec::basis(3);
    CHECK(norm(connection_frame(par, p, 1, 3) - 0.5 * par.l * cross(e1, e3)) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(norm(connection_frame(par, p, 2, 3) - 0.5 * par.l * cross(e2, e3)) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(norm(connection_frame(par, p, 3, 3)) == doctest::Approx(0.0));

    CHECK(norm(cross(e1, e2) - e3) == doctest::Approx(0.0));
    const FrameVec v{0.3, -1.2, 0.8};
    CHECK(norm(cross(v, v)) == doctest::Approx(0.0));
}

TEST_CASE("closed-form connection matches the Koszul reconstruction") {
    for (const auto& par : kParams) {
        const BcvChart chart{par};
        for (const auto& p : sample_points(par.m))
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    const FrameVec closed = chart.connection(p, i, j);
                    const FrameVec oracle = connection_fd_oracle(chart, p, i, j);
                    CHECK(frame_rel(closed, oracle) <= 1e-6);
                }
    }

    // flat case: everything vanishes
    const BcvChart flat{{0.0, 0.0}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(norm(connection_fd_oracle(flat, {0.3, 0.4, 0.5}, i, j)) <= 1e-9);
}

TEST_CASE("connection is torsion free") {
    for (const auto& par : kParams) {
        const BcvChart chart{par};
        const Point3 p = sample_points(par.m)[1];
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const FrameVec torsion =
                    chart.connection(p, i, j) - chart.connection(p, j, i) - chart.bracket(p, i, j);
                CHECK(norm(torsion) <= 1e-13);
            }
    }
}

TEST_CASE("curvature components and symmetries") {
    const FrameVec e1 = FrameVec::basis(1), e2 = FrameVec::basis(2), e3 = FrameVec::basis(3);

    CHECK(curvature_4({1.0, 2.0}, e1, e2, e1, e2) == doctest::Approx(1.0)); // 4m - 3l^2/4
    CHECK(curvature_4({1.0, 2.0}, e1, e3, e1, e3) == doctest::Approx(1.0)); // l^2/4
    CHECK(curvature_4({-1.0, 1.0}, e1, e2, e1, e2) == doctest::Approx(-4.75));
    CHECK(curvature_4({-1.0, 1.0}, e2, e3, e2, e3) == doctest::Approx(0.25));

    const FrameVec z{0.1, 0.2, 0.3};
    CHECK(norm(curvature_op({0.0, 0.0}, e1, e2, z)) == doctest::Approx(0.0));

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> comp(-1.5, 1.5);
    const BcvParams par{0.7, 1.3};
    for (int t = 0; t < 20; ++t) {
        const FrameVec X{comp(rng), comp(rng), comp(rng)};
        const FrameVec Y{comp(rng), comp(rng), comp(rng)};
        const FrameVec Z{comp(rng), comp(rng), comp(rng)};
        const FrameVec W{comp(rng), comp(rng), comp(rng)};
        CHECK(curvature_4(par, X, Y, Z, W) ==
              doctest::Approx(-curvature_4(par, Y, X, Z, W)).epsilon(1e-12));
        CHECK(curvature_4(par, X, Y, Z, W) ==
              doctest::Approx(curvature_4(par, Z, W, X, Y)).epsilon(1e-12));
    }
}

TEST_CASE("space forms have constant curvature") {
    // l^2 = 4m: the operator degenerates to m (<Y,Z>X - <X,Z>Y)
    const BcvParams par{1.0, 2.0};
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    for (int t = 0; t < 25; ++t) {
        const FrameVec X{comp(rng), comp(rng), comp(rng)};
        const FrameVec Y{comp(rng), comp(rng), comp(rng)};
        const FrameVec Z{comp(rng), comp(rng), comp(rng)};
        const FrameVec want = par.m * (dot(Y, Z) * X - dot(X, Z) * Y);
        CHECK(norm(curvature_op(par, X, Y, Z) - want) <= 1e-12);
    }
}

TEST_CASE("curvature oracle matches the algebraic operator") {
    for (const auto& par : {BcvParams{1.0, 2.0}, BcvParams{-1.0, 1.0}}) {
        const BcvChart chart{par};
        const Point3 p = sample_points(par.m)[0];
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) {
                    const FrameVec oracle = curvature_fd_oracle(chart, p, i, j, k);
                    const FrameVec closed = curvature_op(par, FrameVec::basis(i),
                                                         FrameVec::basis(j), FrameVec::basis(k));
                    CHECK(norm(oracle - closed) <= 1e-4);
                }
    }

    const BcvChart flat{{0.0, 0.0}};
    CHECK(norm(curvature_fd_oracle(flat, {0.1, 0.2, 0.3}, 1, 2, 2)) <= 1e-7);

    // R_2323 = l^2/4 through the oracle
    const BcvChart berger{{1.0, 1.5}};
    const FrameVec r233 = curvature_fd_oracle(berger, {0.2, -0.4, 0.6}, 2, 3, 3);
    CHECK(r233.c2 == doctest::Approx(1.5 * 1.5 / 4.0).epsilon(1e-4));
}

TEST_CASE("ricci diagonal") {
    const FrameVec e1 = FrameVec::basis(1), e2 = FrameVec::basis(2), e3 = FrameVec::basis(3);
    for (const auto& par : kParams) {
        const double l2 = par.l * par.l;
        CHECK(ricci(par, e1, e1) == doctest::Approx(4.0 * par.m - 0.5 * l2));
        CHECK(ricci(par, e2, e2) == doctest::Approx(4.0 * par.m - 0.5 * l2));
        CHECK(ricci(par, e3, e3) == doctest::Approx(0.5 * l2));
        CHECK(ricci(par, e1, e2) == doctest::Approx(0.0));
        CHECK(ricci(par, e1, e3) == doctest::Approx(0.0));
    }
}

} // TEST_SUITE
