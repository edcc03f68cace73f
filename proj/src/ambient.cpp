#include "bcv/ambient.hpp"

#include <cmath>
#include <string>

namespace bcv {

void AmbientChart::check_index(int i) {
    if (i < 1 || i > 3)
        throw InvalidParams("frame index must be 1, 2 or 3, got " + std::to_string(i));
}

void AmbientChart::require_admissible(const Point3& p) const {
    if (!admissible(p))
        throw OutOfDomain("point outside the chart domain");
}

FrameVec AmbientChart::covariant_constant(const Point3& p, const FrameVec& v, const FrameVec& w) const {
    FrameVec out{0.0, 0.0, 0.0};
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const double c = v[i - 1] * w[j - 1];
            if (c != 0.0)
                out += c * connection(p, i, j);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rotationally symmetric model
// ---------------------------------------------------------------------------

bool BcvChart::admissible(const Point3& p) const {
    return 1.0 + par_.m * (p.x * p.x + p.y * p.y) > 0.0;
}

std::array<CoordVec, 3> BcvChart::frame(const Point3& p) const {
    require_admissible(p);
    const double F = 1.0 + par_.m * (p.x * p.x + p.y * p.y);
    const double hl = 0.5 * par_.l;
    return {CoordVec{F, 0.0, -hl * p.y},
            CoordVec{0.0, F, hl * p.x},
            CoordVec{0.0, 0.0, 1.0}};
}

double BcvChart::metric(const Point3& p, const CoordVec& v, const CoordVec& w) const {
    require_admissible(p);
    const double F = 1.0 + par_.m * (p.x * p.x + p.y * p.y);
    const double hl = 0.5 * par_.l;
    const double tv = v.vz + hl * (p.y * v.vx - p.x * v.vy) / F;
    const double tw = w.vz + hl * (p.y * w.vx - p.x * w.vy) / F;
    return (v.vx * w.vx + v.vy * w.vy) / (F * F) + tv * tw;
}

FrameVec BcvChart::to_frame(const Point3& p, const CoordVec& v) const {
    require_admissible(p);
    const double F = 1.0 + par_.m * (p.x * p.x + p.y * p.y);
    const double hl = 0.5 * par_.l;
    return {v.vx / F, v.vy / F, v.vz + hl * (p.y * v.vx - p.x * v.vy) / F};
}

CoordVec BcvChart::to_coord(const Point3& p, const FrameVec& v) const {
    require_admissible(p);
    const double F = 1.0 + par_.m * (p.x * p.x + p.y * p.y);
    const double hl = 0.5 * par_.l;
    return {v.c1 * F, v.c2 * F, v.c3 - hl * (p.y * v.c1 - p.x * v.c2)};
}

FrameVec BcvChart::bracket(const Point3& p, int i, int j) const {
    check_index(i);
    check_index(j);
    require_admissible(p);
    if (i == j || i == 3 || j == 3)
        return {0.0, 0.0, 0.0};
    // [E1, E2] = 2m x E2 - 2m y E1 + l E3
    FrameVec b{-2.0 * par_.m * p.y, 2.0 * par_.m * p.x, par_.l};
    return (i == 1) ? b : -b;
}

FrameVec BcvChart::connection(const Point3& p, int i, int j) const {
    check_index(i);
    check_index(j);
    require_admissible(p);
    const double m = par_.m;
    const double hl = 0.5 * par_.l;
    const double x = p.x;
    const double y = p.y;
    if (i == 1 && j == 1) return {0.0, 2.0 * m * y, 0.0};
    if (i == 1 && j == 2) return {-2.0 * m * y, 0.0, hl};
    if (i == 1 && j == 3) return {0.0, -hl, 0.0};
    if (i == 2 && j == 1) return {0.0, -2.0 * m * x, -hl};
    if (i == 2 && j == 2) return {2.0 * m * x, 0.0, 0.0};
    if (i == 2 && j == 3) return {hl, 0.0, 0.0};
    if (i == 3 && j == 1) return {0.0, -hl, 0.0};
    if (i == 3 && j == 2) return {hl, 0.0, 0.0};
    return {0.0, 0.0, 0.0}; // nabla_{E3} E3
}

// ---------------------------------------------------------------------------
// Half-space model (m < 0)
// ---------------------------------------------------------------------------

HalfSpaceChart::HalfSpaceChart(BcvParams params) : AmbientChart(params) {
    if (!(params.m < 0.0))
        throw InvalidParams("half-space model requires m < 0");
}

bool HalfSpaceChart::admissible(const Point3& p) const {
    return p.y > 0.0;
}

std::array<CoordVec, 3> HalfSpaceChart::frame(const Point3& p) const {
    require_admissible(p);
    const double s = std::sqrt(-par_.m);
    return {CoordVec{2.0 * s * p.y, 0.0, 0.5 * par_.l / s},
            CoordVec{0.0, 2.0 * s * p.y, 0.0},
            CoordVec{0.0, 0.0, 1.0}};
}

double HalfSpaceChart::metric(const Point3& p, const CoordVec& v, const CoordVec& w) const {
    require_admissible(p);
    const double d = -4.0 * par_.m * p.y * p.y;
    const double tv = v.vz + par_.l / (4.0 * par_.m * p.y) * v.vx;
    const double tw = w.vz + par_.l / (4.0 * par_.m * p.y) * w.vx;
    return (v.vx * w.vx + v.vy * w.vy) / d + tv * tw;
}

FrameVec HalfSpaceChart::to_frame(const Point3& p, const CoordVec& v) const {
    require_admissible(p);
    const double d = 2.0 * std::sqrt(-par_.m) * p.y;
    return {v.vx / d, v.vy / d, v.vz + par_.l / (4.0 * par_.m * p.y) * v.vx};
}

CoordVec HalfSpaceChart::to_coord(const Point3& p, const FrameVec& v) const {
    require_admissible(p);
    const double d = 2.0 * std::sqrt(-par_.m) * p.y;
    return {v.c1 * d, v.c2 * d, v.c3 + v.c1 * 0.5 * par_.l / std::sqrt(-par_.m)};
}

FrameVec HalfSpaceChart::bracket(const Point3& p, int i, int j) const {
    check_index(i);
    check_index(j);
    require_admissible(p);
    if (i == j || i == 3 || j == 3)
        return {0.0, 0.0, 0.0};
    // [E1, E2] = -2 sqrt(-m) E1 + l E3
    FrameVec b{-2.0 * std::sqrt(-par_.m), 0.0, par_.l};
    return (i == 1) ? b : -b;
}

FrameVec HalfSpaceChart::connection(const Point3& p, int i, int j) const {
    require_admissible(p);
    return halfspace_connection(par_, i, j);
}

// ---------------------------------------------------------------------------
// Free functions
// ---------------------------------------------------------------------------

double conformal_factor(const BcvParams& params, double x, double y) {
    const double F = 1.0 + params.m * (x * x + y * y);
    if (F <= 0.0)
        throw OutOfDomain("conformal factor is nonpositive at this point");
    return F;
}

std::array<CoordVec, 3> frame_at(const BcvParams& params, const Point3& p) {
    return BcvChart(params).frame(p);
}

double metric_at(const BcvParams& params, const Point3& p, const CoordVec& v, const CoordVec& w) {
    return BcvChart(params).metric(p, v, w);
}

FrameVec lie_bracket_frame(const BcvParams& params, const Point3& p, int i, int j) {
    return BcvChart(params).bracket(p, i, j);
}

FrameVec connection_frame(const BcvParams& params, const Point3& p, int i, int j) {
    return BcvChart(params).connection(p, i, j);
}

FrameVec halfspace_connection(const BcvParams& params, int i, int j) {
    if (!(params.m < 0.0))
        throw InvalidParams("half-space model requires m < 0");
    if (i < 1 || i > 3 || j < 1 || j > 3)
        throw InvalidParams("frame index must be 1, 2 or 3");
    const double s = std::sqrt(-params.m);
    const double hl = 0.5 * params.l;
    if (i == 1 && j == 1) return {0.0, 2.0 * s, 0.0};
    if (i == 1 && j == 2) return {-2.0 * s, 0.0, hl};
    if (i == 1 && j == 3) return {0.0, -hl, 0.0};
    if (i == 2 && j == 1) return {0.0, 0.0, -hl};
    if (i == 2 && j == 2) return {0.0, 0.0, 0.0};
    if (i == 2 && j == 3) return {hl, 0.0, 0.0};
    if (i == 3 && j == 1) return {0.0, -hl, 0.0};
    if (i == 3 && j == 2) return {hl, 0.0, 0.0};
    return {0.0, 0.0, 0.0};
}

} // namespace bcv
