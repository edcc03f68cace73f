#include "bcv/oracles.hpp"

namespace bcv {

namespace {

Point3 shifted(const Point3& p, const CoordVec& dir, double t) {
    return {p.x + t * dir.vx, p.y + t * dir.vy, p.z + t * dir.vz};
}

// Derivative at p of a scalar function of position along the frame direction
// E_i, i.e. along the straight coordinate line through p with velocity
// E_i(p). Only the value and first derivative at t = 0 matter, and the
// coordinate line is an admissible curve with tangent E_i(p) there.
double frame_derivative(const AmbientChart& chart, const Point3& p, int i,
                        const std::function<double(const Point3&)>& fn, double h) {
    const CoordVec dir = chart.frame(p)[i - 1];
    return fd::d1([&](double t) { return fn(shifted(p, dir, t)); }, h);
}

double pairing(const AmbientChart& chart, const Point3& q, int a, int b) {
    const auto fr = chart.frame(q);
    return chart.metric(q, fr[a - 1], fr[b - 1]);
}

} // namespace

FrameVec connection_fd_oracle(const AmbientChart& chart, const Point3& p, int i, int j, double h) {
    chart.require_admissible(p);
    FrameVec out{0.0, 0.0, 0.0};
    for (int k = 1; k <= 3; ++k) {
        const double dj = frame_derivative(
            chart, p, j, [&](const Point3& q) { return pairing(chart, q, i, k); }, h);
        const double di = frame_derivative(
            chart, p, i, [&](const Point3& q) { return pairing(chart, q, k, j); }, h);
        const double dk = frame_derivative(
            chart, p, k, [&](const Point3& q) { return pairing(chart, q, j, i); }, h);
        const double b1 = chart.bracket(p, j, k)[i - 1];
        const double b2 = chart.bracket(p, i, k)[j - 1];
        const double b3 = chart.bracket(p, j, i)[k - 1];
        out[k - 1] = 0.5 * (dj + di - dk - b1 - b2 - b3);
    }
    return out;
}

FrameVec covariant_of_field(const AmbientChart& chart, const Point3& p, int i,
                            const std::function<FrameVec(const Point3&)>& field, double h) {
    chart.require_admissible(p);
    const CoordVec dir = chart.frame(p)[i - 1];
    FrameVec deriv{0.0, 0.0, 0.0};
    for (int c = 0; c < 3; ++c)
        deriv[c] = fd::d1([&](double t) { return field(shifted(p, dir, t))[c]; }, h);
    return deriv + chart.covariant_constant(p, FrameVec::basis(i), field(p));
}

FrameVec curvature_fd_oracle(const AmbientChart& chart, const Point3& p, int i, int j, int k,
                             double h) {
    chart.require_admissible(p);
    const auto conn_field = [&](int a) {
        return std::function<FrameVec(const Point3&)>(
            [&chart, a, k](const Point3& q) { return chart.connection(q, a, k); });
    };
    const FrameVec t1 = covariant_of_field(chart, p, i, conn_field(j), h);
    const FrameVec t2 = covariant_of_field(chart, p, j, conn_field(i), h);
    const FrameVec br = chart.bracket(p, i, j);
    const FrameVec t3 = chart.covariant_constant(p, br, FrameVec::basis(k));
    return t1 - t2 - t3;
}

} // namespace bcv
