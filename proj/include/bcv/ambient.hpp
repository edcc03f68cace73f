#pragma once

#include <array>
#include <memory>

#include "bcv/types.hpp"

namespace bcv {

// A coordinate chart of a homogeneous 3-space together with its canonical
// orthonormal frame {E1, E2, E3}. Frame indices are 1-based throughout.
class AmbientChart {
public:
    explicit AmbientChart(BcvParams params) : par_(params) {}
    virtual ~AmbientChart() = default;

    const BcvParams& params() const { return par_; }

    virtual bool admissible(const Point3& p) const = 0;

    // Coordinate components of E1, E2, E3 at p.
    virtual std::array<CoordVec, 3> frame(const Point3& p) const = 0;

    // g_p(v, w) for coordinate vectors v, w.
    virtual double metric(const Point3& p, const CoordVec& v, const CoordVec& w) const = 0;

    virtual FrameVec to_frame(const Point3& p, const CoordVec& v) const = 0;
    virtual CoordVec to_coord(const Point3& p, const FrameVec& v) const = 0;

    // [E_i, E_j] at p, expressed in the frame.
    virtual FrameVec bracket(const Point3& p, int i, int j) const = 0;

    // Levi-Civita connection: frame components of nabla_{E_i} E_j at p.
    virtual FrameVec connection(const Point3& p, int i, int j) const = 0;

    // Throws OutOfDomain unless p is admissible.
    void require_admissible(const Point3& p) const;

    // nabla_v w for a vector w with *constant* frame components, i.e.
    // sum_{i,j} v_i w_j nabla_{E_i} E_j. Linear in both arguments.
    FrameVec covariant_constant(const Point3& p, const FrameVec& v, const FrameVec& w) const;

protected:
    static void check_index(int i);

    BcvParams par_;
};

// The rotationally symmetric model: two-parameter family of metrics on
// {(x,y,z) : 1 + m(x^2+y^2) > 0} interpolating between product spaces,
// Berger spheres, Heisenberg space and SL(2,R) geometries.
class BcvChart final : public AmbientChart {
public:
    explicit BcvChart(BcvParams params) : AmbientChart(params) {}

    bool admissible(const Point3& p) const override;
    std::array<CoordVec, 3> frame(const Point3& p) const override;
    double metric(const Point3& p, const CoordVec& v, const CoordVec& w) const override;
    FrameVec to_frame(const Point3& p, const CoordVec& v) const override;
    CoordVec to_coord(const Point3& p, const FrameVec& v) const override;
    FrameVec bracket(const Point3& p, int i, int j) const override;
    FrameVec connection(const Point3& p, int i, int j) const override;
};

// Half-space model for m < 0 (upper half-space y > 0). The frame here is
// the tilde-frame adapted to this chart; it is not the image of the
// rotationally symmetric frame under the isometry between the models.
class HalfSpaceChart final : public AmbientChart {
public:
    explicit HalfSpaceChart(BcvParams params);

    bool admissible(const Point3& p) const override;
    std::array<CoordVec, 3> frame(const Point3& p) const override;
    double metric(const Point3& p, const CoordVec& v, const CoordVec& w) const override;
    FrameVec to_frame(const Point3& p, const CoordVec& v) const override;
    CoordVec to_coord(const Point3& p, const FrameVec& v) const override;
    FrameVec bracket(const Point3& p, int i, int j) const override;
    FrameVec connection(const Point3& p, int i, int j) const override;
};

// Conformal factor F(x,y) = 1 + m(x^2 + y^2) of the rotationally symmetric
// model. Throws OutOfDomain when F <= 0.
double conformal_factor(const BcvParams& params, double x, double y);

// Convenience wrappers around BcvChart for one-off evaluations.
std::array<CoordVec, 3> frame_at(const BcvParams& params, const Point3& p);
double metric_at(const BcvParams& params, const Point3& p, const CoordVec& v, const CoordVec& w);
FrameVec lie_bracket_frame(const BcvParams& params, const Point3& p, int i, int j);
FrameVec connection_frame(const BcvParams& params, const Point3& p, int i, int j);

// Connection table of the half-space model (position independent).
FrameVec halfspace_connection(const BcvParams& params, int i, int j);

} // namespace bcv
