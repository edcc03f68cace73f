#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace bcv {

// Parameters of the two-parameter family M^3_{m,l}: base curvature 4m,
// bundle curvature l.
struct BcvParams {
  double m = 0.0;
  double l = 0.0;
};

struct Point3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

// Components with respect to an orthonormal frame {E1,E2,E3}.
struct FrameVec {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;

  FrameVec operator+(const FrameVec& o) const { return {c1 + o.c1, c2 + o.c2, c3 + o.c3}; }
  FrameVec operator-(const FrameVec& o) const { return {c1 - o.c1, c2 - o.c2, c3 - o.c3}; }
  FrameVec operator-() const { return {-c1, -c2, -c3}; }
  FrameVec operator*(double s) const { return {c1 * s, c2 * s, c3 * s}; }
  FrameVec& operator+=(const FrameVec& o) {
    c1 += o.c1; c2 += o.c2; c3 += o.c3;
    return *this;
  }
  double operator[](int i) const { return i == 0 ? c1 : (i == 1 ? c2 : c3); }
  double& operator[](int i) { return i == 0 ? c1 : (i == 1 ? c2 : c3); }

  // i is 1-based, matching the frame labels E1, E2, E3.
  static FrameVec basis(int i) {
    FrameVec v;
    v[i - 1] = 1.0;
    return v;
  }
};

inline FrameVec operator*(double s, const FrameVec& v) { return v * s; }

inline double dot(const FrameVec& a, const FrameVec& b) {
  return a.c1 * b.c1 + a.c2 * b.c2 + a.c3 * b.c3;
}

inline double norm(const FrameVec& a) { return std::sqrt(dot(a, a)); }

// Cross product of frame components; <X x Y, Z> = det(X,Y,Z) in the
// positively oriented orthonormal frame.
inline FrameVec cross(const FrameVec& a, const FrameVec& b) {
  return {a.c2 * b.c3 - a.c3 * b.c2,
          a.c3 * b.c1 - a.c1 * b.c3,
          a.c1 * b.c2 - a.c2 * b.c1};
}

// Components with respect to coordinate vector fields.
struct CoordVec {
  double vx = 0.0, vy = 0.0, vz = 0.0;

  CoordVec operator+(const CoordVec& o) const { return {vx + o.vx, vy + o.vy, vz + o.vz}; }
  CoordVec operator-(const CoordVec& o) const { return {vx - o.vx, vy - o.vy, vz - o.vz}; }
  CoordVec operator*(double s) const { return {vx * s, vy * s, vz * s}; }
};

inline CoordVec operator*(double s, const CoordVec& v) { return v * s; }

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParams : Error {
  explicit InvalidParams(const std::string& what) : Error(what) {}
};

// Evaluation outside the chart (conformal factor F <= 0, or y~ <= 0 in the
// half-space model).
struct OutOfDomain : Error {
  explicit OutOfDomain(const std::string& what) : Error(what) {}
};

struct DegenerateImmersion : Error {
  explicit DegenerateImmersion(const std::string& what) : Error(what) {}
};

struct NotArcLength : Error {
  explicit NotArcLength(const std::string& what) : Error(what) {}
};

// Helicoid admissibility (needs m < 0 and alpha^2 + m < 0).
struct Inadmissible : Error {
  explicit Inadmissible(const std::string& what) : Error(what) {}
};

// Base-sphere radius relations need m > 0.
struct InvalidBase : Error {
  explicit InvalidBase(const std::string& what) : Error(what) {}
};

// Parameter pair outside the validity strip of a bound (r_bound, r_a).
struct OutOfRegion : Error {
  explicit OutOfRegion(const std::string& what) : Error(what) {}
};

}  // namespace bcv
