#pragma once

#include <cmath>

namespace bcv::fd {

inline constexpr double kDefaultStep = 1e-3;

// First derivative at 0 of f: central difference plus one Richardson level
// (kills the h^2 term).
template <typename F>
double d1(F&& f, double h = kDefaultStep) {
  const double coarse = (f(h) - f(-h)) / (2.0 * h);
  const double fine = (f(h / 2.0) - f(-h / 2.0)) / h;
  return (4.0 * fine - coarse) / 3.0;
}

// Second derivative at 0, central difference with one Richardson level.
template <typename F>
double d2(F&& f, double h = kDefaultStep) {
  const double f0 = f(0.0);
  const double coarse = (f(h) - 2.0 * f0 + f(-h)) / (h * h);
  const double fine = (f(h / 2.0) - 2.0 * f0 + f(-h / 2.0)) / (h * h / 4.0);
  return (4.0 * fine - coarse) / 3.0;
}

// |a-b| within tol, measured relative to scale max(1,|a|,|b|).
inline bool close(double a, double b, double tol) {
  double scale = 1.0;
  if (std::abs(a) > scale) scale = std::abs(a);
  if (std::abs(b) > scale) scale = std::abs(b);
  return std::abs(a - b) <= tol * scale;
}

inline double rel_err(double a, double b) {
  double scale = 1.0;
  if (std::abs(a) > scale) scale = std::abs(a);
  if (std::abs(b) > scale) scale = std::abs(b);
  return std::abs(a - b) / scale;
}

}  // namespace bcv::fd
