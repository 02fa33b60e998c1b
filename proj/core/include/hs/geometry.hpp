#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace hs {

using Point = std::vector<double>;

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> a) { return dot(a, a); }

inline double norm(std::span<const double> a) { return std::sqrt(norm2(a)); }

inline double dist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// |y| part of x = (y, t): norm of all but the last coordinate.
inline double ynorm(std::span<const double> x) {
  double s = 0.0;
  for (size_t i = 0; i + 1 < x.size(); ++i) s += x[i] * x[i];
  return std::sqrt(s);
}

inline Point zeros(int dim) { return Point(static_cast<size_t>(dim), 0.0); }

// last unit vector e_{n+1}
inline Point e_last(int dim) {
  Point e = zeros(dim);
  e.back() = 1.0;
  return e;
}

}  // namespace hs
