#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cmath>

namespace invlab {

// Desk-scale limits: spatial dimension n <= 5 for quadrature engines,
// target space X realized as R^d with d <= 8.  Fixed max sizes keep the
// vector values on the stack through the integration hot paths.
inline constexpr int kMaxDim = 5;
inline constexpr int kMaxCodim = 8;

using Complex = std::complex<double>;
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxCodim, 1>;
using CVec = Eigen::Matrix<Complex, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxCodim, 1>;
using Point = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

inline double zero_like(double) { return 0.0; }
inline Complex zero_like(const Complex&) { return Complex(0.0, 0.0); }
inline Vec zero_like(const Vec& v) { return Vec::Zero(v.size()); }
inline CVec zero_like(const CVec& v) { return CVec::Zero(v.size()); }

inline double norm_of(double v) { return std::abs(v); }
inline double norm_of(const Complex& v) { return std::abs(v); }
inline double norm_of(const Vec& v) { return v.norm(); }
inline double norm_of(const CVec& v) { return v.norm(); }

inline Point point1(double t) {
  Point p(1);
  p[0] = t;
  return p;
}

inline Vec vec1(double v) {
  Vec x(1);
  x[0] = v;
  return x;
}

inline CVec cvec1(Complex v) {
  CVec x(1);
  x[0] = v;
  return x;
}

struct Interval {
  double a = 0.0;
  double b = 0.0;
  double length() const { return b - a; }
};

// Axis-aligned compact box in R^n.
struct Box {
  Point lo, hi;
  int dim() const { return static_cast<int>(lo.size()); }
};

inline Box box1(double a, double b) {
  Box k;
  k.lo = point1(a);
  k.hi = point1(b);
  return k;
}

}  // namespace invlab
