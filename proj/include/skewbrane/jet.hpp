#pragma once

// Second-order forward-mode scalar. Carries value, gradient and Hessian with
// respect to a fixed number of seed variables so that the built-in surface
// formulas (written as templates over the scalar type) yield exact first and
// second derivatives.

#include <Eigen/Dense>

#include <cmath>

namespace skewbrane {

template <int N>
struct Jet2 {
  using Vec = Eigen::Matrix<double, N, 1>;
  using Mat = Eigen::Matrix<double, N, N>;

  double v = 0.0;
  Vec g = Vec::Zero();
  Mat H = Mat::Zero();

  Jet2() = default;
  Jet2(double value) : v(value) {}  // NOLINT: implicit constants are intended
  Jet2(double value, const Vec& grad, const Mat& hess) : v(value), g(grad), H(hess) {}

  static Jet2 variable(double value, int index) {
    Jet2 j(value);
    j.g(index) = 1.0;
    return j;
  }

  Jet2& operator+=(const Jet2& o) { v += o.v; g += o.g; H += o.H; return *this; }
  Jet2& operator-=(const Jet2& o) { v -= o.v; g -= o.g; H -= o.H; return *this; }
  Jet2& operator*=(const Jet2& o) { *this = *this * o; return *this; }
  Jet2& operator/=(const Jet2& o) { *this = *this / o; return *this; }

  friend Jet2 operator-(const Jet2& a) { return {-a.v, -a.g, -a.H}; }
  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v, a.g * b.v + b.g * a.v,
            a.H * b.v + b.H * a.v + a.g * b.g.transpose() + b.g * a.g.transpose()};
  }
  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    const double r = 1.0 / b.v;
    return a * chain(b, r, -r * r, 2.0 * r * r * r);
  }
  friend Jet2 operator+(const Jet2& a, double b) { return {a.v + b, a.g, a.H}; }
  friend Jet2 operator+(double b, const Jet2& a) { return {a.v + b, a.g, a.H}; }
  friend Jet2 operator-(const Jet2& a, double b) { return {a.v - b, a.g, a.H}; }
  friend Jet2 operator-(double b, const Jet2& a) { return {b - a.v, -a.g, -a.H}; }
  friend Jet2 operator*(const Jet2& a, double b) { return {a.v * b, a.g * b, a.H * b}; }
  friend Jet2 operator*(double b, const Jet2& a) { return {a.v * b, a.g * b, a.H * b}; }
  friend Jet2 operator/(const Jet2& a, double b) { return {a.v / b, a.g / b, a.H / b}; }
  friend Jet2 operator/(double b, const Jet2& a) { return Jet2(b) / a; }

  // f(a) given f, f', f'' at a.v
  static Jet2 chain(const Jet2& a, double f0, double f1, double f2) {
    return {f0, f1 * a.g, f1 * a.H + f2 * a.g * a.g.transpose()};
  }

  friend Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return chain(a, s, c, -s);
  }
  friend Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return chain(a, c, -s, -c);
  }
  friend Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return chain(a, e, e, e);
  }
  friend Jet2 sqrt(const Jet2& a) {
    const double s = std::sqrt(a.v);
    return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
  }
};

// Scalar helpers usable on both double and Jet2.
inline double value_of(double x) { return x; }
template <int N>
double value_of(const Jet2<N>& x) { return x.v; }

}  // namespace skewbrane
