#ifndef WBMPC_MATH_DUAL_HPP
#define WBMPC_MATH_DUAL_HPP

#include <Eigen/Core>
#include <cmath>

namespace wbmpc {

// Forward-mode scalar carrying a value and N partial derivatives.
// Seed with seed() before evaluating a function; read derivatives from .g.
template <int N>
struct Dual {
  using Grad = Eigen::Matrix<double, N, 1>;

  double v{0.0};
  Grad g{Grad::Zero()};

  Dual() = default;
  Dual(double value) : v(value) {}  // constants carry zero derivative
  Dual(double value, const Grad& grad) : v(value), g(grad) {}

  static Dual seed(double value, int direction) {
    Dual d(value);
    d.g[direction] = 1.0;
    return d;
  }

  Dual& operator+=(const Dual& o) { v += o.v; g += o.g; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; g -= o.g; return *this; }
  Dual& operator*=(const Dual& o) { g = g * o.v + o.g * v; v *= o.v; return *this; }
  Dual& operator/=(const Dual& o) { g = (g - o.g * (v / o.v)) / o.v; v /= o.v; return *this; }
};

template <int N> inline Dual<N> operator+(Dual<N> a, const Dual<N>& b) { return a += b; }
template <int N> inline Dual<N> operator-(Dual<N> a, const Dual<N>& b) { return a -= b; }
template <int N> inline Dual<N> operator*(Dual<N> a, const Dual<N>& b) { return a *= b; }
template <int N> inline Dual<N> operator/(Dual<N> a, const Dual<N>& b) { return a /= b; }
template <int N> inline Dual<N> operator-(const Dual<N>& a) { return Dual<N>(-a.v, -a.g); }
template <int N> inline Dual<N> operator+(const Dual<N>& a) { return a; }

template <int N> inline Dual<N> operator+(double a, Dual<N> b) { b.v += a; return b; }
template <int N> inline Dual<N> operator+(Dual<N> a, double b) { a.v += b; return a; }
template <int N> inline Dual<N> operator-(double a, const Dual<N>& b) { return Dual<N>(a - b.v, -b.g); }
template <int N> inline Dual<N> operator-(Dual<N> a, double b) { a.v -= b; return a; }
template <int N> inline Dual<N> operator*(double a, const Dual<N>& b) { return Dual<N>(a * b.v, a * b.g); }
template <int N> inline Dual<N> operator*(const Dual<N>& a, double b) { return Dual<N>(a.v * b, a.g * b); }
template <int N> inline Dual<N> operator/(const Dual<N>& a, double b) { return Dual<N>(a.v / b, a.g / b); }
template <int N> inline Dual<N> operator/(double a, const Dual<N>& b) {
  const double inv = 1.0 / b.v;
  return Dual<N>(a * inv, (-a * inv * inv) * b.g);
}

template <int N> inline bool operator<(const Dual<N>& a, const Dual<N>& b) { return a.v < b.v; }
template <int N> inline bool operator>(const Dual<N>& a, const Dual<N>& b) { return a.v > b.v; }
template <int N> inline bool operator<=(const Dual<N>& a, const Dual<N>& b) { return a.v <= b.v; }
template <int N> inline bool operator>=(const Dual<N>& a, const Dual<N>& b) { return a.v >= b.v; }
template <int N> inline bool operator==(const Dual<N>& a, const Dual<N>& b) { return a.v == b.v; }
template <int N> inline bool operator!=(const Dual<N>& a, const Dual<N>& b) { return a.v != b.v; }
template <int N> inline bool operator<(const Dual<N>& a, double b) { return a.v < b; }
template <int N> inline bool operator>(const Dual<N>& a, double b) { return a.v > b; }
template <int N> inline bool operator<(double a, const Dual<N>& b) { return a < b.v; }
template <int N> inline bool operator>(double a, const Dual<N>& b) { return a > b.v; }

template <int N> inline Dual<N> sin(const Dual<N>& a) { return Dual<N>(std::sin(a.v), std::cos(a.v) * a.g); }
template <int N> inline Dual<N> cos(const Dual<N>& a) { return Dual<N>(std::cos(a.v), -std::sin(a.v) * a.g); }
template <int N> inline Dual<N> tan(const Dual<N>& a) {
  const double t = std::tan(a.v);
  return Dual<N>(t, (1.0 + t * t) * a.g);
}
template <int N> inline Dual<N> sqrt(const Dual<N>& a) {
  const double s = std::sqrt(a.v);
  return Dual<N>(s, (0.5 / s) * a.g);
}
template <int N> inline Dual<N> exp(const Dual<N>& a) {
  const double e = std::exp(a.v);
  return Dual<N>(e, e * a.g);
}
template <int N> inline Dual<N> log(const Dual<N>& a) { return Dual<N>(std::log(a.v), a.g / a.v); }
template <int N> inline Dual<N> abs(const Dual<N>& a) { return a.v >= 0.0 ? a : -a; }
template <int N> inline Dual<N> atan2(const Dual<N>& y, const Dual<N>& x) {
  const double d = x.v * x.v + y.v * y.v;
  return Dual<N>(std::atan2(y.v, x.v), (x.v * y.g - y.v * x.g) / d);
}

template <int N> inline double value(const Dual<N>& a) { return a.v; }
inline double value(double a) { return a; }

// Second-order forward-mode scalar: value, gradient and dense Hessian.
template <int N>
struct Dual2 {
  using Grad = Eigen::Matrix<double, N, 1>;
  using Hess = Eigen::Matrix<double, N, N>;

  double v{0.0};
  Grad g{Grad::Zero()};
  Hess h{Hess::Zero()};

  Dual2() = default;
  Dual2(double value) : v(value) {}
  Dual2(double value, const Grad& grad) : v(value), g(grad) {}
  Dual2(double value, const Grad& grad, const Hess& hess) : v(value), g(grad), h(hess) {}

  static Dual2 seed(double value, int direction) {
    Dual2 d(value);
    d.g[direction] = 1.0;
    return d;
  }

  Dual2& operator+=(const Dual2& o) { v += o.v; g += o.g; h += o.h; return *this; }
  Dual2& operator-=(const Dual2& o) { v -= o.v; g -= o.g; h -= o.h; return *this; }
};

template <int N> inline Dual2<N> operator+(Dual2<N> a, const Dual2<N>& b) { return a += b; }
template <int N> inline Dual2<N> operator-(Dual2<N> a, const Dual2<N>& b) { return a -= b; }
template <int N> inline Dual2<N> operator-(const Dual2<N>& a) { return Dual2<N>(-a.v, -a.g, -a.h); }
template <int N> inline Dual2<N> operator+(const Dual2<N>& a) { return a; }

template <int N>
inline Dual2<N> operator*(const Dual2<N>& a, const Dual2<N>& b) {
  Dual2<N> r(a.v * b.v, a.v * b.g + b.v * a.g);
  r.h = a.v * b.h + b.v * a.h + a.g * b.g.transpose() + b.g * a.g.transpose();
  return r;
}

// f(a) with scalar derivatives d1 = f'(a.v), d2 = f''(a.v)
template <int N>
inline Dual2<N> chain(const Dual2<N>& a, double f, double d1, double d2) {
  Dual2<N> r(f, d1 * a.g);
  r.h = d1 * a.h + d2 * (a.g * a.g.transpose());
  return r;
}

template <int N> inline Dual2<N> inv(const Dual2<N>& a) {
  const double i = 1.0 / a.v;
  return chain(a, i, -i * i, 2.0 * i * i * i);
}
template <int N> inline Dual2<N> operator/(const Dual2<N>& a, const Dual2<N>& b) { return a * inv(b); }

template <int N> inline Dual2<N> operator+(double a, Dual2<N> b) { b.v += a; return b; }
template <int N> inline Dual2<N> operator+(Dual2<N> a, double b) { a.v += b; return a; }
template <int N> inline Dual2<N> operator-(double a, const Dual2<N>& b) { return Dual2<N>(a - b.v, -b.g, -b.h); }
template <int N> inline Dual2<N> operator-(Dual2<N> a, double b) { a.v -= b; return a; }
template <int N> inline Dual2<N> operator*(double a, const Dual2<N>& b) { return Dual2<N>(a * b.v, a * b.g, a * b.h); }
template <int N> inline Dual2<N> operator*(const Dual2<N>& a, double b) { return b * a; }
template <int N> inline Dual2<N> operator/(const Dual2<N>& a, double b) { return (1.0 / b) * a; }
template <int N> inline Dual2<N> operator/(double a, const Dual2<N>& b) { return a * inv(b); }

template <int N> inline bool operator<(const Dual2<N>& a, const Dual2<N>& b) { return a.v < b.v; }
template <int N> inline bool operator>(const Dual2<N>& a, const Dual2<N>& b) { return a.v > b.v; }
template <int N> inline bool operator<(const Dual2<N>& a, double b) { return a.v < b; }
template <int N> inline bool operator>(const Dual2<N>& a, double b) { return a.v > b; }

template <int N> inline Dual2<N> sin(const Dual2<N>& a) {
  const double s = std::sin(a.v);
  return chain(a, s, std::cos(a.v), -s);
}
template <int N> inline Dual2<N> cos(const Dual2<N>& a) {
  const double c = std::cos(a.v);
  return chain(a, c, -std::sin(a.v), -c);
}
template <int N> inline Dual2<N> tan(const Dual2<N>& a) {
  const double t = std::tan(a.v);
  const double s2 = 1.0 + t * t;
  return chain(a, t, s2, 2.0 * t * s2);
}
template <int N> inline Dual2<N> sqrt(const Dual2<N>& a) {
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}
template <int N> inline Dual2<N> log(const Dual2<N>& a) {
  const double i = 1.0 / a.v;
  return chain(a, std::log(a.v), i, -i * i);
}
template <int N> inline double value(const Dual2<N>& a) { return a.v; }

}  // namespace wbmpc

namespace Eigen {

template <int N>
struct NumTraits<wbmpc::Dual<N>> : NumTraits<double> {
  using Real = wbmpc::Dual<N>;
  using NonInteger = wbmpc::Dual<N>;
  using Nested = wbmpc::Dual<N>;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = N,
    MulCost = 2 * N
  };
};

template <int N>
struct NumTraits<wbmpc::Dual2<N>> : NumTraits<double> {
  using Real = wbmpc::Dual2<N>;
  using NonInteger = wbmpc::Dual2<N>;
  using Nested = wbmpc::Dual2<N>;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = N * N,
    MulCost = 4 * N * N
  };
};

template <int N, typename BinOp>
struct ScalarBinaryOpTraits<wbmpc::Dual<N>, double, BinOp> { using ReturnType = wbmpc::Dual<N>; };
template <int N, typename BinOp>
struct ScalarBinaryOpTraits<double, wbmpc::Dual<N>, BinOp> { using ReturnType = wbmpc::Dual<N>; };
template <int N, typename BinOp>
struct ScalarBinaryOpTraits<wbmpc::Dual2<N>, double, BinOp> { using ReturnType = wbmpc::Dual2<N>; };
template <int N, typename BinOp>
struct ScalarBinaryOpTraits<double, wbmpc::Dual2<N>, BinOp> { using ReturnType = wbmpc::Dual2<N>; };

}  // namespace Eigen

#endif  // WBMPC_MATH_DUAL_HPP
