#ifndef WBMPC_MATH_ROTATIONS_HPP
#define WBMPC_MATH_ROTATIONS_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cmath>

#include "wbmpc/math/dual.hpp"

namespace wbmpc {

template <typename Scalar>
using Vec3T = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat3T = Eigen::Matrix<Scalar, 3, 3>;

template <typename Scalar>
Mat3T<Scalar> skew(const Vec3T<Scalar>& a) {
  Mat3T<Scalar> s;
  s << Scalar(0.0), -a.z(), a.y(),
       a.z(), Scalar(0.0), -a.x(),
       -a.y(), a.x(), Scalar(0.0);
  return s;
}

template <typename Scalar>
Mat3T<Scalar> rot_x(const Scalar& a) {
  using std::sin; using std::cos;
  const Scalar c = cos(a), s = sin(a);
  Mat3T<Scalar> r;
  r << Scalar(1.0), Scalar(0.0), Scalar(0.0),
       Scalar(0.0), c, -s,
       Scalar(0.0), s, c;
  return r;
}

template <typename Scalar>
Mat3T<Scalar> rot_y(const Scalar& a) {
  using std::sin; using std::cos;
  const Scalar c = cos(a), s = sin(a);
  Mat3T<Scalar> r;
  r << c, Scalar(0.0), s,
       Scalar(0.0), Scalar(1.0), Scalar(0.0),
       -s, Scalar(0.0), c;
  return r;
}

template <typename Scalar>
Mat3T<Scalar> rot_z(const Scalar& a) {
  using std::sin; using std::cos;
  const Scalar c = cos(a), s = sin(a);
  Mat3T<Scalar> r;
  r << c, -s, Scalar(0.0),
       s, c, Scalar(0.0),
       Scalar(0.0), Scalar(0.0), Scalar(1.0);
  return r;
}

// ZYX Euler angles stored as (roll about x, pitch about y, yaw about z):
// R = Rz(yaw) * Ry(pitch) * Rx(roll).
template <typename Scalar>
Mat3T<Scalar> rotation_zyx(const Vec3T<Scalar>& euler) {
  return rot_z(euler.z()) * rot_y(euler.y()) * rot_x(euler.x());
}

// Maps body-frame angular velocity to ZYX Euler-angle rates. Identity at
// zero attitude; singular at pitch = +-pi/2.
template <typename Scalar>
Mat3T<Scalar> euler_rate_map(const Vec3T<Scalar>& euler) {
  using std::sin; using std::cos; using std::tan;
  const Scalar sr = sin(euler.x()), cr = cos(euler.x());
  const Scalar cp = cos(euler.y()), tp = tan(euler.y());
  Mat3T<Scalar> e;
  e << Scalar(1.0), sr * tp, cr * tp,
       Scalar(0.0), cr, -sr,
       Scalar(0.0), sr / cp, cr / cp;
  return e;
}

// Unit quaternion (w, x, y, z) from a rotation matrix, Shepperd's method.
// Branch selection uses scalar values so the conversion stays smooth for
// dual scalars within a branch.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 1> quaternion_from_rotation(const Mat3T<Scalar>& r) {
  using std::sqrt;
  Eigen::Matrix<Scalar, 4, 1> q;
  const double t00 = value(r(0, 0)), t11 = value(r(1, 1)), t22 = value(r(2, 2));
  const double tr = t00 + t11 + t22;
  if (tr > 0.0) {
    Scalar s = sqrt(r(0, 0) + r(1, 1) + r(2, 2) + 1.0) * 2.0;
    q[0] = Scalar(0.25) * s;
    q[1] = (r(2, 1) - r(1, 2)) / s;
    q[2] = (r(0, 2) - r(2, 0)) / s;
    q[3] = (r(1, 0) - r(0, 1)) / s;
  } else if (t00 > t11 && t00 > t22) {
    Scalar s = sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
    q[0] = (r(2, 1) - r(1, 2)) / s;
    q[1] = Scalar(0.25) * s;
    q[2] = (r(0, 1) + r(1, 0)) / s;
    q[3] = (r(0, 2) + r(2, 0)) / s;
  } else if (t11 > t22) {
    Scalar s = sqrt(1.0 - r(0, 0) + r(1, 1) - r(2, 2)) * 2.0;
    q[0] = (r(0, 2) - r(2, 0)) / s;
    q[1] = (r(0, 1) + r(1, 0)) / s;
    q[2] = Scalar(0.25) * s;
    q[3] = (r(1, 2) + r(2, 1)) / s;
  } else {
    Scalar s = sqrt(1.0 - r(0, 0) - r(1, 1) + r(2, 2)) * 2.0;
    q[0] = (r(1, 0) - r(0, 1)) / s;
    q[1] = (r(0, 2) + r(2, 0)) / s;
    q[2] = (r(1, 2) + r(2, 1)) / s;
    q[3] = Scalar(0.25) * s;
  }
  return q;
}

}  // namespace wbmpc

#endif  // WBMPC_MATH_ROTATIONS_HPP
