#ifndef WBMPC_MODEL_KINEMATICS_HPP
#define WBMPC_MODEL_KINEMATICS_HPP

#include <Eigen/Core>
#include <cmath>

#include "wbmpc/errors.hpp"
#include "wbmpc/math/dual.hpp"
#include "wbmpc/math/rotations.hpp"
#include "wbmpc/model/parameters.hpp"
#include "wbmpc/model/state.hpp"

namespace wbmpc {

template <typename Scalar>
using Vec8T = Eigen::Matrix<Scalar, 8, 1>;
template <typename Scalar>
using Mat8T = Eigen::Matrix<Scalar, 8, 8>;
template <typename Scalar>
using Mat38T = Eigen::Matrix<Scalar, 3, 8>;
template <typename Scalar>
using Mat68T = Eigen::Matrix<Scalar, 6, 8>;

template <typename Scalar>
void check_orientation(const Vec8T<Scalar>& q) {
  const double pitch = value(q[3]);
  if (std::abs(std::cos(pitch)) < std::cos(M_PI / 2.0 - kSingularityGuard)) {
    throw SingularOrientation("base pitch within singularity guard of +-pi/2");
  }
}

// q_dot = T(q) nu: positions integrate ball velocity directly, Euler angles
// integrate body rates through the ZYX rate map, arm joints are direct.
template <typename Scalar>
Mat8T<Scalar> velocity_map(const Vec8T<Scalar>& q) {
  check_orientation(q);
  Mat8T<Scalar> t = Mat8T<Scalar>::Zero();
  t(0, 0) = Scalar(1.0);
  t(1, 1) = Scalar(1.0);
  t.template block<3, 3>(2, 2) = euler_rate_map(Vec3T<Scalar>(q.template segment<3>(2)));
  t(5, 5) = Scalar(1.0);
  t(6, 6) = Scalar(1.0);
  t(7, 7) = Scalar(1.0);
  return t;
}

// Rotation by angle about a fixed (parameter) axis, Rodrigues form.
template <typename Scalar>
Mat3T<Scalar> rot_axis(const Vec3& axis, const Scalar& angle) {
  using std::sin; using std::cos;
  const Scalar c = cos(angle), s = sin(angle);
  const Mat3 k = skew<double>(axis);
  const Mat3 aat = axis * axis.transpose();
  return Mat3T<Scalar>::Identity() * c + k.cast<Scalar>() * s + aat.cast<Scalar>() * (1.0 - c);
}

// Pose and velocity of every frame needed by the task-space costs.
template <typename Scalar>
struct FrameKinematics {
  Vec3T<Scalar> ball_center;
  Vec3T<Scalar> ball_velocity;   // center velocity (z component zero)
  Mat3T<Scalar> base_rotation;
  Vec3T<Scalar> base_omega;      // world frame
  Vec3T<Scalar> ee_position;
  Mat3T<Scalar> ee_rotation;
  Vec3T<Scalar> ee_velocity;     // world frame
  Vec3T<Scalar> ee_omega;        // world frame
};

template <typename Scalar>
FrameKinematics<Scalar> compute_frames(const ModelParameters& p, const Vec8T<Scalar>& q,
                                       const Vec8T<Scalar>& nu) {
  FrameKinematics<Scalar> f;
  f.ball_center = Vec3T<Scalar>(q[0], q[1], Scalar(p.ball_radius));
  f.ball_velocity = Vec3T<Scalar>(nu[0], nu[1], Scalar(0.0));
  f.base_rotation = rotation_zyx(Vec3T<Scalar>(q.template segment<3>(2)));
  f.base_omega = f.base_rotation * Vec3T<Scalar>(nu.template segment<3>(2));

  Mat3T<Scalar> rot = f.base_rotation;
  Vec3T<Scalar> origin = f.ball_center;
  Vec3T<Scalar> v_origin = f.ball_velocity;
  Vec3T<Scalar> omega = f.base_omega;
  for (int i = 0; i < 3; ++i) {
    const Vec3T<Scalar> arm_offset = rot * p.arm[i].offset.cast<Scalar>();
    origin += arm_offset;
    v_origin += omega.cross(arm_offset);
    const Vec3T<Scalar> axis_world = rot * p.arm[i].axis.cast<Scalar>();
    rot = rot * rot_axis(p.arm[i].axis, q[5 + i]);
    omega += axis_world * nu[5 + i];
  }
  const Vec3T<Scalar> ee_offset = rot * p.ee_offset.cast<Scalar>();
  f.ee_position = origin + ee_offset;
  f.ee_rotation = rot;
  f.ee_velocity = v_origin + omega.cross(ee_offset);
  f.ee_omega = omega;
  return f;
}

// All terms of the minimal-coordinate equations of motion,
//   M(q) nu_dot + h(q, nu) = S(q)^T tau + J_ee(q)^T lambda_world,
// assembled by projecting Newton-Euler over the five bodies (ball, base,
// three arm links). The ball rolls without slipping, so its rotation about
// horizontal axes is tied to the center velocity and the vertical spin is
// not a coordinate. S maps generalized velocities to actuator speeds; its
// wheel rows follow from the omniwheel contact kinematics.
template <typename Scalar>
struct DynamicsTerms {
  Mat8T<Scalar> T;
  Mat8T<Scalar> M;
  Vec8T<Scalar> h;
  Mat68T<Scalar> S;
  Mat68T<Scalar> J_ee;
  Vec3T<Scalar> ee_position;
  Mat3T<Scalar> ee_rotation;
};

template <typename Scalar>
DynamicsTerms<Scalar> compute_dynamics_terms(const ModelParameters& p, const Vec8T<Scalar>& q,
                                             const Vec8T<Scalar>& nu) {
  using Vec3S = Vec3T<Scalar>;
  using Mat3S = Mat3T<Scalar>;
  using Mat38S = Mat38T<Scalar>;

  check_orientation(q);

  DynamicsTerms<Scalar> out;
  out.T = velocity_map(q);
  out.M = Mat8T<Scalar>::Zero();
  out.h = Vec8T<Scalar>::Zero();
  out.S = Mat68T<Scalar>::Zero();

  const Vec3 g_vec(0.0, 0.0, -p.gravity);

  auto add_body = [&](double mass, const Mat3S& inertia_world, const Mat38S& lin_jac,
                      const Mat38S& ang_jac, const Vec3S& omega, const Vec3S& a_bias,
                      const Vec3S& alpha_bias) {
    out.M += mass * lin_jac.transpose() * lin_jac + ang_jac.transpose() * inertia_world * ang_jac;
    out.h += lin_jac.transpose() * (mass * (a_bias - g_vec.cast<Scalar>())) +
             ang_jac.transpose() * (inertia_world * alpha_bias + omega.cross(inertia_world * omega));
  };

  // Ball: center follows p_IS at fixed height; rolling ties rotation to
  // translation, omega_ball = (z_hat x v) / r_b.
  Mat38S ball_lin = Mat38S::Zero();
  ball_lin(0, 0) = Scalar(1.0);
  ball_lin(1, 1) = Scalar(1.0);
  Mat38S ball_ang = Mat38S::Zero();
  ball_ang(0, 1) = Scalar(-1.0 / p.ball_radius);
  ball_ang(1, 0) = Scalar(1.0 / p.ball_radius);
  const Vec3S ball_omega = ball_ang * nu;
  add_body(p.ball_mass, Mat3S::Identity() * p.ball_inertia, ball_lin, ball_ang, ball_omega,
           Vec3S::Zero(), Vec3S::Zero());

  // Base: pivots about the ball center; omega = R * body rates, whose time
  // derivative at frozen nu is zero.
  const Mat3S base_rot = rotation_zyx(Vec3T<Scalar>(q.template segment<3>(2)));
  Mat38S base_ang = Mat38S::Zero();
  base_ang.template block<3, 3>(0, 2) = base_rot;
  const Vec3S base_omega = base_ang * nu;
  const Vec3S base_arm = base_rot * p.base_com.cast<Scalar>();
  const Mat38S base_lin = ball_lin - skew(base_arm) * base_ang;
  const Vec3S base_a_bias = base_omega.cross(base_omega.cross(base_arm));
  add_body(p.base_mass, base_rot * p.base_inertia.cast<Scalar>() * base_rot.transpose(), base_lin,
           base_ang, base_omega, base_a_bias, Vec3S::Zero());

  // Arm links: standard forward propagation of frame origin and angular
  // velocity Jacobians plus bias accelerations (generalized accel frozen).
  Mat3S rot = base_rot;
  Mat38S ang_jac = base_ang;
  Vec3S omega = base_omega;
  Vec3S alpha_bias = Vec3S::Zero();
  Vec3S origin = Vec3S(q[0], q[1], Scalar(p.ball_radius));  // chain root = ball center
  Mat38S origin_lin = ball_lin;
  Vec3S a_bias_origin = Vec3S::Zero();
  for (int i = 0; i < 3; ++i) {
    const Vec3S joint_arm = rot * p.arm[i].offset.cast<Scalar>();
    origin += joint_arm;
    origin_lin -= skew(joint_arm) * ang_jac;
    a_bias_origin += alpha_bias.cross(joint_arm) + omega.cross(omega.cross(joint_arm));

    const Vec3S axis_world = rot * p.arm[i].axis.cast<Scalar>();
    rot = rot * rot_axis(p.arm[i].axis, q[5 + i]);
    alpha_bias += omega.cross(axis_world) * nu[5 + i];
    omega += axis_world * nu[5 + i];
    ang_jac.col(5 + i) += axis_world;

    const Vec3S com_arm = rot * p.arm[i].com.cast<Scalar>();
    const Mat38S com_lin = origin_lin - skew(com_arm) * ang_jac;
    const Vec3S com_a_bias =
        a_bias_origin + alpha_bias.cross(com_arm) + omega.cross(omega.cross(com_arm));
    add_body(p.arm[i].mass, rot * p.arm[i].inertia.cast<Scalar>() * rot.transpose(), com_lin,
             ang_jac, omega, com_a_bias, alpha_bias);
  }
  const Vec3S ee_arm = rot * p.ee_offset.cast<Scalar>();
  out.ee_position = origin + ee_arm;
  out.ee_rotation = rot;
  out.J_ee.template topRows<3>() = origin_lin - skew(ee_arm) * ang_jac;
  out.J_ee.template bottomRows<3>() = ang_jac;

  // Actuator velocity map. Arm joints are directly driven; each omniwheel
  // speed is the relative ball/base surface velocity at its contact point
  // projected on the wheel's driven direction, divided by the wheel radius.
  for (int i = 0; i < 3; ++i) out.S(3 + i, 5 + i) = Scalar(1.0);
  const double sa = std::sin(p.wheel_zenith), ca = std::cos(p.wheel_zenith);
  const double cg = std::cos(p.wheel_twist), sg = std::sin(p.wheel_twist);
  const double ratio = p.ball_radius / p.wheel_radius;
  for (int i = 0; i < 3; ++i) {
    const double beta = 2.0 * M_PI * i / 3.0;
    const double cb = std::cos(beta), sb = std::sin(beta);
    const Vec3 azimuthal(-sb, cb, 0.0);
    const Vec3 meridional(ca * cb, ca * sb, -sa);
    // n x t for the twisted driven direction t = cg*meridional + sg*azimuthal
    const Vec3 lever = cg * azimuthal - sg * meridional;
    const Vec3S lever_world = base_rot * lever.cast<Scalar>();
    out.S.row(i) = ratio * lever_world.transpose() * (ball_ang - base_ang);
  }

  return out;
}

}  // namespace wbmpc

#endif  // WBMPC_MODEL_KINEMATICS_HPP
