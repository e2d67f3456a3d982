#ifndef WBMPC_MODEL_STATE_HPP
#define WBMPC_MODEL_STATE_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "wbmpc/errors.hpp"

namespace wbmpc {

// Dimensions of the minimal-coordinate model: 2 ball position, 3 base
// Euler angles (ZYX, stored roll/pitch/yaw), 3 arm joints; velocities are
// (ball velocity, body-frame base angular velocity, joint rates).
inline constexpr int kNumCoords = 8;
inline constexpr int kNumVel = 8;
inline constexpr int kStateDim = 16;
inline constexpr int kNumTorques = 6;
inline constexpr int kNumContactForces = 3;
inline constexpr int kInputDim = kNumTorques + kNumContactForces;
inline constexpr int kNumFilterStates = 3;
inline constexpr int kAugStateDim = kStateDim + kNumFilterStates;

// Pitch values within eps_singularity of +-pi/2 are rejected.
inline constexpr double kSingularityGuard = 0.1;

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using VecState = Eigen::Matrix<double, kStateDim, 1>;
using VecInput = Eigen::Matrix<double, kInputDim, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat8 = Eigen::Matrix<double, 8, 8>;

struct GeneralizedState {
  Vec8 q{Vec8::Zero()};   // (p_IS, euler, q_arm)
  Vec8 nu{Vec8::Zero()};  // (dp_IS, omega_body, dq_arm)

  Vec2 ball_position() const { return q.head<2>(); }
  Vec3 euler() const { return q.segment<3>(2); }
  double roll() const { return q[2]; }
  double pitch() const { return q[3]; }
  double yaw() const { return q[4]; }
  Vec3 arm() const { return q.tail<3>(); }
  Vec2 ball_velocity() const { return nu.head<2>(); }
  Vec3 angular_velocity() const { return nu.segment<3>(2); }
  Vec3 arm_rates() const { return nu.tail<3>(); }

  VecState vector() const {
    VecState x;
    x << q, nu;
    return x;
  }

  static GeneralizedState from_vector(const VecState& x) {
    GeneralizedState s;
    s.q = x.head<kNumCoords>();
    s.nu = x.tail<kNumVel>();
    return s;
  }
};

struct ControlInput {
  Vec6 tau{Vec6::Zero()};        // 3 wheel + 3 arm torques [N m]
  Vec3 lambda_ee{Vec3::Zero()};  // planned contact force, contact-local frame [N]

  VecInput vector() const {
    VecInput u;
    u << tau, lambda_ee;
    return u;
  }

  static ControlInput from_vector(const VecInput& u) {
    ControlInput c;
    c.tau = u.head<kNumTorques>();
    c.lambda_ee = u.tail<kNumContactForces>();
    return c;
  }
};

struct Pose {
  Vec3 position{Vec3::Zero()};
  Eigen::Quaterniond orientation{Eigen::Quaterniond::Identity()};

  void check_unit(double tol = 1e-9) const {
    if (std::abs(orientation.norm() - 1.0) > tol) {
      throw NonUnitQuaternion("pose quaternion norm deviates from 1");
    }
  }
};

// First-order system approximation d(dx)/dt = A dx + B du at a sample point.
struct LinearSystem {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
};

}  // namespace wbmpc

#endif  // WBMPC_MODEL_STATE_HPP
