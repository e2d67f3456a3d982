#ifndef WBMPC_MODEL_DYNAMICS_HPP
#define WBMPC_MODEL_DYNAMICS_HPP

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <array>

#include "wbmpc/model/kinematics.hpp"

namespace wbmpc {

using Mat38 = Eigen::Matrix<double, 3, 8>;
using Mat68 = Eigen::Matrix<double, 6, 8>;

// World pose and velocity Jacobians of each body (ball, base, links 1-3).
struct BodyFrame {
  Mat3 rotation{Mat3::Identity()};
  Vec3 com{Vec3::Zero()};
  Mat38 lin_jac{Mat38::Zero()};
  Mat38 ang_jac{Mat38::Zero()};
};

inline std::array<BodyFrame, 5> compute_body_frames(const ModelParameters& p, const Vec8& q) {
  std::array<BodyFrame, 5> bodies;
  const Vec3 ball_center(q[0], q[1], p.ball_radius);
  bodies[0].com = ball_center;
  bodies[0].lin_jac(0, 0) = 1.0;
  bodies[0].lin_jac(1, 1) = 1.0;
  bodies[0].ang_jac(0, 1) = -1.0 / p.ball_radius;
  bodies[0].ang_jac(1, 0) = 1.0 / p.ball_radius;

  const Mat3 base_rot = rotation_zyx<double>(q.segment<3>(2));
  bodies[1].rotation = base_rot;
  bodies[1].ang_jac.block<3, 3>(0, 2) = base_rot;
  const Vec3 base_arm = base_rot * p.base_com;
  bodies[1].com = ball_center + base_arm;
  bodies[1].lin_jac = bodies[0].lin_jac - skew<double>(base_arm) * bodies[1].ang_jac;

  Mat3 rot = base_rot;
  Mat38 ang_jac = bodies[1].ang_jac;
  Vec3 origin = ball_center;
  Mat38 origin_lin = bodies[0].lin_jac;
  for (int i = 0; i < 3; ++i) {
    const Vec3 joint_arm = rot * p.arm[i].offset;
    origin += joint_arm;
    origin_lin -= skew<double>(joint_arm) * ang_jac;
    const Vec3 axis_world = rot * p.arm[i].axis;
    rot = rot * rot_axis(p.arm[i].axis, q[5 + i]);
    ang_jac.col(5 + i) += axis_world;
    const Vec3 com_arm = rot * p.arm[i].com;
    bodies[2 + i].rotation = rot;
    bodies[2 + i].com = origin + com_arm;
    bodies[2 + i].ang_jac = ang_jac;
    bodies[2 + i].lin_jac = origin_lin - skew<double>(com_arm) * ang_jac;
  }
  return bodies;
}

// Minimal-coordinate model of the ball-balancing manipulator. All methods
// are pure functions of their arguments; instances are safe to share
// across threads once constructed.
class BallbotModel {
 public:
  explicit BallbotModel(ModelParameters params = ModelParameters(),
                        const Mat3& contact_rotation = Mat3::Identity())
      : params_(std::move(params)), contact_rotation_(contact_rotation) {
    params_.validate();
    const auto bodies = compute_body_frames(params_, Vec8::Zero());
    for (int i = 0; i < 5; ++i) com_height_datum_[i] = bodies[i].com.z();
  }

  const ModelParameters& params() const { return params_; }
  const Mat3& contact_rotation() const { return contact_rotation_; }
  void set_contact_rotation(const Mat3& r) { contact_rotation_ = r; }

  Mat8 velocity_map(const Vec8& q) const { return wbmpc::velocity_map<double>(q); }

  Mat8 mass_matrix(const Vec8& q) const {
    return compute_dynamics_terms<double>(params_, q, Vec8::Zero()).M;
  }

  Vec8 nonlinear_effects(const Vec8& q, const Vec8& nu) const {
    return compute_dynamics_terms<double>(params_, q, nu).h;
  }

  Mat68 selection_matrix(const Vec8& q) const {
    return compute_dynamics_terms<double>(params_, q, Vec8::Zero()).S;
  }

  Pose ee_forward_kinematics(const Vec8& q) const {
    const auto f = compute_frames<double>(params_, q, Vec8::Zero());
    Pose pose;
    pose.position = f.ee_position;
    pose.orientation = Eigen::Quaterniond(f.ee_rotation);
    pose.orientation.normalize();
    return pose;
  }

  Mat68 ee_jacobian(const Vec8& q) const {
    return compute_dynamics_terms<double>(params_, q, Vec8::Zero()).J_ee;
  }

  // Eq. of motion: xdot = [T(q) nu; M^-1 (-h + S^T tau + J_ee^T R_c lambda)].
  VecState forward_dynamics(const GeneralizedState& x, const ControlInput& u) const {
    const auto terms = compute_dynamics_terms<double>(params_, x.q, x.nu);
    const Vec8 rhs = generalized_forces(terms, u);
    Eigen::LLT<Mat8> llt(terms.M);
    if (llt.info() != Eigen::Success) {
      throw SolveFailure("mass matrix factorization failed");
    }
    VecState xdot;
    xdot.head<8>() = terms.T * x.nu;
    xdot.tail<8>() = llt.solve(rhs);
    return xdot;
  }

  // Kinetic plus potential energy; potential datum is the upright
  // zero-configuration COM height of each body.
  double total_energy(const GeneralizedState& x) const {
    const auto terms = compute_dynamics_terms<double>(params_, x.q, x.nu);
    double energy = 0.5 * x.nu.dot(terms.M * x.nu);
    const auto bodies = compute_body_frames(params_, x.q);
    const double masses[5] = {params_.ball_mass, params_.base_mass, params_.arm[0].mass,
                              params_.arm[1].mass, params_.arm[2].mass};
    for (int i = 0; i < 5; ++i) {
      energy += masses[i] * params_.gravity * (bodies[i].com.z() - com_height_datum_[i]);
    }
    return energy;
  }

  // A = df/dx, B = df/du by forward-mode dual propagation through the
  // dynamics terms. The input enters affinely, so B follows from the value
  // factorization directly.
  LinearSystem linearize(const GeneralizedState& x, const ControlInput& u) const {
    using D = Dual<kStateDim>;
    Vec8T<D> qd, nud;
    for (int i = 0; i < 8; ++i) {
      qd[i] = D::seed(x.q[i], i);
      nud[i] = D::seed(x.nu[i], 8 + i);
    }
    const auto terms = compute_dynamics_terms<D>(params_, qd, nud);

    Mat8 m_val;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) m_val(r, c) = terms.M(r, c).v;
    Eigen::LLT<Mat8> llt(m_val);
    if (llt.info() != Eigen::Success) {
      throw SolveFailure("mass matrix factorization failed");
    }

    const Vec3 lambda_world = contact_rotation_ * u.lambda_ee;
    Vec8T<D> rhs = -terms.h;
    for (int r = 0; r < 8; ++r) {
      for (int k = 0; k < 6; ++k) rhs[r] += terms.S(k, r) * u.tau[k];
      for (int k = 0; k < 3; ++k) rhs[r] += terms.J_ee(k, r) * lambda_world[k];
    }

    Vec8 rhs_val;
    for (int r = 0; r < 8; ++r) rhs_val[r] = rhs[r].v;
    const Vec8 accel = llt.solve(rhs_val);

    const Vec8T<D> qdot = terms.T * nud;

    LinearSystem sys;
    sys.A.setZero(kStateDim, kStateDim);
    sys.B.setZero(kStateDim, kInputDim);
    for (int k = 0; k < kStateDim; ++k) {
      Vec8 w;
      for (int r = 0; r < 8; ++r) {
        double dm_a = 0.0;
        for (int c = 0; c < 8; ++c) dm_a += terms.M(r, c).g[k] * accel[c];
        w[r] = rhs[r].g[k] - dm_a;
      }
      sys.A.block<8, 1>(8, k) = llt.solve(w);
      for (int r = 0; r < 8; ++r) sys.A(r, k) = qdot[r].g[k];
    }

    Eigen::Matrix<double, 8, 6> s_val_t;
    Eigen::Matrix<double, 8, 3> j_lin_t;
    for (int r = 0; r < 8; ++r) {
      for (int k = 0; k < 6; ++k) s_val_t(r, k) = terms.S(k, r).v;
      for (int k = 0; k < 3; ++k) j_lin_t(r, k) = terms.J_ee(k, r).v;
    }
    sys.B.block<8, 6>(8, 0) = llt.solve(s_val_t);
    sys.B.block<8, 3>(8, 6) = llt.solve(j_lin_t * contact_rotation_);
    return sys;
  }

 private:
  Vec8 generalized_forces(const DynamicsTerms<double>& terms, const ControlInput& u) const {
    return -terms.h + terms.S.transpose() * u.tau +
           terms.J_ee.topRows<3>().transpose() * (contact_rotation_ * u.lambda_ee);
  }

  ModelParameters params_;
  Mat3 contact_rotation_;
  std::array<double, 5> com_height_datum_{};
};

}  // namespace wbmpc

#endif  // WBMPC_MODEL_DYNAMICS_HPP
