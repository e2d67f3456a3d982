#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "wbmpc/math/dual.hpp"
#include "wbmpc/math/rotations.hpp"

using wbmpc::Dual;
using wbmpc::Dual2;

namespace {

// Central-difference gradient of a scalar function of n variables.
template <typename F>
Eigen::VectorXd fd_gradient(const F& f, const Eigen::VectorXd& x, double step = 1e-6) {
  Eigen::VectorXd g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Eigen::VectorXd hi = x, lo = x;
    hi[i] += step;
    lo[i] -= step;
    g[i] = (f(hi) - f(lo)) / (2.0 * step);
  }
  return g;
}

double test_fun(const Eigen::VectorXd& x) {
  return std::sin(x[0]) * std::cos(x[1]) + x[2] * x[2] / (1.0 + x[0] * x[0]) +
         std::sqrt(2.0 + x[1]) * std::tan(0.3 * x[2]) + std::log(2.0 + x[2] * x[0]);
}

template <typename S>
S test_fun_t(const Eigen::Matrix<S, 3, 1>& x) {
  using std::sin; using std::cos; using std::sqrt; using std::tan; using std::log;
  return sin(x[0]) * cos(x[1]) + x[2] * x[2] / (1.0 + x[0] * x[0]) +
         sqrt(2.0 + x[1]) * tan(0.3 * x[2]) + log(2.0 + x[2] * x[0]);
}

}  // namespace

TEST(Dual, GradientMatchesFiniteDifferences) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd x(3);
    for (int i = 0; i < 3; ++i) x[i] = dist(rng);

    Eigen::Matrix<Dual<3>, 3, 1> xd;
    for (int i = 0; i < 3; ++i) xd[i] = Dual<3>::seed(x[i], i);
    const Dual<3> y = test_fun_t(xd);

    EXPECT_NEAR(y.v, test_fun(x), 1e-14);
    const Eigen::VectorXd g = fd_gradient(test_fun, x);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(y.g[i], g[i], 1e-8);
  }
}

TEST(Dual2, GradientAndHessianMatchFiniteDifferences) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd x(3);
    for (int i = 0; i < 3; ++i) x[i] = dist(rng);

    Eigen::Matrix<Dual2<3>, 3, 1> xd;
    for (int i = 0; i < 3; ++i) xd[i] = Dual2<3>::seed(x[i], i);
    const Dual2<3> y = test_fun_t(xd);

    EXPECT_NEAR(y.v, test_fun(x), 1e-14);
    const Eigen::VectorXd g = fd_gradient(test_fun, x);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(y.g[i], g[i], 1e-8);

    // Hessian via finite differences of the dual gradient
    const double step = 1e-5;
    for (int j = 0; j < 3; ++j) {
      Eigen::Matrix<Dual<3>, 3, 1> hi, lo;
      for (int i = 0; i < 3; ++i) {
        hi[i] = Dual<3>::seed(x[i] + (i == j ? step : 0.0), i);
        lo[i] = Dual<3>::seed(x[i] - (i == j ? step : 0.0), i);
      }
      const auto ghi = test_fun_t(hi).g;
      const auto glo = test_fun_t(lo).g;
      for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(y.h(i, j), (ghi[i] - glo[i]) / (2.0 * step), 1e-6);
      }
    }
    EXPECT_LT((y.h - y.h.transpose()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Dual, EigenMatrixOperations) {
  using D = Dual<2>;
  Eigen::Matrix<D, 2, 2> m;
  m(0, 0) = D::seed(1.0, 0);
  m(0, 1) = D(2.0);
  m(1, 0) = D(0.5);
  m(1, 1) = D::seed(3.0, 1);
  const Eigen::Matrix<D, 2, 1> v(D(1.0), D(2.0));
  const Eigen::Matrix<D, 2, 1> r = m * v;
  EXPECT_DOUBLE_EQ(r[0].v, 5.0);
  EXPECT_DOUBLE_EQ(r[0].g[0], 1.0);  // d(m00*1)/dm00
  EXPECT_DOUBLE_EQ(r[1].v, 6.5);
  EXPECT_DOUBLE_EQ(r[1].g[1], 2.0);  // d(m11*2)/dm11
}

TEST(Rotations, ZyxCompositionAndRateMap) {
  const wbmpc::Vec3T<double> euler(0.3, -0.4, 1.2);
  const Eigen::Matrix3d r = wbmpc::rotation_zyx(euler);
  const Eigen::Matrix3d expected =
      (Eigen::AngleAxisd(euler.z(), Eigen::Vector3d::UnitZ()) *
       Eigen::AngleAxisd(euler.y(), Eigen::Vector3d::UnitY()) *
       Eigen::AngleAxisd(euler.x(), Eigen::Vector3d::UnitX()))
          .toRotationMatrix();
  EXPECT_LT((r - expected).cwiseAbs().maxCoeff(), 1e-14);

  // euler_rate_map is the identity at zero attitude
  const Eigen::Matrix3d e0 = wbmpc::euler_rate_map(wbmpc::Vec3T<double>::Zero());
  EXPECT_LT((e0 - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-14);

  // d/dt R = R [w]x with euler rates from the map (body-frame rates)
  const Eigen::Vector3d omega_body(0.2, -0.5, 0.7);
  const Eigen::Vector3d euler_rates = wbmpc::euler_rate_map(euler) * omega_body;
  const double dt = 1e-7;
  const Eigen::Matrix3d r_next = wbmpc::rotation_zyx<double>(euler + dt * euler_rates);
  const Eigen::Matrix3d rdot_fd = (r_next - r) / dt;
  const Eigen::Matrix3d rdot = r * wbmpc::skew<double>(omega_body);
  EXPECT_LT((rdot - rdot_fd).cwiseAbs().maxCoeff(), 1e-5);
}

TEST(Rotations, QuaternionFromRotationRoundTrip) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-M_PI, M_PI);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Quaterniond ref =
        Eigen::Quaterniond(Eigen::AngleAxisd(dist(rng), Eigen::Vector3d::Random().normalized()));
    const Eigen::Matrix3d r = ref.toRotationMatrix();
    const Eigen::Matrix<double, 4, 1> q = wbmpc::quaternion_from_rotation<double>(r);
    const Eigen::Quaterniond back(q[0], q[1], q[2], q[3]);
    EXPECT_LT((back.toRotationMatrix() - r).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(back.norm(), 1.0, 1e-12);
  }
}
