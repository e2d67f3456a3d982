#ifndef WBMPC_MODEL_PARAMETERS_HPP
#define WBMPC_MODEL_PARAMETERS_HPP

#include <Eigen/Dense>
#include <array>
#include <fstream>
#include <string>

#include <json.hpp>

#include "wbmpc/errors.hpp"
#include "wbmpc/model/state.hpp"

namespace wbmpc {

struct ArmLinkParameters {
  double mass{0.0};
  Mat3 inertia{Mat3::Zero()};   // about COM, link frame
  Vec3 com{Vec3::Zero()};       // COM in link frame
  Vec3 axis{Vec3::UnitZ()};     // joint axis in parent frame
  Vec3 offset{Vec3::Zero()};    // joint origin in parent frame
};

// Physical description of the ball-balancing platform with a 3-DOF arm.
// The shipped defaults are uniform-density primitives summing to 25 kg;
// every value can be overridden from JSON.
struct ModelParameters {
  double ball_radius{0.125};
  double ball_mass{4.0};
  double ball_inertia{2.0 / 3.0 * 4.0 * 0.125 * 0.125};  // spherical shell

  double base_mass{15.0};
  Mat3 base_inertia{(Vec3() << 0.396875, 0.396875, 0.16875).finished().asDiagonal()};
  Vec3 base_com{0.0, 0.0, 0.25};  // from ball center, base frame

  std::array<ArmLinkParameters, 3> arm{};
  Vec3 ee_offset{0.0, 0.0, 0.25};  // EE in last link frame

  double wheel_zenith{M_PI / 4.0};  // contact colatitude on the ball
  double wheel_radius{0.05};
  // Rotation of each wheel axis about its contact normal, away from the
  // azimuthal direction. Zero would leave base yaw unactuated at upright.
  double wheel_twist{M_PI / 6.0};

  double gravity{9.81};
  Vec6 tau_min{(Vec6() << -20, -20, -20, -15, -15, -15).finished()};
  Vec6 tau_max{(Vec6() << 20, 20, 20, 15, 15, 15).finished()};

  ModelParameters() {
    arm[0].mass = 2.5;
    arm[0].inertia = (Vec3() << 3.6458e-3, 3.6458e-3, 3.125e-3).finished().asDiagonal();
    arm[0].com = Vec3(0.0, 0.0, 0.05);
    arm[0].axis = Vec3::UnitZ();
    arm[0].offset = Vec3(0.0, 0.0, 0.5);  // mount on top of the base

    arm[1].mass = 2.0;
    arm[1].inertia = (Vec3() << 1.0417e-2, 1.0417e-2, 1.0e-3).finished().asDiagonal();
    arm[1].com = Vec3(0.0, 0.0, 0.125);
    arm[1].axis = Vec3::UnitY();
    arm[1].offset = Vec3(0.0, 0.0, 0.1);

    arm[2].mass = 1.5;
    arm[2].inertia = (Vec3() << 7.8125e-3, 7.8125e-3, 8.0e-4).finished().asDiagonal();
    arm[2].com = Vec3(0.0, 0.0, 0.125);
    arm[2].axis = Vec3::UnitY();
    arm[2].offset = Vec3(0.0, 0.0, 0.25);
  }

  double total_mass() const {
    return ball_mass + base_mass + arm[0].mass + arm[1].mass + arm[2].mass;
  }

  void validate() const {
    auto require = [](bool ok, const char* what) {
      if (!ok) throw ConfigError(std::string("model parameters: ") + what);
    };
    require(ball_radius > 0.0, "ball radius must be positive");
    require(wheel_radius > 0.0, "wheel radius must be positive");
    require(ball_mass > 0.0 && base_mass > 0.0, "masses must be positive");
    require(ball_inertia > 0.0, "ball inertia must be positive");
    require(gravity > 0.0, "gravity must be positive");
    auto spd = [](const Mat3& m) {
      if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) return false;
      return Eigen::SelfAdjointEigenSolver<Mat3>(m).eigenvalues().minCoeff() > 0.0;
    };
    require(spd(base_inertia), "base inertia must be symmetric positive definite");
    for (const auto& link : arm) {
      require(link.mass > 0.0, "arm link masses must be positive");
      require(spd(link.inertia), "arm link inertias must be symmetric positive definite");
      require(std::abs(link.axis.norm() - 1.0) < 1e-9, "joint axes must be unit vectors");
    }
    for (int i = 0; i < kNumTorques; ++i) {
      require(tau_min[i] < 0.0 && tau_max[i] > 0.0, "torque limits must straddle zero");
    }
  }
};

namespace detail {

inline Vec3 vec3_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("expected a 3-element array");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

inline Mat3 inertia_from_json(const nlohmann::json& j) {
  if (j.is_array() && j.size() == 3 && j[0].is_number()) {
    return Mat3(vec3_from_json(j).asDiagonal());
  }
  if (j.is_array() && j.size() == 3 && j[0].is_array()) {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = j[r][c].get<double>();
    return m;
  }
  throw ConfigError("inertia must be a diagonal 3-array or 3x3 array");
}

inline nlohmann::json to_json(const Vec3& v) { return {v.x(), v.y(), v.z()}; }

inline nlohmann::json to_json(const Mat3& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int r = 0; r < 3; ++r) j.push_back({m(r, 0), m(r, 1), m(r, 2)});
  return j;
}

}  // namespace detail

inline ModelParameters model_parameters_from_json(const nlohmann::json& j) {
  ModelParameters p;
  if (j.contains("ball")) {
    const auto& b = j.at("ball");
    if (b.contains("radius")) p.ball_radius = b.at("radius").get<double>();
    if (b.contains("mass")) p.ball_mass = b.at("mass").get<double>();
    if (b.contains("inertia")) p.ball_inertia = b.at("inertia").get<double>();
  }
  if (j.contains("base")) {
    const auto& b = j.at("base");
    if (b.contains("mass")) p.base_mass = b.at("mass").get<double>();
    if (b.contains("com")) p.base_com = detail::vec3_from_json(b.at("com"));
    if (b.contains("inertia")) p.base_inertia = detail::inertia_from_json(b.at("inertia"));
  }
  if (j.contains("arm_links")) {
    const auto& links = j.at("arm_links");
    if (!links.is_array() || links.size() != 3) throw ConfigError("arm_links must list 3 links");
    for (int i = 0; i < 3; ++i) {
      const auto& l = links[i];
      if (l.contains("mass")) p.arm[i].mass = l.at("mass").get<double>();
      if (l.contains("com")) p.arm[i].com = detail::vec3_from_json(l.at("com"));
      if (l.contains("inertia")) p.arm[i].inertia = detail::inertia_from_json(l.at("inertia"));
      if (l.contains("axis")) p.arm[i].axis = detail::vec3_from_json(l.at("axis")).normalized();
      if (l.contains("offset")) p.arm[i].offset = detail::vec3_from_json(l.at("offset"));
    }
  }
  if (j.contains("ee_offset")) p.ee_offset = detail::vec3_from_json(j.at("ee_offset"));
  if (j.contains("wheels")) {
    const auto& w = j.at("wheels");
    if (w.contains("zenith_angle")) p.wheel_zenith = w.at("zenith_angle").get<double>();
    if (w.contains("radius")) p.wheel_radius = w.at("radius").get<double>();
    if (w.contains("twist_angle")) p.wheel_twist = w.at("twist_angle").get<double>();
  }
  if (j.contains("gravity")) p.gravity = j.at("gravity").get<double>();
  auto vec6 = [](const nlohmann::json& a) {
    if (!a.is_array() || a.size() != kNumTorques) throw ConfigError("torque limits need 6 entries");
    Vec6 v;
    for (int i = 0; i < kNumTorques; ++i) v[i] = a[i].get<double>();
    return v;
  };
  if (j.contains("torque_min")) p.tau_min = vec6(j.at("torque_min"));
  if (j.contains("torque_max")) p.tau_max = vec6(j.at("torque_max"));
  p.validate();
  return p;
}

inline nlohmann::json model_parameters_to_json(const ModelParameters& p) {
  nlohmann::json j;
  j["ball"] = {{"radius", p.ball_radius}, {"mass", p.ball_mass}, {"inertia", p.ball_inertia}};
  j["base"] = {{"mass", p.base_mass},
               {"com", detail::to_json(p.base_com)},
               {"inertia", detail::to_json(p.base_inertia)}};
  j["arm_links"] = nlohmann::json::array();
  for (const auto& l : p.arm) {
    j["arm_links"].push_back({{"mass", l.mass},
                              {"com", detail::to_json(l.com)},
                              {"inertia", detail::to_json(l.inertia)},
                              {"axis", detail::to_json(l.axis)},
                              {"offset", detail::to_json(l.offset)}});
  }
  j["ee_offset"] = detail::to_json(p.ee_offset);
  j["wheels"] = {{"zenith_angle", p.wheel_zenith},
                 {"radius", p.wheel_radius},
                 {"twist_angle", p.wheel_twist}};
  j["gravity"] = p.gravity;
  j["torque_min"] = std::vector<double>(p.tau_min.data(), p.tau_min.data() + kNumTorques);
  j["torque_max"] = std::vector<double>(p.tau_max.data(), p.tau_max.data() + kNumTorques);
  return j;
}

inline ModelParameters load_model_parameters(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open model parameter file: " + path);
  nlohmann::json j;
  in >> j;
  return model_parameters_from_json(j);
}

}  // namespace wbmpc

#endif  // WBMPC_MODEL_PARAMETERS_HPP
