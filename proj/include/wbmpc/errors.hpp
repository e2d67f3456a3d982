#ifndef WBMPC_ERRORS_HPP
#define WBMPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wbmpc {

struct SingularOrientation : std::runtime_error {
  explicit SingularOrientation(const std::string& what) : std::runtime_error(what) {}
};

struct SolveFailure : std::runtime_error {
  explicit SolveFailure(const std::string& what) : std::runtime_error(what) {}
};

struct NonUnitQuaternion : std::runtime_error {
  explicit NonUnitQuaternion(const std::string& what) : std::runtime_error(what) {}
};

struct UnstableFilter : std::runtime_error {
  explicit UnstableFilter(const std::string& what) : std::runtime_error(what) {}
};

struct RolloutDiverged : std::runtime_error {
  explicit RolloutDiverged(const std::string& what) : std::runtime_error(what) {}
};

struct RiccatiBlowup : std::runtime_error {
  explicit RiccatiBlowup(const std::string& what) : std::runtime_error(what) {}
};

struct SimDiverged : std::runtime_error {
  explicit SimDiverged(const std::string& what) : std::runtime_error(what) {}
};

struct ColdStartRequired : std::runtime_error {
  explicit ColdStartRequired(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wbmpc

#endif  // WBMPC_ERRORS_HPP
