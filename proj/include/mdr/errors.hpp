// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mdr {

struct MdrError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One or more graph/input invariants are broken. Carries every violation found.
struct ValidationError : MdrError {
  std::vector<std::string> violations;

  explicit ValidationError(std::vector<std::string> v)
      : MdrError(join(v)), violations(std::move(v)) {}
  explicit ValidationError(const std::string& msg)
      : MdrError(msg), violations{msg} {}

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& m : v) {
      if (!out.empty()) out += "; ";
      out += m;
    }
    return out.empty() ? std::string("validation failed") : out;
  }
};

/// No suitable schedule vector exists within the search radius.
struct ScheduleError : MdrError {
  using MdrError::MdrError;
};

/// A retiming technique could not produce a result.
struct TechniqueError : MdrError {
  using MdrError::MdrError;
};

/// Retiming magnitude exceeds the spatial constraint of the iteration space.
struct SpatialError : MdrError {
  using MdrError::MdrError;
};

struct SimulationError : MdrError {
  using MdrError::MdrError;
};

}  // namespace mdr
