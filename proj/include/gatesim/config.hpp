// Copyright 2026 The Gatesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gatesim/budget.hpp"
#include "gatesim/hamiltonians.hpp"

namespace gatesim {

/// Malformed or incomplete parameter input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Preset {
  std::string name;
  DeviceParams params;
  std::optional<SquidParams> squid;
  std::optional<LevelStructure> levels;
  /// Free-form reference values carried along for reports.
  nlohmann::ordered_json reference;
};

/// Device block. Coupling as "g" (rad/s) or "g_over_pi" (Hz); detunings as
/// absolute values or "delta_ratio" (Delta_c = Delta_{c,k} = ratio * g);
/// Omega_{j2} as "omega_resonant" or "omega_ratio". Unknown keys are
/// rejected. Throws ConfigError.
DeviceParams parse_device(const nlohmann::json& j);
SquidParams parse_squid(const nlohmann::json& j);
LevelStructure parse_levels(const nlohmann::json& j);
Preset parse_preset(const nlohmann::json& j);
Preset load_preset(const std::string& path);

/// The coplanar-waveguide scenario: g/pi = 440 MHz, Delta = Omega_{j2} = 10 g,
/// gamma2^-1 = 1 us, Q = 1e5, nu_c = 3 GHz.
DeviceParams cpw_defaults();

/// Copy of `j` with every floating-point number rounded to 12 significant
/// digits, so reports are stable across platforms.
nlohmann::ordered_json canonical(const nlohmann::ordered_json& j);
std::string dump_canonical(const nlohmann::ordered_json& j);

}  // namespace gatesim
