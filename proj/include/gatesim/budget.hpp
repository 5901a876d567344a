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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gatesim/hamiltonians.hpp"

namespace gatesim {

/// CODATA 2018 exact or recommended values, SI units.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double planck = 6.62607015e-34;  // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double mu0 = 1.25663706212e-6;  // N A^-2
inline constexpr double flux_quantum = planck / (2.0 * elementary_charge);  // Wb
}  // namespace constants

/// 2 t1 + 2 t2 + t_k + 4 tau with slots (0, 1, 2) = (emitter, absorber, target).
double time_cp3(const DeviceParams& params);
/// n-qubit controlled phase: 2 t1 + 2 sum_absorbers t2 + t_k + 4 tau.
double time_ncp(const DeviceParams& params, std::size_t n);
/// 2 t1 + 2 tau + max_k t_k over targets 2..n. Independent of n for
/// identical targets.
double time_ntcnot(const DeviceParams& params, std::size_t n = 3);
/// Q / (2 pi nu_c).
double cavity_lifetime(double quality_q, double nu_c);

struct SquidParams {
  double junction_capacitance = 90e-15;  // F
  double loop_inductance = 100e-12;      // H
  double damping_resistance = 1e9;       // ohm
  double beta_l = 1.12;
  double external_flux = 0.4995;         // units of the flux quantum
  double phi32 = 7.8e-2;                 // |2> <-> |3> flux matrix element
  double loop_area = 40e-6 * 40e-6;      // m^2
  double cavity_volume = 10e-3 * 1e-3 * 1e-3;  // m^3
  double cavity_frequency = 3.6e9;       // Hz
  double antinode_factor = 1.0;          // cos(kz)

  /// Throws std::invalid_argument unless every field is positive and
  /// finite and antinode_factor <= 1.
  void validate() const;
};

/// g = (1/L) sqrt(omega_c / (2 mu0 hbar)) phi32 Phi0 mu0 sqrt(2/V) cos(kz) S.
double squid_coupling(const SquidParams& sq);

/// The factors of squid_coupling, for reports.
nlohmann::ordered_json squid_coupling_json(const SquidParams& sq);

enum class Scheme { NCP, NTCNOT, Toffoli };
enum class Convention { Paper, Grouped };

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);

/// ncp: 4n-5 (paper) or 2n+1 (grouped), n >= 3; ntcnot: 5, n >= 2;
/// toffoli: 9, n == 3. Throws std::out_of_range otherwise.
long step_count(Scheme scheme, std::size_t n, Convention convention);

/// Step counts quoted for a conventional gate decomposition: 28 for the
/// Toffoli and 22n-75 for ncp. The ncp expression is reproduced as stated
/// and is negative for n <= 3. None for ntcnot.
std::optional<long> conventional_steps(Scheme scheme, std::size_t n);

struct FeasibilityRow {
  std::string gate;
  double duration = 0.0;
  double ratio_relaxation = 0.0;  // duration / gamma2_inv
  double ratio_cavity = 0.0;      // duration / kappa_inv
  bool pass = false;
};

struct Feasibility {
  double gamma2_inv = 0.0;
  double kappa_inv = 0.0;
  double threshold = 0.1;
  std::vector<FeasibilityRow> rows;  // cp3, ntcnot
  bool pass = false;
};

/// A gate passes when both ratios are below `threshold`.
Feasibility feasibility(const DeviceParams& params, double threshold = 0.1,
                        std::size_t ntcnot_n = 3);

enum class QubitType { Charge, Phase, Flux, Squid };

std::string_view qubit_type_name(QubitType t);
QubitType parse_qubit_type(std::string_view name);

/// Transition frequencies in Hz. nu20, nu30, nu31 are only needed for squid.
struct LevelStructure {
  QubitType type = QubitType::Squid;
  std::optional<double> nu10, nu21, nu32, nu20, nu30, nu31;
};

struct LevelCheck {
  bool pass = false;
  std::vector<std::string> violated;  // e.g. "nu10>nu21"
};

/// charge: nu21>nu10, nu21>nu32, nu32<nu10
/// phase:  nu10>nu21, nu21>nu32
/// flux:   nu21>nu10, nu21>nu32, nu32>nu10
/// squid:  nu32<nu21, nu21<nu20, nu20<nu31, nu31<nu30
/// Throws std::invalid_argument when a frequency the type needs is missing.
LevelCheck validate_levels(const LevelStructure& ls);

}  // namespace gatesim
