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
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "gatesim/linalg.hpp"

namespace gatesim {

/// How a four-level qudit takes part in a protocol.
///  - RamanEmitter: Raman pair |1> <-> |2> (qubit 1 of the gates).
///  - RamanAbsorber: Raman pair |0> <-> |2> (the middle control qubits).
///  - DispersiveTarget: only the off-resonant |2> <-> |3> cavity coupling.
enum class QubitRole { RamanEmitter, RamanAbsorber, DispersiveTarget };

std::string_view role_name(QubitRole role);

/// Lower level of the Raman pair. Throws std::invalid_argument for targets.
std::size_t raman_level(QubitRole role);

/// Lower level j of the resonant |j> <-> |2> pulse: 0 for absorbers, 1 for
/// the emitter and for targets.
std::size_t resonant_level(QubitRole role);

/// Physical parameters. Frequencies are angular (rad/s), times in seconds,
/// nu_c in Hz. Per-slot vectors of length one apply to every slot.
struct DeviceParams {
  /// Cavity coupling g of the |2> <-> |3> transition per qubit slot.
  std::vector<double> g{1.0};
  /// Raman detuning Delta_c (level |3> above the Raman pair); the pulse
  /// detuning is identical (second-order detuning fixed at zero).
  double delta_c = 10.0;
  /// Dispersive detuning Delta_{c,k} per target slot.
  std::vector<double> delta_ck{10.0};
  /// Raman pulse Rabi frequency per Raman slot. Empty means Omega = g of the
  /// slot, the resonance condition used throughout.
  std::vector<double> omega_raman{};
  /// Resonant |j> <-> |2> pulse Rabi frequency Omega_{j2} (shared by all qubits).
  double omega_resonant = 100.0;
  /// Phase of the Raman pulse relative to the cavity coupling. At pi the
  /// Raman flop maps |j,0> -> +|2,1>; at 0 it maps |j,0> -> -|2,1>.
  double raman_drive_phase = std::numbers::pi;
  /// Energy relaxation time of level |2>.
  double gamma2_inv = 1e-6;
  /// Loaded quality factor.
  double quality_q = 1e5;
  /// Cavity frequency (Hz).
  double nu_c = 3e9;

  double coupling(std::size_t slot) const;
  double target_detuning(std::size_t slot) const;
  double raman_rabi(std::size_t slot) const;
  /// Detuning of level |3> seen by a qubit in the given role.
  double detuning(std::size_t slot, QubitRole role) const;

  /// Throws std::invalid_argument when a frequency or time is non-positive
  /// or non-finite.
  void validate() const;

  /// Messages for every slot outside the dispersive regime (detuning < 10 g).
  std::vector<std::string> regime_warnings(std::size_t num_slots) const;

  /// Identical qubits: g for every slot, Delta_c = Delta_{c,k} = delta_ratio*g,
  /// Omega_raman = g and Omega_{j2} = omega_ratio*g.
  static DeviceParams uniform(double g, double delta_ratio, double omega_ratio);
};

/// Roles of the qubit slots plus the composite space (qudits, cavity).
struct Register {
  HilbertSpace space;
  std::vector<QubitRole> roles;

  Register() = default;
  Register(std::vector<QubitRole> qubit_roles, std::size_t cavity_dim);

  std::size_t num_qubits() const { return roles.size(); }
  std::size_t cavity_slot() const { return space.cavity_slot(); }
  std::size_t cavity_dim() const { return space.dim(space.cavity_slot()); }
};

// Each builder exists in a local form (matrix on the listed slots) and an
// embedded form. Local qudit+cavity matrices use index level * N + photons.

/// Delta|3><3| + g (a^dag|2><3| + a|3><2|) + Omega (e^{-i phi}|3><j| + h.c.)
/// on (slot, cavity): the cavity-frame, time-independent Raman Hamiltonian.
LocalOperator raman_full_local(const DeviceParams& params, std::size_t slot, QubitRole role,
                               const HilbertSpace& space);
HermitianOperator raman_full(const DeviceParams& params, std::size_t slot, QubitRole role,
                             const HilbertSpace& space);

/// Adiabatically eliminated Raman Hamiltonian
/// -[(Omega^2/Delta)|j><j| + (g^2/Delta) a^dag a |2><2|
///   + (Omega g/Delta)(e^{-i phi} a^dag |2><j| + h.c.)].
LocalOperator raman_effective_local(const DeviceParams& params, std::size_t slot,
                                    QubitRole role, const HilbertSpace& space);
HermitianOperator raman_effective(const DeviceParams& params, std::size_t slot, QubitRole role,
                                  const HilbertSpace& space);

/// (g_k^2/Delta_{c,k}) (|3><3| - |2><2|) a^dag a on (slot, cavity).
LocalOperator dispersive_local(const DeviceParams& params, std::size_t slot,
                               const HilbertSpace& space);
HermitianOperator dispersive(const DeviceParams& params, std::size_t slot,
                             const HilbertSpace& space);

/// Omega (e^{-i phi}|2><j| + e^{i phi}|j><2|) on the qudit at `slot`.
LocalOperator resonant_drive_local(double omega, double phi, std::size_t j, std::size_t slot,
                                   const HilbertSpace& space);
HermitianOperator resonant_drive(double omega, double phi, std::size_t j, std::size_t slot,
                                 const HilbertSpace& space);

/// Always-on cavity coupling of any qubit before elimination:
/// Delta_q|3><3| + g_q (a^dag|2><3| + h.c.), with Delta_q from detuning().
LocalOperator cavity_coupling_local(const DeviceParams& params, std::size_t slot, QubitRole role,
                                    const HilbertSpace& space);

/// Raman pulse alone, Omega (e^{-i phi}|3><j| + h.c.), on the qudit at `slot`.
LocalOperator raman_drive_local(const DeviceParams& params, std::size_t slot, QubitRole role,
                                const HilbertSpace& space);

/// Eliminated form of the always-on coupling for an undriven qubit:
/// (g_q^2/Delta_q)(|3><3| - |2><2|) a^dag a. Equal to dispersive_local for
/// targets.
LocalOperator idle_shift_local(const DeviceParams& params, std::size_t slot, QubitRole role,
                               const HilbertSpace& space);

}  // namespace gatesim
