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

#include "gatesim/primitives.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gatesim {
namespace {

using std::numbers::pi;

std::size_t local_index(std::size_t level, std::size_t photons, std::size_t cavity_dim) {
  return level * cavity_dim + photons;
}

LocalOperator raman_flop(std::size_t j, std::size_t slot, const Register& reg) {
  const std::size_t n = reg.cavity_dim();
  ComplexMatrix m = ComplexMatrix::identity(4 * n);
  const std::size_t low = local_index(j, 0, n);
  const std::size_t high = local_index(2, 1, n);
  m(low, low) = 0.0;
  m(high, high) = 0.0;
  m(high, low) = 1.0;
  m(low, high) = 1.0;
  return {std::move(m), {slot, reg.cavity_slot()}};
}

LocalOperator dispersive_pi(std::size_t slot, const Register& reg) {
  const std::size_t n = reg.cavity_dim();
  ComplexMatrix m = ComplexMatrix::identity(4 * n);
  for (std::size_t level : {std::size_t{2}, std::size_t{3}}) {
    for (std::size_t k = 0; k < n; ++k) {
      m(local_index(level, k, n), local_index(level, k, n)) = (k % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return {std::move(m), {slot, reg.cavity_slot()}};
}

LocalOperator resonant_pi_half(std::size_t j, std::size_t slot, bool dagger) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(j, j) = 0.0;
  m(2, 2) = 0.0;
  // R: |2> -> |j>, |j> -> -|2>.  R^dagger: |2> -> -|j>, |j> -> |2>.
  m(j, 2) = dagger ? -1.0 : 1.0;
  m(2, j) = dagger ? 1.0 : -1.0;
  return {std::move(m), {slot}};
}

LocalOperator hadamard_local(std::size_t slot) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  const double s = 1.0 / std::sqrt(2.0);
  m(0, 0) = s;
  m(0, 1) = s;
  m(1, 0) = s;
  m(1, 1) = -s;
  return {std::move(m), {slot}};
}

void require_slot(const Register& reg, std::size_t slot) {
  if (slot >= reg.num_qubits()) {
    throw std::out_of_range("qubit slot " + std::to_string(slot) + " out of range");
  }
}

UnitaryMatrix embedded(const LocalOperator& op, const Register& reg) {
  return embed_unitary(op.matrix, reg.space, op.slots);
}

}  // namespace

std::string_view kind_name(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::G1:
      return "G1";
    case PrimitiveKind::G2:
      return "G2";
    case PrimitiveKind::Gpi:
      return "Gpi";
    case PrimitiveKind::R:
      return "R";
    case PrimitiveKind::Rdagger:
      return "Rdagger";
    case PrimitiveKind::Hadamard:
      return "H";
  }
  return "?";
}

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::Analytic:
      return "analytic";
    case Mode::SimulatedEffective:
      return "simulated_effective";
    case Mode::SimulatedFull:
      return "simulated_full";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "analytic") return Mode::Analytic;
  if (name == "simulated_effective") return Mode::SimulatedEffective;
  if (name == "simulated_full") return Mode::SimulatedFull;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

bool exchanges_photon(PrimitiveKind kind) {
  return kind == PrimitiveKind::G1 || kind == PrimitiveKind::G2;
}

double primitive_duration(PrimitiveKind kind, const DeviceParams& params, std::size_t slot) {
  switch (kind) {
    case PrimitiveKind::G1:
    case PrimitiveKind::G2: {
      const double g = params.coupling(slot);
      return pi * params.delta_c / (2.0 * g * g);
    }
    case PrimitiveKind::Gpi: {
      const double g = params.coupling(slot);
      return pi * params.target_detuning(slot) / (g * g);
    }
    case PrimitiveKind::R:
    case PrimitiveKind::Rdagger:
      return pi / (2.0 * params.omega_resonant);
    case PrimitiveKind::Hadamard:
      return 0.0;
  }
  return 0.0;
}

void check_role(PrimitiveKind kind, const Register& reg, std::size_t slot) {
  require_slot(reg, slot);
  const QubitRole role = reg.roles[slot];
  auto fail = [&](std::string_view need) {
    throw std::invalid_argument(std::string(kind_name(kind)) + " on slot " +
                                std::to_string(slot) + " needs a " + std::string(need) +
                                ", found " + std::string(role_name(role)));
  };
  switch (kind) {
    case PrimitiveKind::G1:
      if (role != QubitRole::RamanEmitter) fail("raman_emitter");
      break;
    case PrimitiveKind::G2:
      if (role != QubitRole::RamanAbsorber) fail("raman_absorber");
      break;
    case PrimitiveKind::Gpi:
      if (role != QubitRole::DispersiveTarget) fail("dispersive_target");
      break;
    default:
      break;
  }
}

Primitive make_primitive(PrimitiveKind kind, const DeviceParams& params, const Register& reg,
                         std::size_t slot) {
  check_role(kind, reg, slot);
  return {kind, slot, primitive_duration(kind, params, slot)};
}

LocalOperator analytic_local(const Primitive& prim, const Register& reg) {
  check_role(prim.kind, reg, prim.slot);
  const QubitRole role = reg.roles[prim.slot];
  switch (prim.kind) {
    case PrimitiveKind::G1:
    case PrimitiveKind::G2:
      return raman_flop(raman_level(role), prim.slot, reg);
    case PrimitiveKind::Gpi:
      return dispersive_pi(prim.slot, reg);
    case PrimitiveKind::R:
      return resonant_pi_half(resonant_level(role), prim.slot, false);
    case PrimitiveKind::Rdagger:
      return resonant_pi_half(resonant_level(role), prim.slot, true);
    case PrimitiveKind::Hadamard:
      return hadamard_local(prim.slot);
  }
  throw std::logic_error("unhandled primitive");
}

LocalOperator hamiltonian_local(const Primitive& prim, const DeviceParams& params,
                                const Register& reg, Mode mode) {
  check_role(prim.kind, reg, prim.slot);
  const QubitRole role = reg.roles[prim.slot];
  const bool full = mode == Mode::SimulatedFull;
  switch (prim.kind) {
    case PrimitiveKind::G1:
    case PrimitiveKind::G2:
      return full ? raman_full_local(params, prim.slot, role, reg.space)
                  : raman_effective_local(params, prim.slot, role, reg.space);
    case PrimitiveKind::Gpi:
      return full ? cavity_coupling_local(params, prim.slot, role, reg.space)
                  : dispersive_local(params, prim.slot, reg.space);
    case PrimitiveKind::R:
      return resonant_drive_local(params.omega_resonant, pi / 2.0, resonant_level(role),
                                  prim.slot, reg.space);
    case PrimitiveKind::Rdagger:
      return resonant_drive_local(params.omega_resonant, -pi / 2.0, resonant_level(role),
                                  prim.slot, reg.space);
    case PrimitiveKind::Hadamard:
      break;
  }
  throw std::invalid_argument("the Hadamard primitive has no Hamiltonian");
}

LocalOperator primitive_local(const Primitive& prim, const DeviceParams& params,
                              const Register& reg, Mode mode) {
  if (mode == Mode::Analytic || prim.kind == PrimitiveKind::Hadamard) {
    return analytic_local(prim, reg);
  }
  LocalOperator h = hamiltonian_local(prim, params, reg, mode);
  return {Spectrum(h.matrix).propagator(prim.duration), std::move(h.slots)};
}

UnitaryMatrix g1(const DeviceParams& params, const Register& reg, std::size_t slot, Mode mode) {
  return embedded(
      primitive_local(make_primitive(PrimitiveKind::G1, params, reg, slot), params, reg, mode),
      reg);
}

UnitaryMatrix g2(const DeviceParams& params, const Register& reg, std::size_t slot, Mode mode) {
  return embedded(
      primitive_local(make_primitive(PrimitiveKind::G2, params, reg, slot), params, reg, mode),
      reg);
}

UnitaryMatrix g_pi(const DeviceParams& params, const Register& reg, std::size_t slot, Mode mode) {
  return embedded(
      primitive_local(make_primitive(PrimitiveKind::Gpi, params, reg, slot), params, reg, mode),
      reg);
}

UnitaryMatrix r_pulse(const DeviceParams& params, const Register& reg, std::size_t slot,
                      bool dagger, Mode mode) {
  const PrimitiveKind kind = dagger ? PrimitiveKind::Rdagger : PrimitiveKind::R;
  return embedded(primitive_local(make_primitive(kind, params, reg, slot), params, reg, mode),
                  reg);
}

UnitaryMatrix hadamard(const Register& reg, std::size_t slot) {
  require_slot(reg, slot);
  return embedded(hadamard_local(slot), reg);
}

}  // namespace gatesim
