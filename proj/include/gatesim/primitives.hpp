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
#include <string_view>

#include "gatesim/hamiltonians.hpp"
#include "gatesim/linalg.hpp"

namespace gatesim {

/// The pulse primitives the gate protocols are built from.
///  - G1: Raman flop |1>|0>_c <-> |2>|1>_c on the emitter (t1 = pi Delta_c / 2g^2)
///  - G2: Raman flop |0>|0>_c <-> |2>|1>_c on an absorber (t2 = pi Delta_c / 2g^2)
///  - Gpi: dispersive pi phase on |2>|1>_c and |3>|1>_c (t_k = pi Delta_{c,k} / g^2)
///  - R / Rdagger: resonant pi/2 pulse on |j> <-> |2> (tau = pi / 2 Omega_{j2})
///  - Hadamard: idealised zero-duration gate on levels {0,1}
enum class PrimitiveKind { G1, G2, Gpi, R, Rdagger, Hadamard };

/// analytic: closed-form maps. simulated_effective: exp(-iHt) of the
/// eliminated Hamiltonians. simulated_full: exp(-iHt) with level |3> kept.
enum class Mode { Analytic, SimulatedEffective, SimulatedFull };

std::string_view kind_name(PrimitiveKind kind);
std::string_view mode_name(Mode mode);
/// Accepts "analytic", "simulated_effective", "simulated_full".
Mode parse_mode(std::string_view name);

/// True for G1 and G2, the primitives that move a photon in or out of the cavity.
bool exchanges_photon(PrimitiveKind kind);

struct Primitive {
  PrimitiveKind kind;
  std::size_t slot;
  double duration;  // seconds
};

double primitive_duration(PrimitiveKind kind, const DeviceParams& params, std::size_t slot);

/// Throws std::invalid_argument if the slot's role cannot host the primitive
/// (G1 needs an emitter, G2 an absorber, Gpi a target).
void check_role(PrimitiveKind kind, const Register& reg, std::size_t slot);

/// Builds the primitive with its duration after the role check.
Primitive make_primitive(PrimitiveKind kind, const DeviceParams& params, const Register& reg,
                         std::size_t slot);

/// Closed-form unitary as a local operator. Raman flops are the identity
/// outside {|j,0>, |2,1>}; Gpi multiplies |2,n>, |3,n> by (-1)^n.
LocalOperator analytic_local(const Primitive& prim, const Register& reg);

/// Generator of the primitive: eliminated Hamiltonian (effective) or the
/// Hamiltonian with level |3> kept (full). Throws for Hadamard.
LocalOperator hamiltonian_local(const Primitive& prim, const DeviceParams& params,
                                const Register& reg, Mode mode);

/// Unitary of the primitive in the requested mode, as a local operator.
LocalOperator primitive_local(const Primitive& prim, const DeviceParams& params,
                              const Register& reg, Mode mode);

UnitaryMatrix g1(const DeviceParams& params, const Register& reg, std::size_t slot, Mode mode);
UnitaryMatrix g2(const DeviceParams& params, const Register& reg, std::size_t slot, Mode mode);
UnitaryMatrix g_pi(const DeviceParams& params, const Register& reg, std::size_t slot, Mode mode);
UnitaryMatrix r_pulse(const DeviceParams& params, const Register& reg, std::size_t slot,
                      bool dagger, Mode mode);
UnitaryMatrix hadamard(const Register& reg, std::size_t slot);

}  // namespace gatesim
