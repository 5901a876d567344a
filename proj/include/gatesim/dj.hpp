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
#include <string>

#include <json.hpp>

#include "gatesim/hamiltonians.hpp"
#include "gatesim/linalg.hpp"
#include "gatesim/primitives.hpp"

namespace gatesim {

/// The four one-bit functions: 1 -> (0,0), 2 -> (1,1), 3 -> (0,1), 4 -> (1,0).
struct OracleVariant {
  int id = 1;
  int f0 = 0;
  int f1 = 0;
  bool constant() const { return f0 == f1; }
};

/// Throws std::invalid_argument for ids outside 1..4.
OracleVariant oracle_variant(int id);

/// Register of the two-qubit algorithm: query qubit (slot 0, Raman emitter)
/// and auxiliary qubit (slot 1, dispersive target).
Register dj_register(std::size_t cavity_dim = 2);

/// (|0> + |1>)/sqrt2 (x) |1> (x) |0>_c; the auxiliary factor is
/// (|+> - |->)/sqrt2 = |1>.
StateVector dj_input(const Register& reg);

/// Applies U_f built from the two-qubit controlled-NOT of the pulse
/// protocol (composed in `mode`) and the idealised rotations
///   A: |0> -> |1>, |1> -> -|0>     B: |0> -> -|1>, |1> -> |0>
/// on the query qubit: (1) identity, (2) CNOT A CNOT B, (3) CNOT,
/// (4) A CNOT B.
StateVector uf_apply(int variant, const StateVector& state, const DeviceParams& params, Mode mode);

struct DjResult {
  int variant = 0;
  bool expected_constant = false;
  bool constant = false;
  /// Probability of the measured query outcome (|0> for constant, |1>
  /// for balanced).
  double probability = 0.0;
  double probability_zero = 0.0;
  std::size_t oracle_invocations = 0;
  /// Tr(rho_query^2) of the oracle output; 1 when the auxiliary factor is
  /// unentangled.
  double query_purity = 0.0;
  bool correct() const { return constant == expected_constant; }
};

DjResult run_dj(int variant, const DeviceParams& params, Mode mode);

nlohmann::ordered_json dj_json(const DjResult& r, Mode mode);

}  // namespace gatesim
