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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gatesim/hamiltonians.hpp"
#include "gatesim/linalg.hpp"
#include "gatesim/primitives.hpp"

namespace gatesim {

/// Primitives that run simultaneously. Members act on distinct qubits; the
/// cavity is shared either by one photon-exchanging member (G1/G2) or by any
/// number of dispersive (Gpi) members, never both.
struct Stage {
  std::vector<Primitive> members;
  double duration() const;  // longest member
  bool exchanges_photon() const;
};

/// One counted step. Usually a single stage; a multi-stage step is an
/// ordered bundle counted once (the R^dagger, Gpi, R block on the target).
struct PulseStep {
  std::vector<Stage> stages;
  double duration() const;  // sum of stage durations
};

enum class GateKind { CP3, NCP, NTCNOT, Toffoli };

std::string_view gate_name(GateKind gate);
/// Accepts "cp3", "ncp", "ntcnot", "toffoli".
GateKind parse_gate(std::string_view name);

struct PulseSequence {
  GateKind gate = GateKind::CP3;
  std::size_t n = 0;  // logical qubits
  DeviceParams params;
  Register reg;
  std::vector<PulseStep> steps;

  double total_duration() const;
  std::size_t step_count() const { return steps.size(); }
  std::size_t primitive_count() const;

  /// Role checks plus the Stage sharing rule. Throws std::invalid_argument.
  void validate() const;
};

/// Cavity truncation used when none is given: one photon suffices for the
/// eliminated models; the full model keeps a second Fock state so that
/// off-resonant two-photon paths are not cut off.
std::size_t default_cavity_dim(Mode mode);

PulseSequence cp3_sequence(const DeviceParams& params, std::size_t cavity_dim = 2);
PulseSequence ncp_sequence(std::size_t n, const DeviceParams& params, std::size_t cavity_dim = 2);
PulseSequence ntcnot_sequence(std::size_t n, const DeviceParams& params,
                              std::size_t cavity_dim = 2);
PulseSequence toffoli_sequence(const DeviceParams& params, std::size_t cavity_dim = 2);
/// Dispatch on GateKind; n is ignored for CP3 and Toffoli.
PulseSequence make_sequence(GateKind gate, std::size_t n, const DeviceParams& params,
                            std::size_t cavity_dim);

struct ComposeOptions {
  Mode mode = Mode::Analytic;
  /// simulated_effective only: add the dispersive shift of every qubit that
  /// is not a member of a photon-conserving stage. The full model always
  /// carries these shifts for qubits outside the active primitives.
  bool idle_couplings = false;
  /// simulated_full only: instead of per-primitive Hamiltonians plus idle
  /// dispersive shifts, keep the undriven |2> <-> |3> cavity coupling of
  /// every qubit switched on for the whole sequence, R pulses included.
  bool always_on_couplings = false;
};

/// Product of the step unitaries on the full space.
UnitaryMatrix compose(const PulseSequence& seq, const ComposeOptions& opts);

/// The listed columns of compose(seq, opts), i.e. the images of those basis
/// states, as a total_dim x columns.size() matrix.
ComplexMatrix compose_columns(const PulseSequence& seq, const ComposeOptions& opts,
                              std::span<const std::size_t> columns);

struct TraceResult {
  std::vector<StateVector> after_step;
  StateVector final_state;
  /// Largest single-qubit |3> population seen, including samples inside
  /// each stage for the full model.
  double max_level3 = 0.0;
};

/// Steps each input through the sequence. Analytic mode throws
/// std::logic_error if a Raman flop is applied while the slot holds
/// population outside the flop's defined domain (|j>|n>=1>, |2>|n>=2>).
std::vector<TraceResult> trace(const PulseSequence& seq, const ComposeOptions& opts,
                               std::span<const StateVector> inputs,
                               std::size_t samples_per_segment = 48);
TraceResult trace(const PulseSequence& seq, const ComposeOptions& opts, const StateVector& input,
                  std::size_t samples_per_segment = 48);

/// Basis indices of |q_1..q_n>|0>_c with every q in {0,1}, ordered with
/// qubit 1 most significant (the |00..0> .. |11..1> order).
std::vector<std::size_t> computational_indices(const Register& reg);
/// "011"-style label of the computational state at position `k` of
/// computational_indices().
std::string computational_label(std::size_t n, std::size_t k);

struct LabeledState {
  std::string label;
  StateVector state;
};

/// |q_1..q_n>|0>_c for all bit strings.
std::vector<LabeledState> computational_basis(const Register& reg);
/// Control in {0,1}, every other qubit in {+,-}; the basis of the
/// multi-target CNOT tables.
std::vector<LabeledState> control_target_basis(const Register& reg);

struct TruthRow {
  std::string input;
  std::vector<cplx> amplitudes;  // over the labeled basis
  double leakage = 0.0;          // 1 - sum |amplitude|^2
};

struct TruthTable {
  std::vector<std::string> labels;
  std::vector<TruthRow> rows;
};

TruthTable truth_table(const UnitaryMatrix& u, const std::vector<LabeledState>& basis);
/// Same table without materialising the full unitary.
TruthTable truth_table(const PulseSequence& seq, const ComposeOptions& opts,
                       const std::vector<LabeledState>& basis);

/// CSV: input,<label> re/im pairs...,leakage
std::string truth_table_csv(const TruthTable& table);

/// Step list with kind, slot, duration, step and stage ids.
nlohmann::ordered_json sequence_json(const PulseSequence& seq);

}  // namespace gatesim
