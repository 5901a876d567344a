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
#include <vector>

#include <json.hpp>

#include "gatesim/linalg.hpp"
#include "gatesim/sequencer.hpp"

namespace gatesim {

// Ideal gates on n qubits (dimension 2^n, qubit 1 most significant).

/// diag(1, ..., 1, -1).
UnitaryMatrix ideal_ncp(std::size_t n);
UnitaryMatrix ideal_cp3();
/// |0><0| (x) I + |1><1| (x) Z^(n-1): flips |+> <-> |-> on every target.
UnitaryMatrix ideal_ntcnot(std::size_t n);
/// Controlled-controlled-NOT on qubit 3.
UnitaryMatrix ideal_toffoli();
UnitaryMatrix ideal_gate(GateKind gate, std::size_t n);

struct GateReport {
  std::string gate;
  std::size_t n = 0;
  Mode mode = Mode::Analytic;
  std::size_t cavity_dim = 0;
  /// |sum_a <ideal a|U|a>|^2 / d^2 over computational inputs with the cavity
  /// in vacuum.
  double process_fidelity = 0.0;
  /// Every computational column equals the ideal one, phases included.
  bool exact_phase_match = false;
  double max_amplitude_error = 0.0;
  double max_level3_population = 0.0;
  /// Largest probability of photons left in the cavity at the end.
  double residual_photon = 0.0;
  /// Largest probability of leaving the computational subspace.
  double max_leakage = 0.0;
  double total_duration = 0.0;
  std::size_t step_count = 0;        // grouped: one per PulseStep
  std::size_t step_count_paper = 0;  // closed-form count (4n-5 for ncp)
  std::size_t primitive_count = 0;
};

struct ReportOptions {
  ComposeOptions compose;
  /// Amplitude tolerance for exact_phase_match.
  double tolerance = 1e-10;
  std::size_t samples_per_segment = 48;
};

GateReport report(const PulseSequence& seq, const ReportOptions& opts);

nlohmann::ordered_json report_json(const GateReport& r);

struct PhaseEntry {
  std::size_t step = 0;
  std::size_t stage = 0;
  std::size_t slot = 0;  // idle qubit
  double duration = 0.0;
  /// g_q^2 T / Delta_q: phase picked up by |2>_q per cavity photon.
  double phase_per_photon = 0.0;
};

struct PhaseAudit {
  std::vector<PhaseEntry> entries;
  /// Accumulated unwanted phase of each computational input (order of
  /// computational_indices): sum over photon-conserving stages of
  /// n_photons * g_q^2 T / Delta_q for idle qubits sitting in |2>.
  std::vector<double> branch_phase;
  double max_branch_phase = 0.0;
  double condition_ratio = 0.0;
  /// condition_ratio > negligible_ratio.
  bool negligible = false;
};

/// Omega_{j2} / max(2 g_1^2/Delta_c, 2 g_absorber^2/Delta_c, g_k^2/Delta_{c,k})
/// over the slots of the register.
double condition_ratio(const DeviceParams& params, const Register& reg);

constexpr double kNegligibleRatio = 10.0;

/// Throws std::invalid_argument for sequences containing Hadamard stages
/// (branch phases are tracked on basis states).
PhaseAudit phase_audit(const PulseSequence& seq);

nlohmann::ordered_json phase_audit_json(const PhaseAudit& audit);

/// Basis states on which the Raman flops are defined for the emitter:
/// |0>|0>_c, |1>|0>_c and |2>|1>_c (indices on the one-emitter register).
std::vector<std::size_t> g1_domain(const Register& emitter_only);

/// Process fidelity of the G1 flop in `mode` against the closed form on
/// g1_domain(), for a single emitter coupled to the cavity.
double g1_fidelity(const DeviceParams& params, Mode mode, std::size_t cavity_dim = 3);

/// Peak |3> population during the full-model G1 started in |1>|0>_c,
/// found by dense sampling over [0, t1] and golden-section refinement.
double g1_peak_level3(const DeviceParams& params, std::size_t cavity_dim = 3);

}  // namespace gatesim
