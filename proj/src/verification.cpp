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

#include "gatesim/verification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "gatesim/budget.hpp"

namespace gatesim {
namespace {

HilbertSpace qubits(std::size_t n) { return HilbertSpace(std::vector<std::size_t>(n, 2)); }

void require_qubits(std::size_t n, std::size_t minimum) {
  if (n < minimum) throw std::invalid_argument("ideal gate needs at least " + std::to_string(minimum) + " qubits");
}

std::size_t paper_steps(const PulseSequence& seq) {
  switch (seq.gate) {
    case GateKind::CP3:
    case GateKind::NCP:
      return static_cast<std::size_t>(step_count(Scheme::NCP, seq.n, Convention::Paper));
    case GateKind::NTCNOT:
      return static_cast<std::size_t>(step_count(Scheme::NTCNOT, seq.n, Convention::Paper));
    case GateKind::Toffoli:
      return static_cast<std::size_t>(step_count(Scheme::Toffoli, 3, Convention::Paper));
  }
  return 0;
}

// Index of the single basis state holding the whole norm.
std::size_t basis_index(std::span<const cplx> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::norm(v[i]) > std::norm(v[best])) best = i;
  }
  if (std::abs(std::norm(v[best]) - 1.0) > 1e-10) {
    throw std::invalid_argument("phase audit needs the sequence to map basis states to basis states");
  }
  return best;
}

}  // namespace

UnitaryMatrix ideal_ncp(std::size_t n) {
  require_qubits(n, 2);
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix m = ComplexMatrix::identity(d);
  m(d - 1, d - 1) = -1.0;
  return {qubits(n), std::move(m)};
}

UnitaryMatrix ideal_cp3() { return ideal_ncp(3); }

UnitaryMatrix ideal_ntcnot(std::size_t n) {
  require_qubits(n, 2);
  const std::size_t d = std::size_t{1} << n;
  const std::size_t half = d / 2;
  ComplexMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    double sign = 1.0;
    if (k >= half) {
      // Z on every target: parity of the target bits.
      if (std::popcount(k - half) % 2 == 1) sign = -1.0;
    }
    m(k, k) = sign;
  }
  return {qubits(n), std::move(m)};
}

UnitaryMatrix ideal_toffoli() {
  ComplexMatrix m = ComplexMatrix::identity(8);
  m(6, 6) = 0.0;
  m(7, 7) = 0.0;
  m(6, 7) = 1.0;
  m(7, 6) = 1.0;
  return {qubits(3), std::move(m)};
}

UnitaryMatrix ideal_gate(GateKind gate, std::size_t n) {
  switch (gate) {
    case GateKind::CP3:
      return ideal_cp3();
    case GateKind::NCP:
      return ideal_ncp(n);
    case GateKind::NTCNOT:
      return ideal_ntcnot(n);
    case GateKind::Toffoli:
      return ideal_toffoli();
  }
  throw std::invalid_argument("unknown gate");
}

GateReport report(const PulseSequence& seq, const ReportOptions& opts) {
  const Register& reg = seq.reg;
  const HilbertSpace& space = reg.space;
  const std::vector<std::size_t> idx = computational_indices(reg);
  const UnitaryMatrix ideal = ideal_gate(seq.gate, seq.n);

  std::vector<StateVector> inputs;
  for (std::size_t i : idx) inputs.push_back(StateVector::basis(space, i));
  const std::vector<TraceResult> runs = trace(seq, opts.compose, inputs, opts.samples_per_segment);

  GateReport r;
  r.gate = std::string(gate_name(seq.gate));
  r.n = seq.n;
  r.mode = opts.compose.mode;
  r.cavity_dim = reg.cavity_dim();
  r.total_duration = seq.total_duration();
  r.step_count = seq.step_count();
  r.step_count_paper = paper_steps(seq);
  r.primitive_count = seq.primitive_count();

  const std::size_t c = space.cavity_slot();
  cplx overlap{};
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const std::vector<cplx>& v = runs[a].final_state.amplitudes();
    std::vector<cplx> expected(v.size());
    for (std::size_t b = 0; b < idx.size(); ++b) expected[idx[b]] = ideal(b, a);

    double kept = 0.0;
    double photon = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      overlap += std::conj(expected[i]) * v[i];
      r.max_amplitude_error = std::max(r.max_amplitude_error, std::abs(v[i] - expected[i]));
      if (space.digit(i, c) > 0) photon += std::norm(v[i]);
    }
    for (std::size_t b : idx) kept += std::norm(v[b]);
    r.max_leakage = std::max(r.max_leakage, std::max(0.0, 1.0 - kept));
    r.residual_photon = std::max(r.residual_photon, photon);
    r.max_level3_population = std::max(r.max_level3_population, runs[a].max_level3);
  }
  const double d = static_cast<double>(idx.size());
  r.process_fidelity = std::min(1.0, std::norm(overlap) / (d * d));
  r.exact_phase_match = r.max_amplitude_error <= opts.tolerance;
  return r;
}

nlohmann::ordered_json report_json(const GateReport& r) {
  nlohmann::ordered_json j;
  j["gate"] = r.gate;
  j["n"] = r.n;
  j["mode"] = mode_name(r.mode);
  j["cavity_dim"] = r.cavity_dim;
  j["process_fidelity"] = r.process_fidelity;
  j["exact_phase_match"] = r.exact_phase_match;
  j["max_amplitude_error"] = r.max_amplitude_error;
  j["max_level3_population"] = r.max_level3_population;
  j["residual_photon"] = r.residual_photon;
  j["max_leakage"] = r.max_leakage;
  j["total_duration"] = r.total_duration;
  j["step_count"] = r.step_count;
  j["step_count_paper"] = r.step_count_paper;
  j["primitive_count"] = r.primitive_count;
  return j;
}

double condition_ratio(const DeviceParams& params, const Register& reg) {
  double worst = 0.0;
  for (std::size_t q = 0; q < reg.num_qubits(); ++q) {
    const double g = params.coupling(q);
    const double rate = reg.roles[q] == QubitRole::DispersiveTarget
                            ? g * g / params.target_detuning(q)
                            : 2.0 * g * g / params.delta_c;
    worst = std::max(worst, rate);
  }
  if (worst <= 0.0) throw std::invalid_argument("condition ratio needs at least one qubit");
  return params.omega_resonant / worst;
}

PhaseAudit phase_audit(const PulseSequence& seq) {
  seq.validate();
  const Register& reg = seq.reg;
  const HilbertSpace& space = reg.space;
  const std::size_t c = space.cavity_slot();
  PhaseAudit audit;
  audit.condition_ratio = condition_ratio(seq.params, reg);
  audit.negligible = audit.condition_ratio > kNegligibleRatio;

  auto rate = [&](std::size_t q) {
    const double g = seq.params.coupling(q);
    return g * g / seq.params.detuning(q, reg.roles[q]);
  };
  auto idle = [](const Stage& st, std::size_t q) {
    return std::none_of(st.members.begin(), st.members.end(),
                        [q](const Primitive& m) { return m.slot == q; });
  };

  for (std::size_t s = 0; s < seq.steps.size(); ++s) {
    for (std::size_t k = 0; k < seq.steps[s].stages.size(); ++k) {
      const Stage& st = seq.steps[s].stages[k];
      for (const Primitive& m : st.members) {
        if (m.kind == PrimitiveKind::Hadamard) {
          throw std::invalid_argument("phase audit does not cover Hadamard stages");
        }
      }
      if (st.exchanges_photon()) continue;
      for (std::size_t q = 0; q < reg.num_qubits(); ++q) {
        if (!idle(st, q)) continue;
        audit.entries.push_back({s, k, q, st.duration(), rate(q) * st.duration()});
      }
    }
  }

  for (std::size_t input : computational_indices(reg)) {
    std::vector<cplx> v(space.total_dim());
    v[input] = 1.0;
    double phase = 0.0;
    for (const PulseStep& step : seq.steps) {
      for (const Stage& st : step.stages) {
        const std::size_t at = basis_index(v);
        if (!st.exchanges_photon()) {
          const double photons = static_cast<double>(space.digit(at, c));
          for (std::size_t q = 0; q < reg.num_qubits(); ++q) {
            if (idle(st, q) && space.digit(at, q) == 2) phase += photons * rate(q) * st.duration();
          }
        }
        for (const Primitive& m : st.members) apply_local(analytic_local(m, reg), space, v);
      }
    }
    audit.branch_phase.push_back(phase);
    audit.max_branch_phase = std::max(audit.max_branch_phase, std::abs(phase));
  }
  return audit;
}

nlohmann::ordered_json phase_audit_json(const PhaseAudit& audit) {
  nlohmann::ordered_json j;
  j["condition_ratio"] = audit.condition_ratio;
  j["negligible"] = audit.negligible;
  j["max_branch_phase"] = audit.max_branch_phase;
  j["branch_phase"] = audit.branch_phase;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const PhaseEntry& e : audit.entries) {
    nlohmann::ordered_json row;
    row["step"] = e.step;
    row["stage"] = e.stage;
    row["slot"] = e.slot;
    row["duration"] = e.duration;
    row["phase_per_photon"] = e.phase_per_photon;
    entries.push_back(std::move(row));
  }
  j["entries"] = entries;
  return j;
}

}  // namespace gatesim

namespace gatesim {

std::vector<std::size_t> g1_domain(const Register& emitter_only) {
  const HilbertSpace& s = emitter_only.space;
  const std::size_t a[] = {0, 0};
  const std::size_t b[] = {1, 0};
  const std::size_t c[] = {2, 1};
  return {s.index_of(a), s.index_of(b), s.index_of(c)};
}

double g1_fidelity(const DeviceParams& params, Mode mode, std::size_t cavity_dim) {
  const Register reg({QubitRole::RamanEmitter}, cavity_dim);
  const UnitaryMatrix ideal = g1(params, reg, 0, Mode::Analytic);
  const UnitaryMatrix actual = g1(params, reg, 0, mode);
  const std::vector<std::size_t> domain = g1_domain(reg);
  return process_fidelity(ideal, actual, domain);
}

double g1_peak_level3(const DeviceParams& params, std::size_t cavity_dim) {
  const Register reg({QubitRole::RamanEmitter}, cavity_dim);
  const Primitive prim = make_primitive(PrimitiveKind::G1, params, reg, 0);
  const LocalOperator h = hamiltonian_local(prim, params, reg, Mode::SimulatedFull);
  const Spectrum spec(h.matrix);
  const std::size_t start_digits[] = {1, 0};
  const std::size_t start = reg.space.index_of(start_digits);
  const std::size_t dim = spec.dim();
  const std::size_t photons = reg.cavity_dim();

  // Overlaps of the initial state with each eigenvector.
  std::vector<cplx> c0(dim);
  for (std::size_t m = 0; m < dim; ++m) c0[m] = std::conj(spec.eigenvector_rows()(m, start));

  auto level3 = [&](double t) {
    double p = 0.0;
    for (std::size_t n = 0; n < photons; ++n) {
      const std::size_t k = 3 * photons + n;
      cplx a{};
      for (std::size_t m = 0; m < dim; ++m) {
        a += std::polar(1.0, -spec.eigenvalues()[m] * t) * c0[m] * spec.eigenvector_rows()(m, k);
      }
      p += std::norm(a);
    }
    return p;
  };

  constexpr std::size_t kSamples = 4000;
  const double dt = prim.duration / static_cast<double>(kSamples);
  std::size_t best = 0;
  double best_p = level3(0.0);
  for (std::size_t i = 1; i <= kSamples; ++i) {
    const double p = level3(dt * static_cast<double>(i));
    if (p > best_p) {
      best_p = p;
      best = i;
    }
  }
  double lo = dt * static_cast<double>(best == 0 ? 0 : best - 1);
  double hi = dt * static_cast<double>(std::min(best + 1, kSamples));
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = level3(x1);
  double f2 = level3(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-16 * prim.duration; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = level3(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = level3(x1);
    }
  }
  return std::max({best_p, f1, f2});
}

}  // namespace gatesim
