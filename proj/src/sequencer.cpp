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

#include "gatesim/sequencer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace gatesim {
namespace {

bool touches_cavity(PrimitiveKind kind) {
  return kind == PrimitiveKind::G1 || kind == PrimitiveKind::G2 || kind == PrimitiveKind::Gpi;
}

Stage stage(const DeviceParams& p, const Register& reg,
            std::initializer_list<std::pair<PrimitiveKind, std::size_t>> members) {
  Stage s;
  for (const auto& [kind, slot] : members) s.members.push_back(make_primitive(kind, p, reg, slot));
  return s;
}

Stage uniform_stage(const DeviceParams& p, const Register& reg, PrimitiveKind kind,
                    std::size_t first, std::size_t last) {
  Stage s;
  for (std::size_t q = first; q <= last; ++q) s.members.push_back(make_primitive(kind, p, reg, q));
  return s;
}

PulseStep step_of(Stage s) { return PulseStep{{std::move(s)}}; }

void append(Stage& into, const Stage& from) {
  into.members.insert(into.members.end(), from.members.begin(), from.members.end());
}

// A flop on `slot` is only defined on its enumerated domain; the analytic
// trace refuses to push population through the undefined corner.
struct FlopDomain {
  std::size_t slot;
  std::size_t level;
};

struct LocalStep {
  LocalOperator op;
  std::optional<FlopDomain> domain;
};

struct Segment {
  const Spectrum* spectrum;
  double duration;
};

struct StageOps {
  std::vector<LocalStep> locals;  // applied first, in order
  std::vector<Segment> segments;  // then the full-model evolution
};

double max_level3(const HilbertSpace& space, std::span<const cplx> v) {
  const std::size_t nq = space.num_qudits();
  std::vector<double> pop(nq, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double p = std::norm(v[i]);
    if (p == 0.0) continue;
    for (std::size_t q = 0; q < nq; ++q) {
      if (space.digit(i, q) == 3) pop[q] += p;
    }
  }
  return pop.empty() ? 0.0 : *std::max_element(pop.begin(), pop.end());
}

void check_domain(const HilbertSpace& space, const FlopDomain& d, std::span<const cplx> v) {
  const std::size_t c = space.cavity_slot();
  double outside = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::size_t level = space.digit(i, d.slot);
    const std::size_t photons = space.digit(i, c);
    if ((level == d.level && photons >= 1) || (level == 2 && photons >= 2)) outside += std::norm(v[i]);
  }
  if (outside > 1e-12) {
    std::ostringstream msg;
    msg << "Raman flop on slot " << d.slot << " reached population " << outside
        << " outside its defined domain";
    throw std::logic_error(msg.str());
  }
}

ComplexMatrix diagonal_phase(const ComplexMatrix& diag_h, double t) {
  ComplexMatrix u(diag_h.rows(), diag_h.cols());
  for (std::size_t i = 0; i < diag_h.rows(); ++i) {
    u(i, i) = std::polar(1.0, -diag_h(i, i).real() * t);
  }
  return u;
}

class Runner {
 public:
  Runner(const PulseSequence& seq, const ComposeOptions& opts) : seq_(seq), opts_(opts) {
    seq.validate();
    if (opts.mode == Mode::SimulatedFull && opts.always_on_couplings) build_base();
    ops_.resize(seq.steps.size());
    for (std::size_t s = 0; s < seq.steps.size(); ++s) {
      for (const Stage& st : seq.steps[s].stages) ops_[s].push_back(build(st));
    }
  }

  void run(ComplexMatrix& columns) const {
    const HilbertSpace& space = seq_.reg.space;
    for (const auto& step : ops_) {
      for (const StageOps& st : step) {
        for (const LocalStep& l : st.locals) apply_local(l.op, space, columns);
        for (const Segment& seg : st.segments) {
          columns = seg.spectrum->propagator(seg.duration) * columns;
        }
      }
    }
  }

  TraceResult run(const StateVector& input, std::size_t samples) const {
    const HilbertSpace& space = seq_.reg.space;
    if (!(input.space() == space)) throw std::invalid_argument("input state lives on another space");
    TraceResult out;
    std::vector<cplx> v = input.amplitudes();
    out.max_level3 = max_level3(space, v);
    samples = std::max<std::size_t>(samples, 1);
    for (const auto& step : ops_) {
      for (const StageOps& st : step) {
        for (const LocalStep& l : st.locals) {
          if (l.domain && opts_.mode == Mode::Analytic) check_domain(space, *l.domain, v);
          apply_local(l.op, space, v);
          out.max_level3 = std::max(out.max_level3, max_level3(space, v));
        }
        for (const Segment& seg : st.segments) {
          const double dt = seg.duration / static_cast<double>(samples);
          for (std::size_t k = 0; k < samples; ++k) {
            seg.spectrum->evolve_in_place(v, dt);
            out.max_level3 = std::max(out.max_level3, max_level3(space, v));
          }
        }
      }
      out.after_step.emplace_back(space, v);
    }
    out.final_state = StateVector(space, std::move(v));
    return out;
  }

 private:
  void build_base() {
    const HilbertSpace& space = seq_.reg.space;
    base_ = ComplexMatrix(space.total_dim(), space.total_dim());
    for (std::size_t q = 0; q < seq_.reg.num_qubits(); ++q) {
      const LocalOperator c = cavity_coupling_local(seq_.params, q, seq_.reg.roles[q], space);
      base_ += tensor_embed(c.matrix, space, c.slots);
    }
  }

  LocalOperator drive_of(const Primitive& m) const {
    const QubitRole role = seq_.reg.roles[m.slot];
    const HilbertSpace& space = seq_.reg.space;
    switch (m.kind) {
      case PrimitiveKind::G1:
      case PrimitiveKind::G2:
        return raman_drive_local(seq_.params, m.slot, role, space);
      case PrimitiveKind::R:
        return resonant_drive_local(seq_.params.omega_resonant, std::numbers::pi / 2.0,
                                    resonant_level(role), m.slot, space);
      case PrimitiveKind::Rdagger:
        return resonant_drive_local(seq_.params.omega_resonant, -std::numbers::pi / 2.0,
                                    resonant_level(role), m.slot, space);
      default:
        break;
    }
    throw std::logic_error("primitive has no drive term");
  }

  // Full-model Hamiltonian of one segment with the listed primitives active.
  ComplexMatrix segment_hamiltonian(const std::vector<const Primitive*>& active) const {
    const Register& reg = seq_.reg;
    if (opts_.always_on_couplings) {
      ComplexMatrix h = base_;
      for (const Primitive* m : active) {
        if (m->kind == PrimitiveKind::Gpi) continue;  // the base coupling is the whole pulse
        const LocalOperator d = drive_of(*m);
        h += tensor_embed(d.matrix, reg.space, d.slots);
      }
      return h;
    }
    ComplexMatrix h(reg.space.total_dim(), reg.space.total_dim());
    std::vector<bool> busy(reg.num_qubits(), false);
    for (const Primitive* m : active) {
      const LocalOperator l = hamiltonian_local(*m, seq_.params, reg, Mode::SimulatedFull);
      h += tensor_embed(l.matrix, reg.space, l.slots);
      busy[m->slot] = true;
    }
    for (std::size_t q = 0; q < reg.num_qubits(); ++q) {
      if (busy[q]) continue;
      const LocalOperator l = idle_shift_local(seq_.params, q, reg.roles[q], reg.space);
      h += tensor_embed(l.matrix, reg.space, l.slots);
    }
    return h;
  }

  const Spectrum* spectrum_for(const std::vector<const Primitive*>& active) const {
    std::string key;
    for (const Primitive* m : active) {
      key += std::string(kind_name(m->kind)) + ":" + std::to_string(m->slot) + ";";
    }
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second.get();
    auto spec = std::make_unique<Spectrum>(segment_hamiltonian(active));
    const Spectrum* ptr = spec.get();
    cache_.emplace(key, std::move(spec));
    return ptr;
  }

  StageOps build(const Stage& st) const {
    StageOps ops;
    const Register& reg = seq_.reg;
    std::vector<const Primitive*> timed;
    for (const Primitive& m : st.members) {
      const bool instantaneous = m.kind == PrimitiveKind::Hadamard;
      if (opts_.mode == Mode::SimulatedFull && !instantaneous) {
        timed.push_back(&m);
        continue;
      }
      LocalStep l{primitive_local(m, seq_.params, reg, opts_.mode), std::nullopt};
      if (exchanges_photon(m.kind)) l.domain = FlopDomain{m.slot, raman_level(reg.roles[m.slot])};
      ops.locals.push_back(std::move(l));
    }

    if (opts_.mode == Mode::SimulatedEffective && opts_.idle_couplings && !st.exchanges_photon()) {
      const double t = st.duration();
      for (std::size_t q = 0; q < reg.num_qubits(); ++q) {
        const bool member = std::any_of(st.members.begin(), st.members.end(),
                                        [q](const Primitive& m) { return m.slot == q; });
        if (member || t <= 0.0) continue;
        const LocalOperator h = idle_shift_local(seq_.params, q, reg.roles[q], reg.space);
        ops.locals.push_back({{diagonal_phase(h.matrix, t), h.slots}, std::nullopt});
      }
    }

    if (!timed.empty()) {
      // Piecewise constant: each member is on for its own duration.
      std::vector<double> ends;
      for (const Primitive* m : timed) ends.push_back(m->duration);
      std::sort(ends.begin(), ends.end());
      ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
      double start = 0.0;
      for (double end : ends) {
        if (end <= start) continue;
        std::vector<const Primitive*> active;
        for (const Primitive* m : timed) {
          if (m->duration > start) active.push_back(m);
        }
        ops.segments.push_back({spectrum_for(active), end - start});
        start = end;
      }
    }
    return ops;
  }

  const PulseSequence& seq_;
  ComposeOptions opts_;
  ComplexMatrix base_;
  mutable std::map<std::string, std::unique_ptr<Spectrum>> cache_;
  std::vector<std::vector<StageOps>> ops_;
};

void require_n(std::size_t n, std::size_t minimum, const char* gate) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(gate) + " needs at least " + std::to_string(minimum) +
                                " qubits");
  }
}

StateVector product_state(const Register& reg, const std::vector<std::array<cplx, 2>>& qubits) {
  const HilbertSpace& space = reg.space;
  std::vector<cplx> amps(space.total_dim());
  const std::size_t n = qubits.size();
  std::vector<std::size_t> digits(space.num_subsystems(), 0);
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
    cplx a = 1.0;
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = (k >> (n - 1 - q)) & 1U;
      digits[q] = bit;
      a *= qubits[q][bit];
    }
    amps[space.index_of(digits)] = a;
  }
  return StateVector(space, std::move(amps));
}

}  // namespace

// ----------------------------------------------------------------- structure

double Stage::duration() const {
  double d = 0.0;
  for (const Primitive& m : members) d = std::max(d, m.duration);
  return d;
}

bool Stage::exchanges_photon() const {
  return std::any_of(members.begin(), members.end(),
                     [](const Primitive& m) { return gatesim::exchanges_photon(m.kind); });
}

double PulseStep::duration() const {
  double d = 0.0;
  for (const Stage& s : stages) d += s.duration();
  return d;
}

std::string_view gate_name(GateKind gate) {
  switch (gate) {
    case GateKind::CP3:
      return "cp3";
    case GateKind::NCP:
      return "ncp";
    case GateKind::NTCNOT:
      return "ntcnot";
    case GateKind::Toffoli:
      return "toffoli";
  }
  return "?";
}

GateKind parse_gate(std::string_view name) {
  if (name == "cp3") return GateKind::CP3;
  if (name == "ncp") return GateKind::NCP;
  if (name == "ntcnot") return GateKind::NTCNOT;
  if (name == "toffoli") return GateKind::Toffoli;
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

double PulseSequence::total_duration() const {
  double d = 0.0;
  for (const PulseStep& s : steps) d += s.duration();
  return d;
}

std::size_t PulseSequence::primitive_count() const {
  std::size_t c = 0;
  for (const PulseStep& s : steps) {
    for (const Stage& st : s.stages) c += st.members.size();
  }
  return c;
}

void PulseSequence::validate() const {
  if (reg.num_qubits() != n) throw std::invalid_argument("register size does not match n");
  for (std::size_t s = 0; s < steps.size(); ++s) {
    if (steps[s].stages.empty()) throw std::invalid_argument("empty pulse step");
    for (const Stage& st : steps[s].stages) {
      std::vector<bool> used(reg.num_qubits(), false);
      std::size_t cavity_users = 0;
      std::size_t exchangers = 0;
      for (const Primitive& m : st.members) {
        check_role(m.kind, reg, m.slot);
        if (used[m.slot]) {
          throw std::invalid_argument("step " + std::to_string(s) + " uses slot " +
                                      std::to_string(m.slot) + " twice in one stage");
        }
        used[m.slot] = true;
        if (!(m.duration >= 0.0) || !std::isfinite(m.duration)) {
          throw std::invalid_argument("primitive duration must be finite and non-negative");
        }
        if (touches_cavity(m.kind)) ++cavity_users;
        if (exchanges_photon(m.kind)) ++exchangers;
      }
      if (exchangers > 0 && cavity_users > 1) {
        throw std::invalid_argument("step " + std::to_string(s) +
                                    " shares the cavity with a photon-exchanging primitive");
      }
    }
  }
}

std::size_t default_cavity_dim(Mode mode) { return mode == Mode::SimulatedFull ? 3 : 2; }

// ----------------------------------------------------------------- factories

PulseSequence ncp_sequence(std::size_t n, const DeviceParams& params, std::size_t cavity_dim) {
  require_n(n, 3, "ncp");
  params.validate();
  std::vector<QubitRole> roles(n, QubitRole::RamanAbsorber);
  roles.front() = QubitRole::RamanEmitter;
  roles.back() = QubitRole::DispersiveTarget;

  PulseSequence seq;
  seq.gate = n == 3 ? GateKind::CP3 : GateKind::NCP;
  seq.n = n;
  seq.params = params;
  seq.reg = Register(std::move(roles), cavity_dim);
  const Register& reg = seq.reg;
  const std::size_t target = n - 1;
  using K = PrimitiveKind;

  seq.steps.push_back(step_of(stage(params, reg, {{K::G1, 0}})));
  Stage open = stage(params, reg, {{K::R, 0}});
  append(open, uniform_stage(params, reg, K::Rdagger, 1, n - 2));
  seq.steps.push_back(step_of(std::move(open)));
  for (std::size_t q = 1; q <= n - 2; ++q) seq.steps.push_back(step_of(stage(params, reg, {{K::G2, q}})));
  seq.steps.push_back(PulseStep{{stage(params, reg, {{K::Rdagger, target}}),
                                 stage(params, reg, {{K::Gpi, target}}),
                                 stage(params, reg, {{K::R, target}})}});
  for (std::size_t q = n - 2; q >= 1; --q) seq.steps.push_back(step_of(stage(params, reg, {{K::G2, q}})));
  Stage close = stage(params, reg, {{K::Rdagger, 0}});
  append(close, uniform_stage(params, reg, K::R, 1, n - 2));
  seq.steps.push_back(step_of(std::move(close)));
  seq.steps.push_back(step_of(stage(params, reg, {{K::G1, 0}})));
  seq.validate();
  return seq;
}

PulseSequence cp3_sequence(const DeviceParams& params, std::size_t cavity_dim) {
  return ncp_sequence(3, params, cavity_dim);
}

PulseSequence ntcnot_sequence(std::size_t n, const DeviceParams& params, std::size_t cavity_dim) {
  require_n(n, 2, "ntcnot");
  params.validate();
  std::vector<QubitRole> roles(n, QubitRole::DispersiveTarget);
  roles.front() = QubitRole::RamanEmitter;

  PulseSequence seq;
  seq.gate = GateKind::NTCNOT;
  seq.n = n;
  seq.params = params;
  seq.reg = Register(std::move(roles), cavity_dim);
  const Register& reg = seq.reg;
  using K = PrimitiveKind;

  seq.steps.push_back(step_of(stage(params, reg, {{K::G1, 0}})));
  Stage open = stage(params, reg, {{K::R, 0}});
  append(open, uniform_stage(params, reg, K::Rdagger, 1, n - 1));
  seq.steps.push_back(step_of(std::move(open)));
  seq.steps.push_back(step_of(uniform_stage(params, reg, K::Gpi, 1, n - 1)));
  Stage close = stage(params, reg, {{K::Rdagger, 0}});
  append(close, uniform_stage(params, reg, K::R, 1, n - 1));
  seq.steps.push_back(step_of(std::move(close)));
  seq.steps.push_back(step_of(stage(params, reg, {{K::G1, 0}})));
  seq.validate();
  return seq;
}

PulseSequence toffoli_sequence(const DeviceParams& params, std::size_t cavity_dim) {
  PulseSequence seq = cp3_sequence(params, cavity_dim);
  seq.gate = GateKind::Toffoli;
  const PulseStep h = step_of(stage(params, seq.reg, {{PrimitiveKind::Hadamard, 2}}));
  seq.steps.insert(seq.steps.begin(), h);
  seq.steps.push_back(h);
  seq.validate();
  return seq;
}

PulseSequence make_sequence(GateKind gate, std::size_t n, const DeviceParams& params,
                            std::size_t cavity_dim) {
  switch (gate) {
    case GateKind::CP3:
      return cp3_sequence(params, cavity_dim);
    case GateKind::NCP:
      return ncp_sequence(n, params, cavity_dim);
    case GateKind::NTCNOT:
      return ntcnot_sequence(n, params, cavity_dim);
    case GateKind::Toffoli:
      return toffoli_sequence(params, cavity_dim);
  }
  throw std::invalid_argument("unknown gate");
}

// ----------------------------------------------------------------- composing

ComplexMatrix compose_columns(const PulseSequence& seq, const ComposeOptions& opts,
                              std::span<const std::size_t> columns) {
  const std::size_t dim = seq.reg.space.total_dim();
  ComplexMatrix m(dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] >= dim) throw std::out_of_range("column index out of range");
    m(columns[c], c) = 1.0;
  }
  Runner(seq, opts).run(m);
  return m;
}

UnitaryMatrix compose(const PulseSequence& seq, const ComposeOptions& opts) {
  const std::size_t dim = seq.reg.space.total_dim();
  ComplexMatrix m = ComplexMatrix::identity(dim);
  Runner(seq, opts).run(m);
  return UnitaryMatrix(seq.reg.space, std::move(m));
}

std::vector<TraceResult> trace(const PulseSequence& seq, const ComposeOptions& opts,
                               std::span<const StateVector> inputs,
                               std::size_t samples_per_segment) {
  const Runner runner(seq, opts);
  std::vector<TraceResult> out;
  out.reserve(inputs.size());
  for (const StateVector& in : inputs) out.push_back(runner.run(in, samples_per_segment));
  return out;
}

TraceResult trace(const PulseSequence& seq, const ComposeOptions& opts, const StateVector& input,
                  std::size_t samples_per_segment) {
  return Runner(seq, opts).run(input, samples_per_segment);
}

// -------------------------------------------------------------------- tables

std::vector<std::size_t> computational_indices(const Register& reg) {
  const std::size_t n = reg.num_qubits();
  std::vector<std::size_t> out;
  out.reserve(std::size_t{1} << n);
  std::vector<std::size_t> digits(reg.space.num_subsystems(), 0);
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
    for (std::size_t q = 0; q < n; ++q) digits[q] = (k >> (n - 1 - q)) & 1U;
    out.push_back(reg.space.index_of(digits));
  }
  return out;
}

std::string computational_label(std::size_t n, std::size_t k) {
  std::string s(n, '0');
  for (std::size_t q = 0; q < n; ++q) {
    if ((k >> (n - 1 - q)) & 1U) s[q] = '1';
  }
  return s;
}

std::vector<LabeledState> computational_basis(const Register& reg) {
  const std::size_t n = reg.num_qubits();
  std::vector<LabeledState> out;
  const auto idx = computational_indices(reg);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.push_back({computational_label(n, k), StateVector::basis(reg.space, idx[k])});
  }
  return out;
}

std::vector<LabeledState> control_target_basis(const Register& reg) {
  const std::size_t n = reg.num_qubits();
  const double s = 1.0 / std::sqrt(2.0);
  const std::array<cplx, 2> plus{s, s};
  const std::array<cplx, 2> minus{s, -s};
  std::vector<LabeledState> out;
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
    std::string label(n, '0');
    std::vector<std::array<cplx, 2>> qubits(n);
    for (std::size_t q = 0; q < n; ++q) {
      const bool bit = (k >> (n - 1 - q)) & 1U;
      if (q == 0) {
        label[q] = bit ? '1' : '0';
        qubits[q] = bit ? std::array<cplx, 2>{0.0, 1.0} : std::array<cplx, 2>{1.0, 0.0};
      } else {
        label[q] = bit ? '-' : '+';
        qubits[q] = bit ? minus : plus;
      }
    }
    out.push_back({label, product_state(reg, qubits)});
  }
  return out;
}

namespace {

TruthTable table_from(const std::vector<LabeledState>& basis,
                      const std::vector<StateVector>& outputs) {
  TruthTable t;
  for (const LabeledState& b : basis) t.labels.push_back(b.label);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    TruthRow row;
    row.input = basis[i].label;
    double kept = 0.0;
    for (const LabeledState& b : basis) {
      const cplx a = inner_product(b.state, outputs[i]);
      row.amplitudes.push_back(a);
      kept += std::norm(a);
    }
    row.leakage = std::max(0.0, outputs[i].norm() * outputs[i].norm() - kept);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

TruthTable truth_table(const UnitaryMatrix& u, const std::vector<LabeledState>& basis) {
  std::vector<StateVector> outputs;
  for (const LabeledState& b : basis) outputs.push_back(u.apply(b.state));
  return table_from(basis, outputs);
}

TruthTable truth_table(const PulseSequence& seq, const ComposeOptions& opts,
                       const std::vector<LabeledState>& basis) {
  std::vector<StateVector> inputs;
  for (const LabeledState& b : basis) inputs.push_back(b.state);
  std::vector<StateVector> outputs;
  for (auto& r : trace(seq, opts, inputs, 1)) outputs.push_back(std::move(r.final_state));
  return table_from(basis, outputs);
}

std::string truth_table_csv(const TruthTable& table) {
  std::ostringstream out;
  out.precision(12);
  out << "input";
  for (const std::string& l : table.labels) out << ",re_" << l << ",im_" << l;
  out << ",leakage\n";
  auto clean = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
  for (const TruthRow& row : table.rows) {
    out << row.input;
    for (const cplx& a : row.amplitudes) out << ',' << clean(a.real()) << ',' << clean(a.imag());
    out << ',' << clean(row.leakage) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json sequence_json(const PulseSequence& seq) {
  nlohmann::ordered_json j;
  j["gate"] = gate_name(seq.gate);
  j["n"] = seq.n;
  j["cavity_dim"] = seq.reg.cavity_dim();
  nlohmann::ordered_json roles = nlohmann::ordered_json::array();
  for (QubitRole r : seq.reg.roles) roles.push_back(role_name(r));
  j["roles"] = roles;
  j["step_count"] = seq.step_count();
  j["total_duration"] = seq.total_duration();
  nlohmann::ordered_json prims = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < seq.steps.size(); ++s) {
    for (std::size_t k = 0; k < seq.steps[s].stages.size(); ++k) {
      for (const Primitive& m : seq.steps[s].stages[k].members) {
        nlohmann::ordered_json p;
        p["kind"] = kind_name(m.kind);
        p["slot"] = m.slot;
        p["duration"] = m.duration;
        p["group"] = s;
        p["stage"] = k;
        prims.push_back(std::move(p));
      }
    }
  }
  j["primitives"] = prims;
  return j;
}

}  // namespace gatesim
