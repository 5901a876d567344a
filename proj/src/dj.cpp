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

#include "gatesim/dj.hpp"

#include <cmath>
#include <stdexcept>

#include "gatesim/sequencer.hpp"

namespace gatesim {
namespace {

LocalOperator rotation(bool first) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(0, 0) = 0.0;
  m(1, 1) = 0.0;
  if (first) {  // |0> -> |1>, |1> -> -|0>
    m(1, 0) = 1.0;
    m(0, 1) = -1.0;
  } else {  // |0> -> -|1>, |1> -> |0>
    m(1, 0) = -1.0;
    m(0, 1) = 1.0;
  }
  return {std::move(m), {0}};
}

}  // namespace

OracleVariant oracle_variant(int id) {
  switch (id) {
    case 1:
      return {1, 0, 0};
    case 2:
      return {2, 1, 1};
    case 3:
      return {3, 0, 1};
    case 4:
      return {4, 1, 0};
    default:
      break;
  }
  throw std::invalid_argument("oracle variant must be 1..4, got " + std::to_string(id));
}

Register dj_register(std::size_t cavity_dim) {
  return Register({QubitRole::RamanEmitter, QubitRole::DispersiveTarget}, cavity_dim);
}

StateVector dj_input(const Register& reg) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cplx> amps(reg.space.total_dim());
  const std::size_t zero_one[] = {0, 1, 0};
  const std::size_t one_one[] = {1, 1, 0};
  amps[reg.space.index_of(zero_one)] = s;
  amps[reg.space.index_of(one_one)] = s;
  return StateVector(reg.space, std::move(amps));
}

StateVector uf_apply(int variant, const StateVector& state, const DeviceParams& params, Mode mode) {
  const OracleVariant v = oracle_variant(variant);
  if (v.id == 1) return state;

  const PulseSequence cnot_seq = ntcnot_sequence(2, params, state.space().dim(2));
  if (!(cnot_seq.reg.space == state.space())) {
    throw std::invalid_argument("state does not live on the two-qubit register");
  }
  const UnitaryMatrix cnot = compose(cnot_seq, {mode, false});
  const HilbertSpace& space = state.space();
  StateVector out = state;
  auto apply_cnot = [&] { out = cnot.apply(out); };
  auto rotate = [&](bool first) { apply_local(rotation(first), space, out.mutable_amplitudes()); };

  switch (v.id) {
    case 2:
      apply_cnot();
      rotate(true);
      apply_cnot();
      rotate(false);
      break;
    case 3:
      apply_cnot();
      break;
    case 4:
      rotate(true);
      apply_cnot();
      rotate(false);
      break;
    default:
      break;
  }
  return out;
}

DjResult run_dj(int variant, const DeviceParams& params, Mode mode) {
  const OracleVariant v = oracle_variant(variant);
  const Register reg = dj_register(2);
  DjResult r;
  r.variant = v.id;
  r.expected_constant = v.constant();

  StateVector state = uf_apply(v.id, dj_input(reg), params, mode);
  r.oracle_invocations = 1;

  // Reduced state of the query qubit over the computational block.
  cplx m[2][2] = {};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const std::size_t d[] = {a, b, 0};
      m[a][b] = state.amplitude(d);
    }
  }
  cplx rho[2][2] = {};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t b = 0; b < 2; ++b) rho[a][c] += m[a][b] * std::conj(m[c][b]);
    }
  }
  r.query_purity = std::norm(rho[0][0]) + std::norm(rho[1][1]) + 2.0 * std::norm(rho[0][1]);

  state = hadamard(reg, 0).apply(state);
  r.probability_zero = state.population(0, 0);
  r.constant = r.probability_zero > 0.5;
  r.probability = r.constant ? r.probability_zero : state.population(0, 1);
  return r;
}

nlohmann::ordered_json dj_json(const DjResult& r, Mode mode) {
  nlohmann::ordered_json j;
  j["variant"] = r.variant;
  j["mode"] = mode_name(mode);
  j["classification"] = r.constant ? "constant" : "balanced";
  j["expected"] = r.expected_constant ? "constant" : "balanced";
  j["correct"] = r.correct();
  j["probability"] = r.probability;
  j["oracle_invocations"] = r.oracle_invocations;
  j["query_purity"] = r.query_purity;
  return j;
}

}  // namespace gatesim
