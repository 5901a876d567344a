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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gatesim/budget.hpp"
#include "gatesim/sequencer.hpp"
#include "gatesim/verification.hpp"
#include "test_util.hpp"

namespace gatesim {
namespace {

DeviceParams unit_params() { return DeviceParams::uniform(1.0, 10.0, 10.0); }

// Product of embedded analytic primitive matrices, built without the Runner.
ComplexMatrix reference_compose(const PulseSequence& seq) {
  const std::size_t dim = seq.reg.space.total_dim();
  ComplexMatrix u = ComplexMatrix::identity(dim);
  for (const PulseStep& step : seq.steps) {
    for (const Stage& st : step.stages) {
      for (const Primitive& m : st.members) {
        const LocalOperator op = analytic_local(m, seq.reg);
        u = tensor_embed(op.matrix, seq.reg.space, op.slots) * u;
      }
    }
  }
  return u;
}

std::vector<PulseSequence> analytic_gates() {
  const DeviceParams p = unit_params();
  return {cp3_sequence(p), ncp_sequence(4, p), ntcnot_sequence(2, p), ntcnot_sequence(3, p),
          ntcnot_sequence(4, p), toffoli_sequence(p)};
}

TEST(Sequences, GateNames) {
  EXPECT_EQ(parse_gate("toffoli"), GateKind::Toffoli);
  EXPECT_EQ(gate_name(GateKind::NTCNOT), "ntcnot");
  EXPECT_THROW(parse_gate("swap"), std::invalid_argument);
}

TEST(Sequences, Cp3Layout) {
  const DeviceParams p = unit_params();
  const PulseSequence s = cp3_sequence(p);
  EXPECT_EQ(s.step_count(), 7u);
  EXPECT_EQ(s.primitive_count(), 11u);
  EXPECT_EQ(s.reg.roles, (std::vector<QubitRole>{QubitRole::RamanEmitter, QubitRole::RamanAbsorber,
                                                 QubitRole::DispersiveTarget}));
  EXPECT_NEAR(s.total_duration(), time_cp3(p), 1e-12 * time_cp3(p));
  // The target block is one counted step of three ordered stages.
  ASSERT_EQ(s.steps[3].stages.size(), 3u);
  EXPECT_EQ(s.steps[3].stages[0].members[0].kind, PrimitiveKind::Rdagger);
  EXPECT_EQ(s.steps[3].stages[1].members[0].kind, PrimitiveKind::Gpi);
  EXPECT_EQ(s.steps[3].stages[2].members[0].kind, PrimitiveKind::R);
}

TEST(Sequences, NcpStepCountIsTwoNPlusOne) {
  for (std::size_t n = 3; n <= 7; ++n) {
    const PulseSequence s = ncp_sequence(n, unit_params());
    EXPECT_EQ(s.step_count(), 2 * n + 1);
    EXPECT_EQ(static_cast<long>(s.step_count()), step_count(Scheme::NCP, n, Convention::Grouped));
  }
  EXPECT_THROW(ncp_sequence(2, unit_params()), std::invalid_argument);
}

TEST(Sequences, NtcnotHasFiveStepsAndConstantDuration) {
  const double d2 = ntcnot_sequence(2, unit_params()).total_duration();
  for (std::size_t n = 2; n <= 6; ++n) {
    const PulseSequence s = ntcnot_sequence(n, unit_params());
    EXPECT_EQ(s.step_count(), 5u);
    EXPECT_DOUBLE_EQ(s.total_duration(), d2);
  }
  EXPECT_NEAR(d2, time_ntcnot(unit_params()), 1e-12);
}

TEST(Sequences, ToffoliWrapsCp3InHadamards) {
  const PulseSequence s = toffoli_sequence(unit_params());
  EXPECT_EQ(s.step_count(), 9u);
  EXPECT_EQ(s.steps.front().stages[0].members[0].kind, PrimitiveKind::Hadamard);
  EXPECT_EQ(s.steps.back().stages[0].members[0].slot, 2u);
}

TEST(Sequences, StageSharingRule) {
  PulseSequence s = cp3_sequence(unit_params());
  // A photon exchanger plus a dispersive member in one stage is rejected.
  Stage bad = s.steps[0].stages[0];
  bad.members.push_back(make_primitive(PrimitiveKind::Gpi, s.params, s.reg, 2));
  s.steps[0].stages[0] = bad;
  EXPECT_THROW(s.validate(), std::invalid_argument);

  // Several dispersive members may share the cavity.
  PulseSequence t = ntcnot_sequence(4, unit_params());
  EXPECT_EQ(t.steps[2].stages[0].members.size(), 3u);
  EXPECT_NO_THROW(t.validate());

  // A slot may appear once per stage.
  PulseSequence u = ntcnot_sequence(3, unit_params());
  u.steps[2].stages[0].members.push_back(u.steps[2].stages[0].members[0]);
  EXPECT_THROW(u.validate(), std::invalid_argument);
}

TEST(Compose, AnalyticMatchesReferenceProduct) {
  for (const PulseSequence& s : analytic_gates()) {
    const UnitaryMatrix u = compose(s, {Mode::Analytic});
    EXPECT_LT(max_abs_diff(u.matrix(), reference_compose(s)), 1e-12) << gate_name(s.gate) << s.n;
  }
}

TEST(Compose, UnitaryInAllModes) {
  const DeviceParams p = unit_params();
  for (Mode mode : {Mode::Analytic, Mode::SimulatedEffective, Mode::SimulatedFull}) {
    const std::size_t cav = default_cavity_dim(mode);
    EXPECT_LT(compose(cp3_sequence(p, cav), {mode}).unitarity_error(), 1e-10);
    EXPECT_LT(compose(ntcnot_sequence(3, p, cav), {mode}).unitarity_error(), 1e-10);
  }
  EXPECT_LT(compose(cp3_sequence(p, 3), {Mode::SimulatedFull, false, true}).unitarity_error(),
            1e-10);
  EXPECT_LT(compose(cp3_sequence(p), {Mode::SimulatedEffective, true}).unitarity_error(), 1e-10);
}

TEST(Compose, ColumnsMatchFullUnitary) {
  const PulseSequence s = cp3_sequence(unit_params(), 3);
  for (Mode mode : {Mode::Analytic, Mode::SimulatedFull}) {
    const UnitaryMatrix u = compose(s, {mode});
    const std::vector<std::size_t> cols = {0, 5, 17, 101, 191};
    const ComplexMatrix c = compose_columns(s, {mode}, cols);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      for (std::size_t r = 0; r < u.matrix().rows(); ++r) {
        EXPECT_LT(std::abs(c(r, k) - u(r, cols[k])), 1e-12);
      }
    }
  }
}

TEST(Compose, EffectiveEqualsAnalyticOnComputationalInputs) {
  for (const PulseSequence& s : analytic_gates()) {
    const auto idx = computational_indices(s.reg);
    const ComplexMatrix a = compose_columns(s, {Mode::Analytic}, idx);
    const ComplexMatrix e = compose_columns(s, {Mode::SimulatedEffective}, idx);
    EXPECT_LT(max_abs_diff(a, e), 1e-10) << gate_name(s.gate) << s.n;
  }
}

TEST(Trace, CavityRestoredAndUpperLevelsEmptyInAnalyticMode) {
  for (const PulseSequence& s : analytic_gates()) {
    const auto basis = computational_basis(s.reg);
    for (const LabeledState& in : basis) {
      const TraceResult r = trace(s, {Mode::Analytic}, in.state);
      EXPECT_EQ(r.max_level3, 0.0);
      EXPECT_EQ(r.after_step.size(), s.step_count());
      const StateVector& out = r.final_state;
      EXPECT_NEAR(out.population(s.reg.cavity_slot(), 0), 1.0, 1e-12) << in.label;
      for (std::size_t q = 0; q < s.n; ++q) {
        EXPECT_NEAR(out.population(q, 2), 0.0, 1e-12);
        EXPECT_EQ(out.population(q, 3), 0.0);
      }
    }
  }
}

TEST(Trace, FinalStateMatchesComposedUnitaryForRandomInputs) {
  auto& gen = testing::rng();
  const DeviceParams p = unit_params();
  const PulseSequence s = cp3_sequence(p, 3);
  const auto idx = computational_indices(s.reg);
  for (Mode mode : {Mode::Analytic, Mode::SimulatedEffective, Mode::SimulatedFull}) {
    const UnitaryMatrix u = compose(s, {mode});
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<cplx> amps(s.reg.space.total_dim());
      double nrm = 0.0;
      for (std::size_t i : idx) {
        amps[i] = testing::random_cplx(gen);
        nrm += std::norm(amps[i]);
      }
      for (cplx& a : amps) a /= std::sqrt(nrm);
      const StateVector in(s.reg.space, amps);
      const StateVector expected = u.apply(in);
      const StateVector got = trace(s, {mode}, in).final_state;
      EXPECT_NEAR(std::abs(inner_product(expected, got)), 1.0, 1e-10);
    }
  }
}

TEST(Trace, AnalyticFlopOutsideDomainIsReported) {
  const PulseSequence s = cp3_sequence(unit_params());
  const std::size_t d[] = {1, 0, 0, 1};  // emitter in |1> with a photon already present
  EXPECT_THROW(trace(s, {Mode::Analytic}, StateVector::basis(s.reg.space, d)), std::logic_error);
}

TEST(Tables, ComputationalOrdering) {
  const Register reg({QubitRole::RamanEmitter, QubitRole::RamanAbsorber,
                      QubitRole::DispersiveTarget},
                     2);
  const auto idx = computational_indices(reg);
  ASSERT_EQ(idx.size(), 8u);
  const std::size_t d011[] = {0, 1, 1, 0};
  EXPECT_EQ(idx[3], reg.space.index_of(d011));
  EXPECT_EQ(computational_label(3, 3), "011");
  EXPECT_EQ(computational_label(4, 8), "1000");
  const auto ct = control_target_basis(reg);
  ASSERT_EQ(ct.size(), 8u);
  EXPECT_EQ(ct.front().label, "0++");
  EXPECT_EQ(ct.back().label, "1--");
}

TEST(Tables, Cp3TruthTableCsv) {
  const PulseSequence s = cp3_sequence(unit_params());
  const TruthTable t = truth_table(s, {Mode::Analytic}, computational_basis(s.reg));
  ASSERT_EQ(t.rows.size(), 8u);
  EXPECT_NEAR(t.rows[7].amplitudes[7].real(), -1.0, 1e-12);
  EXPECT_NEAR(t.rows[6].amplitudes[6].real(), 1.0, 1e-12);
  const std::string csv = truth_table_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "input,re_000,im_000,re_001,im_001,re_010,im_010,re_011,im_011,re_100,im_100,"
            "re_101,im_101,re_110,im_110,re_111,im_111,leakage");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  // The same table from the composed unitary.
  const TruthTable t2 = truth_table(compose(s, {Mode::Analytic}), computational_basis(s.reg));
  EXPECT_EQ(truth_table_csv(t2), csv);
}

TEST(Tables, SequenceJsonListsEveryPrimitive) {
  const PulseSequence s = ncp_sequence(5, unit_params());
  const auto j = sequence_json(s);
  EXPECT_EQ(j["primitives"].size(), s.primitive_count());
  EXPECT_EQ(j["step_count"], 11);
  EXPECT_EQ(j["primitives"][0]["kind"], "G1");
  EXPECT_EQ(j["roles"][4], "dispersive_target");
}

}  // namespace
}  // namespace gatesim
