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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gatesim/primitives.hpp"
#include "gatesim/verification.hpp"
#include "test_util.hpp"

namespace gatesim {
namespace {

constexpr double kPi = std::numbers::pi;

DeviceParams ratio_params(double delta_ratio) { return DeviceParams::uniform(1.0, delta_ratio, 10.0); }

std::size_t idx(const Register& reg, std::size_t level, std::size_t photons) {
  const std::size_t d[] = {level, photons};
  return reg.space.index_of(d);
}

// Levels 0..2 with at most one photon, minus |j,1> where the flop is undefined.
std::vector<std::size_t> flop_domain(const Register& reg, std::size_t j) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < 3; ++l) {
    for (std::size_t n = 0; n < 2; ++n) {
      if (!(l == j && n == 1)) out.push_back(idx(reg, l, n));
    }
  }
  return out;
}

std::vector<std::size_t> all_indices(const Register& reg) {
  std::vector<std::size_t> out(reg.space.total_dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

TEST(Primitives, Names) {
  EXPECT_EQ(kind_name(PrimitiveKind::Gpi), "Gpi");
  EXPECT_EQ(mode_name(Mode::SimulatedFull), "simulated_full");
  EXPECT_EQ(parse_mode("simulated_effective"), Mode::SimulatedEffective);
  EXPECT_THROW(parse_mode("bogus"), std::invalid_argument);
  EXPECT_TRUE(exchanges_photon(PrimitiveKind::G1));
  EXPECT_TRUE(exchanges_photon(PrimitiveKind::G2));
  EXPECT_FALSE(exchanges_photon(PrimitiveKind::Gpi));
  EXPECT_FALSE(exchanges_photon(PrimitiveKind::R));
}

TEST(Primitives, Durations) {
  DeviceParams p = DeviceParams::uniform(2.0, 10.0, 7.0);
  p.delta_ck = {20.0, 30.0};
  p.g = {2.0, 3.0};
  EXPECT_DOUBLE_EQ(primitive_duration(PrimitiveKind::G1, p, 0), kPi * 20.0 / (2.0 * 4.0));
  EXPECT_DOUBLE_EQ(primitive_duration(PrimitiveKind::G2, p, 1), kPi * 20.0 / (2.0 * 9.0));
  EXPECT_DOUBLE_EQ(primitive_duration(PrimitiveKind::Gpi, p, 1), kPi * 30.0 / 9.0);
  EXPECT_DOUBLE_EQ(primitive_duration(PrimitiveKind::R, p, 0), kPi / 28.0);
  EXPECT_DOUBLE_EQ(primitive_duration(PrimitiveKind::Rdagger, p, 1), kPi / 28.0);
  EXPECT_DOUBLE_EQ(primitive_duration(PrimitiveKind::Hadamard, p, 0), 0.0);
}

TEST(Primitives, RoleChecks) {
  const Register reg({QubitRole::RamanEmitter, QubitRole::RamanAbsorber,
                      QubitRole::DispersiveTarget},
                     2);
  const DeviceParams p = ratio_params(10.0);
  EXPECT_NO_THROW(make_primitive(PrimitiveKind::G1, p, reg, 0));
  EXPECT_THROW(make_primitive(PrimitiveKind::G1, p, reg, 1), std::invalid_argument);
  EXPECT_THROW(make_primitive(PrimitiveKind::G2, p, reg, 0), std::invalid_argument);
  EXPECT_THROW(make_primitive(PrimitiveKind::Gpi, p, reg, 0), std::invalid_argument);
  EXPECT_NO_THROW(make_primitive(PrimitiveKind::R, p, reg, 1));
  EXPECT_THROW(make_primitive(PrimitiveKind::R, p, reg, 3), std::out_of_range);
  const Primitive h = make_primitive(PrimitiveKind::Hadamard, p, reg, 2);
  EXPECT_THROW(hamiltonian_local(h, p, reg, Mode::SimulatedFull), std::invalid_argument);
}

TEST(Analytic, G1ClosedForm) {
  const Register reg({QubitRole::RamanEmitter}, 2);
  const UnitaryMatrix u = g1(ratio_params(10.0), reg, 0, Mode::Analytic);
  const std::size_t j0 = idx(reg, 1, 0), t1 = idx(reg, 2, 1);
  EXPECT_EQ(u(t1, j0), cplx(1.0));
  EXPECT_EQ(u(j0, t1), cplx(1.0));
  EXPECT_EQ(u(j0, j0), cplx(0.0));
  for (std::size_t i = 0; i < reg.space.total_dim(); ++i) {
    if (i != j0 && i != t1) {
      EXPECT_EQ(u(i, i), cplx(1.0)) << i;
    }
  }
  EXPECT_LT(u.unitarity_error(), 1e-15);
}

TEST(Analytic, G2FlopsLevelZero) {
  const Register reg({QubitRole::RamanAbsorber}, 2);
  const UnitaryMatrix u = g2(ratio_params(10.0), reg, 0, Mode::Analytic);
  EXPECT_EQ(u(idx(reg, 2, 1), idx(reg, 0, 0)), cplx(1.0));
  EXPECT_EQ(u(idx(reg, 0, 0), idx(reg, 2, 1)), cplx(1.0));
  EXPECT_EQ(u(idx(reg, 1, 0), idx(reg, 1, 0)), cplx(1.0));
}

TEST(Analytic, GpiSignsOnUpperLevels) {
  const Register reg({QubitRole::DispersiveTarget}, 3);
  const UnitaryMatrix u = g_pi(ratio_params(10.0), reg, 0, Mode::Analytic);
  for (std::size_t l = 0; l < 4; ++l) {
    for (std::size_t n = 0; n < 3; ++n) {
      const double expected = (l >= 2 && n % 2 == 1) ? -1.0 : 1.0;
      EXPECT_EQ(u(idx(reg, l, n), idx(reg, l, n)), cplx(expected));
    }
  }
}

TEST(Analytic, ResonantPulses) {
  const Register reg({QubitRole::RamanAbsorber, QubitRole::DispersiveTarget}, 2);
  const DeviceParams p = ratio_params(10.0);
  // Absorber uses level 0, target level 1.
  const UnitaryMatrix r = r_pulse(p, reg, 0, false, Mode::Analytic);
  const UnitaryMatrix rd = r_pulse(p, reg, 1, true, Mode::Analytic);
  auto at = [&](std::size_t a, std::size_t b) {
    const std::size_t d[] = {a, b, 0};
    return reg.space.index_of(d);
  };
  EXPECT_EQ(r(at(0, 0), at(2, 0)), cplx(1.0));   // |2> -> |j>
  EXPECT_EQ(r(at(2, 0), at(0, 0)), cplx(-1.0));  // |j> -> -|2>
  EXPECT_EQ(rd(at(0, 2), at(0, 1)), cplx(1.0));   // |j> -> |2>
  EXPECT_EQ(rd(at(0, 1), at(0, 2)), cplx(-1.0));  // |2> -> -|j>
  EXPECT_LT(max_abs_diff((r_pulse(p, reg, 1, false, Mode::Analytic) * rd).matrix(),
                         ComplexMatrix::identity(reg.space.total_dim())),
            1e-15);
}

TEST(Analytic, HadamardOnComputationalLevels) {
  const Register reg({QubitRole::DispersiveTarget}, 2);
  const UnitaryMatrix h = hadamard(reg, 0);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(h(idx(reg, 0, 0), idx(reg, 1, 0)).real(), s, 1e-15);
  EXPECT_NEAR(h(idx(reg, 1, 0), idx(reg, 1, 0)).real(), -s, 1e-15);
  EXPECT_EQ(h(idx(reg, 2, 1), idx(reg, 2, 1)), cplx(1.0));
  EXPECT_LT(max_abs_diff((h * h).matrix(), ComplexMatrix::identity(8)), 1e-15);
}

TEST(Effective, MatchesAnalyticExactlyOnDomain) {
  for (double ratio : {10.0, 17.0, 40.0}) {
    const DeviceParams p = ratio_params(ratio);
    const Register em({QubitRole::RamanEmitter}, 2);
    const Register ab({QubitRole::RamanAbsorber}, 2);
    const Register tg({QubitRole::DispersiveTarget}, 2);
    EXPECT_TRUE(exact_match(g1(p, em, 0, Mode::Analytic), g1(p, em, 0, Mode::SimulatedEffective),
                            flop_domain(em, 1), 1e-10));
    EXPECT_TRUE(exact_match(g2(p, ab, 0, Mode::Analytic), g2(p, ab, 0, Mode::SimulatedEffective),
                            flop_domain(ab, 0), 1e-10));
    EXPECT_TRUE(exact_match(g_pi(p, tg, 0, Mode::Analytic),
                            g_pi(p, tg, 0, Mode::SimulatedEffective), all_indices(tg), 1e-10));
    for (bool dagger : {false, true}) {
      for (const Register* reg : {&em, &ab, &tg}) {
        EXPECT_TRUE(exact_match(r_pulse(p, *reg, 0, dagger, Mode::Analytic),
                                r_pulse(p, *reg, 0, dagger, Mode::SimulatedFull),
                                all_indices(*reg), 1e-10));
      }
    }
  }
}

TEST(Effective, ZeroDrivePhaseFlipsFlopSign) {
  DeviceParams p = ratio_params(10.0);
  p.raman_drive_phase = 0.0;
  const Register em({QubitRole::RamanEmitter}, 2);
  const UnitaryMatrix u = g1(p, em, 0, Mode::SimulatedEffective);
  EXPECT_NEAR(u(idx(em, 2, 1), idx(em, 1, 0)).real(), -1.0, 1e-10);
  EXPECT_NEAR(u(idx(em, 1, 0), idx(em, 2, 1)).real(), -1.0, 1e-10);
}

TEST(Primitives, UnitaryInEveryModeForRandomParameters) {
  auto& gen = testing::rng();
  std::uniform_real_distribution<double> ratio(8.0, 60.0), g(0.2, 3.0), om(0.2, 3.0);
  const Register reg({QubitRole::RamanEmitter, QubitRole::RamanAbsorber,
                      QubitRole::DispersiveTarget},
                     3);
  for (int trial = 0; trial < 6; ++trial) {
    DeviceParams p = DeviceParams::uniform(g(gen), ratio(gen), ratio(gen));
    p.omega_raman = {om(gen), om(gen), om(gen)};
    p.raman_drive_phase = ratio(gen);
    for (Mode mode : {Mode::Analytic, Mode::SimulatedEffective, Mode::SimulatedFull}) {
      EXPECT_LT(g1(p, reg, 0, mode).unitarity_error(), 1e-10);
      EXPECT_LT(g2(p, reg, 1, mode).unitarity_error(), 1e-10);
      EXPECT_LT(g_pi(p, reg, 2, mode).unitarity_error(), 1e-10);
      EXPECT_LT(r_pulse(p, reg, 2, true, mode).unitarity_error(), 1e-10);
    }
  }
}

TEST(Full, G1FidelityAboveThresholdAndImprovesWithDetuning) {
  double previous = 0.0;
  for (double ratio : {10.0, 20.0, 50.0}) {
    const double f = g1_fidelity(ratio_params(ratio), Mode::SimulatedFull, 3);
    EXPECT_GE(f, 0.95) << ratio;
    EXPECT_GT(f, previous) << ratio;
    previous = f;
  }
  EXPECT_NEAR(g1_fidelity(ratio_params(10.0), Mode::SimulatedEffective, 3), 1.0, 1e-10);
}

TEST(Full, G1PeakLevelThreeMatchesLambdaSystem) {
  // Resonant Raman with Omega = g: |3> couples to the bright state with
  // strength sqrt(2) g, so its peak population is 4 g^2 / (Delta^2 + 8 g^2).
  for (double ratio : {10.0, 20.0, 50.0}) {
    const double oracle = 4.0 / (ratio * ratio + 8.0);
    EXPECT_NEAR(g1_peak_level3(ratio_params(ratio), 3), oracle, 1e-6 * oracle + 1e-9) << ratio;
  }
  EXPECT_LE(g1_peak_level3(ratio_params(10.0), 3), 0.05);
}

TEST(Full, GpiMatchesAnalyticOnSinglePhotonSector) {
  // Off-resonant coupling: phases approach (-1)^n on |2> as Delta/g grows.
  const Register tg({QubitRole::DispersiveTarget}, 2);
  double previous = 0.0;
  for (double ratio : {10.0, 30.0, 90.0}) {
    const DeviceParams p = ratio_params(ratio);
    const std::vector<std::size_t> dom = {idx(tg, 0, 0), idx(tg, 1, 0), idx(tg, 2, 0),
                                          idx(tg, 0, 1), idx(tg, 2, 1)};
    const double f = process_fidelity(g_pi(p, tg, 0, Mode::Analytic),
                                      g_pi(p, tg, 0, Mode::SimulatedFull), dom);
    EXPECT_GT(f, previous);
    previous = f;
  }
  EXPECT_GT(previous, 0.99);
}

}  // namespace
}  // namespace gatesim
