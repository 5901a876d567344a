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

#include "gatesim/hamiltonians.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gatesim {
namespace {

constexpr std::size_t kLevels = 4;

double per_slot(const std::vector<double>& values, std::size_t slot, const char* name) {
  if (values.empty()) throw std::invalid_argument(std::string(name) + " is empty");
  if (values.size() == 1) return values.front();
  if (slot >= values.size()) {
    throw std::out_of_range(std::string(name) + " has no entry for slot " + std::to_string(slot));
  }
  return values[slot];
}

void require_qudit_slot(const HilbertSpace& space, std::size_t slot) {
  if (slot >= space.num_qudits()) {
    throw std::out_of_range("slot " + std::to_string(slot) + " is not a qudit slot");
  }
  if (space.dim(slot) != kLevels) throw std::invalid_argument("qudit slots must have 4 levels");
}

// Local index on (qudit, cavity).
struct QuditCavity {
  std::size_t photons;
  std::size_t operator()(std::size_t level, std::size_t n) const { return level * photons + n; }
  std::size_t dim() const { return kLevels * photons; }
};

QuditCavity qudit_cavity(const HilbertSpace& space, std::size_t slot) {
  require_qudit_slot(space, slot);
  return {space.dim(space.cavity_slot())};
}

std::vector<std::size_t> with_cavity(const HilbertSpace& space, std::size_t slot) {
  return {slot, space.cavity_slot()};
}

// g (a^dag |2><3| + a |3><2|) + delta |3><3|
void add_jaynes_cummings(ComplexMatrix& m, const QuditCavity& idx, double g, double delta) {
  for (std::size_t n = 0; n < idx.photons; ++n) {
    m(idx(3, n), idx(3, n)) += delta;
    if (n + 1 < idx.photons) {
      const double c = g * std::sqrt(static_cast<double>(n + 1));
      m(idx(2, n + 1), idx(3, n)) += c;
      m(idx(3, n), idx(2, n + 1)) += c;
    }
  }
}

// omega (e^{-i phi} |3><j| + e^{i phi} |j><3|), identity on the cavity
void add_raman_drive(ComplexMatrix& m, const QuditCavity& idx, std::size_t j, double omega,
                     double phi) {
  const cplx down = std::polar(omega, -phi);
  for (std::size_t n = 0; n < idx.photons; ++n) {
    m(idx(3, n), idx(j, n)) += down;
    m(idx(j, n), idx(3, n)) += std::conj(down);
  }
}

// rate (|3><3| - |2><2|) a^dag a
ComplexMatrix dispersive_matrix(const QuditCavity& idx, double rate) {
  ComplexMatrix m(idx.dim(), idx.dim());
  for (std::size_t n = 0; n < idx.photons; ++n) {
    const double shift = rate * static_cast<double>(n);
    m(idx(3, n), idx(3, n)) = shift;
    m(idx(2, n), idx(2, n)) = -shift;
  }
  return m;
}

void require_raman_role(QubitRole role) {
  if (role == QubitRole::DispersiveTarget) {
    throw std::invalid_argument("Raman Hamiltonians need an emitter or absorber role");
  }
}

}  // namespace

std::string_view role_name(QubitRole role) {
  switch (role) {
    case QubitRole::RamanEmitter:
      return "raman_emitter";
    case QubitRole::RamanAbsorber:
      return "raman_absorber";
    case QubitRole::DispersiveTarget:
      return "dispersive_target";
  }
  return "unknown";
}

std::size_t raman_level(QubitRole role) {
  switch (role) {
    case QubitRole::RamanEmitter:
      return 1;
    case QubitRole::RamanAbsorber:
      return 0;
    case QubitRole::DispersiveTarget:
      break;
  }
  throw std::invalid_argument("dispersive targets have no Raman pair");
}

std::size_t resonant_level(QubitRole role) { return role == QubitRole::RamanAbsorber ? 0 : 1; }

// ---------------------------------------------------------------- DeviceParams

double DeviceParams::coupling(std::size_t slot) const { return per_slot(g, slot, "g"); }

double DeviceParams::target_detuning(std::size_t slot) const {
  return per_slot(delta_ck, slot, "delta_ck");
}

double DeviceParams::raman_rabi(std::size_t slot) const {
  return omega_raman.empty() ? coupling(slot) : per_slot(omega_raman, slot, "omega_raman");
}

double DeviceParams::detuning(std::size_t slot, QubitRole role) const {
  return role == QubitRole::DispersiveTarget ? target_detuning(slot) : delta_c;
}

void DeviceParams::validate() const {
  auto positive = [](double v, const std::string& name) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw std::invalid_argument(name + " must be positive and finite");
    }
  };
  if (g.empty()) throw std::invalid_argument("g must have at least one entry");
  if (delta_ck.empty()) throw std::invalid_argument("delta_ck must have at least one entry");
  for (double v : g) positive(v, "g");
  for (double v : delta_ck) positive(v, "delta_ck");
  for (double v : omega_raman) positive(v, "omega_raman");
  positive(delta_c, "delta_c");
  positive(omega_resonant, "omega_resonant");
  positive(gamma2_inv, "gamma2_inv");
  positive(quality_q, "quality_q");
  positive(nu_c, "nu_c");
  if (!std::isfinite(raman_drive_phase)) {
    throw std::invalid_argument("raman_drive_phase must be finite");
  }
}

std::vector<std::string> DeviceParams::regime_warnings(std::size_t num_slots) const {
  std::vector<std::string> out;
  for (std::size_t s = 0; s < num_slots; ++s) {
    const double gs = coupling(s);
    if (delta_c < 10.0 * gs) {
      std::ostringstream msg;
      msg << "slot " << s << ": delta_c/g = " << delta_c / gs << " < 10";
      out.push_back(msg.str());
    }
    if (target_detuning(s) < 10.0 * gs) {
      std::ostringstream msg;
      msg << "slot " << s << ": delta_ck/g = " << target_detuning(s) / gs << " < 10";
      out.push_back(msg.str());
    }
  }
  return out;
}

DeviceParams DeviceParams::uniform(double g, double delta_ratio, double omega_ratio) {
  DeviceParams p;
  p.g = {g};
  p.delta_c = delta_ratio * g;
  p.delta_ck = {delta_ratio * g};
  p.omega_raman = {};
  p.omega_resonant = omega_ratio * g;
  return p;
}

// -------------------------------------------------------------------- Register

Register::Register(std::vector<QubitRole> qubit_roles, std::size_t cavity_dim)
    : space(HilbertSpace::qudits_with_cavity(qubit_roles.size(), cavity_dim)),
      roles(std::move(qubit_roles)) {}

// -------------------------------------------------------------------- builders

LocalOperator raman_full_local(const DeviceParams& params, std::size_t slot, QubitRole role,
                               const HilbertSpace& space) {
  require_raman_role(role);
  const QuditCavity idx = qudit_cavity(space, slot);
  ComplexMatrix m(idx.dim(), idx.dim());
  add_jaynes_cummings(m, idx, params.coupling(slot), params.delta_c);
  add_raman_drive(m, idx, raman_level(role), params.raman_rabi(slot), params.raman_drive_phase);
  return {std::move(m), with_cavity(space, slot)};
}

HermitianOperator raman_full(const DeviceParams& params, std::size_t slot, QubitRole role,
                             const HilbertSpace& space) {
  const LocalOperator op = raman_full_local(params, slot, role, space);
  return embed_hermitian(op.matrix, space, op.slots);
}

LocalOperator raman_effective_local(const DeviceParams& params, std::size_t slot,
                                    QubitRole role, const HilbertSpace& space) {
  require_raman_role(role);
  const QuditCavity idx = qudit_cavity(space, slot);
  const std::size_t j = raman_level(role);
  const double g = params.coupling(slot);
  const double omega = params.raman_rabi(slot);
  const double delta = params.delta_c;
  const cplx coupling = -(omega * g / delta) * std::polar(1.0, -params.raman_drive_phase);

  ComplexMatrix m(idx.dim(), idx.dim());
  for (std::size_t n = 0; n < idx.photons; ++n) {
    m(idx(j, n), idx(j, n)) += -omega * omega / delta;
    m(idx(2, n), idx(2, n)) += -(g * g / delta) * static_cast<double>(n);
    if (n + 1 < idx.photons) {
      const cplx c = coupling * std::sqrt(static_cast<double>(n + 1));
      m(idx(2, n + 1), idx(j, n)) += c;
      m(idx(j, n), idx(2, n + 1)) += std::conj(c);
    }
  }
  return {std::move(m), with_cavity(space, slot)};
}

HermitianOperator raman_effective(const DeviceParams& params, std::size_t slot, QubitRole role,
                                  const HilbertSpace& space) {
  const LocalOperator op = raman_effective_local(params, slot, role, space);
  return embed_hermitian(op.matrix, space, op.slots);
}

LocalOperator dispersive_local(const DeviceParams& params, std::size_t slot,
                               const HilbertSpace& space) {
  const QuditCavity idx = qudit_cavity(space, slot);
  const double g = params.coupling(slot);
  return {dispersive_matrix(idx, g * g / params.target_detuning(slot)), with_cavity(space, slot)};
}

HermitianOperator dispersive(const DeviceParams& params, std::size_t slot,
                             const HilbertSpace& space) {
  const LocalOperator op = dispersive_local(params, slot, space);
  return embed_hermitian(op.matrix, space, op.slots);
}

LocalOperator resonant_drive_local(double omega, double phi, std::size_t j, std::size_t slot,
                                   const HilbertSpace& space) {
  if (j > 1) throw std::invalid_argument("resonant drive couples |0> or |1> to |2>");
  require_qudit_slot(space, slot);
  ComplexMatrix m(kLevels, kLevels);
  m(2, j) = std::polar(omega, -phi);
  m(j, 2) = std::polar(omega, phi);
  return {std::move(m), {slot}};
}

HermitianOperator resonant_drive(double omega, double phi, std::size_t j, std::size_t slot,
                                 const HilbertSpace& space) {
  const LocalOperator op = resonant_drive_local(omega, phi, j, slot, space);
  return embed_hermitian(op.matrix, space, op.slots);
}

LocalOperator cavity_coupling_local(const DeviceParams& params, std::size_t slot, QubitRole role,
                                    const HilbertSpace& space) {
  const QuditCavity idx = qudit_cavity(space, slot);
  ComplexMatrix m(idx.dim(), idx.dim());
  add_jaynes_cummings(m, idx, params.coupling(slot), params.detuning(slot, role));
  return {std::move(m), with_cavity(space, slot)};
}

LocalOperator raman_drive_local(const DeviceParams& params, std::size_t slot, QubitRole role,
                                const HilbertSpace& space) {
  require_raman_role(role);
  require_qudit_slot(space, slot);
  const QuditCavity idx{1};
  ComplexMatrix m(kLevels, kLevels);
  add_raman_drive(m, idx, raman_level(role), params.raman_rabi(slot), params.raman_drive_phase);
  return {std::move(m), {slot}};
}

LocalOperator idle_shift_local(const DeviceParams& params, std::size_t slot, QubitRole role,
                               const HilbertSpace& space) {
  const QuditCavity idx = qudit_cavity(space, slot);
  const double g = params.coupling(slot);
  return {dispersive_matrix(idx, g * g / params.detuning(slot, role)), with_cavity(space, slot)};
}

}  // namespace gatesim
