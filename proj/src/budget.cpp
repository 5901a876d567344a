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

#include "gatesim/budget.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gatesim/primitives.hpp"

namespace gatesim {
namespace {

using std::numbers::pi;

double raman_time(const DeviceParams& p, std::size_t slot) {
  return primitive_duration(PrimitiveKind::G1, p, slot);
}
double dispersive_time(const DeviceParams& p, std::size_t slot) {
  return primitive_duration(PrimitiveKind::Gpi, p, slot);
}
double resonant_time(const DeviceParams& p) {
  return primitive_duration(PrimitiveKind::R, p, 0);
}

void positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
  }
}

double require(const std::optional<double>& v, const char* name, QubitType t) {
  if (!v) {
    throw std::invalid_argument(std::string(name) + " is required for " +
                                std::string(qubit_type_name(t)) + " qubits");
  }
  return *v;
}

}  // namespace

double time_cp3(const DeviceParams& params) {
  params.validate();
  return 2.0 * raman_time(params, 0) + 2.0 * raman_time(params, 1) + dispersive_time(params, 2) +
         4.0 * resonant_time(params);
}

double time_ncp(const DeviceParams& params, std::size_t n) {
  if (n < 3) throw std::out_of_range("ncp needs n >= 3");
  params.validate();
  double absorbers = 0.0;
  for (std::size_t q = 1; q + 1 < n; ++q) absorbers += raman_time(params, q);
  return 2.0 * raman_time(params, 0) + 2.0 * absorbers + dispersive_time(params, n - 1) +
         4.0 * resonant_time(params);
}

double time_ntcnot(const DeviceParams& params, std::size_t n) {
  if (n < 2) throw std::out_of_range("ntcnot needs n >= 2");
  params.validate();
  double slowest = 0.0;
  for (std::size_t q = 1; q < n; ++q) slowest = std::max(slowest, dispersive_time(params, q));
  return 2.0 * raman_time(params, 0) + 2.0 * resonant_time(params) + slowest;
}

double cavity_lifetime(double quality_q, double nu_c) {
  positive(quality_q, "quality factor");
  positive(nu_c, "cavity frequency");
  return quality_q / (2.0 * pi * nu_c);
}

void SquidParams::validate() const {
  positive(junction_capacitance, "junction_capacitance");
  positive(loop_inductance, "loop_inductance");
  positive(damping_resistance, "damping_resistance");
  positive(beta_l, "beta_l");
  positive(external_flux, "external_flux");
  positive(phi32, "phi32");
  positive(loop_area, "loop_area");
  positive(cavity_volume, "cavity_volume");
  positive(cavity_frequency, "cavity_frequency");
  positive(antinode_factor, "antinode_factor");
  if (antinode_factor > 1.0) throw std::invalid_argument("antinode_factor must be at most 1");
}

double squid_coupling(const SquidParams& sq) {
  sq.validate();
  const double omega_c = 2.0 * pi * sq.cavity_frequency;
  const double field_per_photon_scale = std::sqrt(omega_c / (2.0 * constants::mu0 * constants::hbar));
  const double field_mode = constants::mu0 * std::sqrt(2.0 / sq.cavity_volume) * sq.antinode_factor;
  return (1.0 / sq.loop_inductance) * field_per_photon_scale * sq.phi32 * constants::flux_quantum *
         field_mode * sq.loop_area;
}

nlohmann::ordered_json squid_coupling_json(const SquidParams& sq) {
  const double omega_c = 2.0 * pi * sq.cavity_frequency;
  nlohmann::ordered_json j;
  j["g"] = squid_coupling(sq);
  j["omega_c"] = omega_c;
  j["flux_quantum"] = constants::flux_quantum;
  j["mode_factor"] = std::sqrt(omega_c / (2.0 * constants::mu0 * constants::hbar));
  j["field_factor"] = constants::mu0 * std::sqrt(2.0 / sq.cavity_volume) * sq.antinode_factor;
  j["loop_inductance"] = sq.loop_inductance;
  j["phi32"] = sq.phi32;
  j["loop_area"] = sq.loop_area;
  j["cavity_volume"] = sq.cavity_volume;
  j["antinode_factor"] = sq.antinode_factor;
  return j;
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::NCP:
      return "ncp";
    case Scheme::NTCNOT:
      return "ntcnot";
    case Scheme::Toffoli:
      return "toffoli";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "ncp" || name == "cp3") return Scheme::NCP;
  if (name == "ntcnot") return Scheme::NTCNOT;
  if (name == "toffoli") return Scheme::Toffoli;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

long step_count(Scheme scheme, std::size_t n, Convention convention) {
  const long k = static_cast<long>(n);
  switch (scheme) {
    case Scheme::NCP:
      if (n < 3) throw std::out_of_range("ncp needs n >= 3");
      return convention == Convention::Paper ? 4 * k - 5 : 2 * k + 1;
    case Scheme::NTCNOT:
      if (n < 2) throw std::out_of_range("ntcnot needs n >= 2");
      return 5;
    case Scheme::Toffoli:
      if (n != 3) throw std::out_of_range("toffoli is a three-qubit gate");
      return 9;
  }
  throw std::invalid_argument("unknown scheme");
}

std::optional<long> conventional_steps(Scheme scheme, std::size_t n) {
  switch (scheme) {
    case Scheme::NCP:
      if (n < 3) throw std::out_of_range("ncp needs n >= 3");
      return 22 * static_cast<long>(n) - 75;
    case Scheme::Toffoli:
      if (n != 3) throw std::out_of_range("toffoli is a three-qubit gate");
      return 28;
    case Scheme::NTCNOT:
      return std::nullopt;
  }
  return std::nullopt;
}

Feasibility feasibility(const DeviceParams& params, double threshold, std::size_t ntcnot_n) {
  positive(threshold, "threshold");
  params.validate();
  Feasibility f;
  f.threshold = threshold;
  f.gamma2_inv = params.gamma2_inv;
  f.kappa_inv = cavity_lifetime(params.quality_q, params.nu_c);
  auto row = [&](std::string gate, double duration) {
    FeasibilityRow r;
    r.gate = std::move(gate);
    r.duration = duration;
    r.ratio_relaxation = duration / f.gamma2_inv;
    r.ratio_cavity = duration / f.kappa_inv;
    r.pass = r.ratio_relaxation < threshold && r.ratio_cavity < threshold;
    return r;
  };
  f.rows.push_back(row("cp3", time_cp3(params)));
  f.rows.push_back(row("ntcnot", time_ntcnot(params, ntcnot_n)));
  f.pass = std::all_of(f.rows.begin(), f.rows.end(), [](const FeasibilityRow& r) { return r.pass; });
  return f;
}

std::string_view qubit_type_name(QubitType t) {
  switch (t) {
    case QubitType::Charge:
      return "charge";
    case QubitType::Phase:
      return "phase";
    case QubitType::Flux:
      return "flux";
    case QubitType::Squid:
      return "squid";
  }
  return "?";
}

QubitType parse_qubit_type(std::string_view name) {
  if (name == "charge") return QubitType::Charge;
  if (name == "phase") return QubitType::Phase;
  if (name == "flux") return QubitType::Flux;
  if (name == "squid") return QubitType::Squid;
  throw std::invalid_argument("unknown qubit type '" + std::string(name) + "'");
}

LevelCheck validate_levels(const LevelStructure& ls) {
  LevelCheck out;
  auto check = [&](bool ok, const char* predicate) {
    if (!ok) out.violated.emplace_back(predicate);
  };
  const QubitType t = ls.type;
  if (t == QubitType::Squid) {
    const double n32 = require(ls.nu32, "nu32", t);
    const double n21 = require(ls.nu21, "nu21", t);
    const double n20 = require(ls.nu20, "nu20", t);
    const double n31 = require(ls.nu31, "nu31", t);
    const double n30 = require(ls.nu30, "nu30", t);
    check(n32 < n21, "nu32<nu21");
    check(n21 < n20, "nu21<nu20");
    check(n20 < n31, "nu20<nu31");
    check(n31 < n30, "nu31<nu30");
  } else {
    const double n10 = require(ls.nu10, "nu10", t);
    const double n21 = require(ls.nu21, "nu21", t);
    const double n32 = require(ls.nu32, "nu32", t);
    switch (t) {
      case QubitType::Charge:
        check(n21 > n10, "nu21>nu10");
        check(n21 > n32, "nu21>nu32");
        check(n32 < n10, "nu32<nu10");
        break;
      case QubitType::Phase:
        check(n10 > n21, "nu10>nu21");
        check(n21 > n32, "nu21>nu32");
        break;
      case QubitType::Flux:
        check(n21 > n10, "nu21>nu10");
        check(n21 > n32, "nu21>nu32");
        check(n32 > n10, "nu32>nu10");
        break;
      case QubitType::Squid:
        break;
    }
  }
  out.pass = out.violated.empty();
  return out;
}

}  // namespace gatesim
