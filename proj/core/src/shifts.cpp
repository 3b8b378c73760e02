// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hfshift/shifts.hpp"

#include <cmath>
#include <stdexcept>

namespace hfshift::shifts {

namespace {
constexpr double kTheoryBandMin = 42e-12;  // m
constexpr double kTheoryBandMax = 55e-12;  // m
}  // namespace

TransitionId transition_from_name(const std::string& name) {
  if (name == "ad") return TransitionId::ad;
  if (name == "bc") return TransitionId::bc;
  throw std::invalid_argument("unknown transition '" + name +
                              "' (expected ad or bc)");
}

std::string transition_name(TransitionId id) {
  return id == TransitionId::ad ? "ad" : "bc";
}

Transition Transition::of(TransitionId id) {
  return id == TransitionId::ad ? ad() : bc();
}

std::string Transition::name() const {
  return std::string(1, hyperfine::level_name(initial)) + "->" +
         hyperfine::level_name(final);
}

void Transition::validate() const {
  if (initial == final)
    throw std::invalid_argument("transition requires two distinct levels");
}

double clock_shift(interaction::Model model, const Transition& transition,
                   const interaction::DensitySet& n,
                   const interaction::Pseudopotential& pp,
                   const hyperfine::StateSet& states, double hbar) {
  transition.validate();
  const auto table = interaction::CouplingTable::build(model, states, pp);
  const double mu_final = interaction::chemical_potential(table, n, transition.final);
  const double mu_initial =
      interaction::chemical_potential(table, n, transition.initial);
  return (mu_final - mu_initial) / hbar;
}

std::optional<double> model_ratio(const Transition& transition,
                                  const interaction::DensitySet& n,
                                  const interaction::Pseudopotential& pp,
                                  const hyperfine::StateSet& states) {
  const double sym =
      clock_shift(interaction::Model::Symmetrized, transition, n, pp, states);
  const double dist =
      clock_shift(interaction::Model::Distinguishable, transition, n, pp, states);
  if (dist == 0.0) return std::nullopt;
  return sym / dist;
}

Result field_shift_coefficient(const Transition& transition,
                               interaction::Model model,
                               const interaction::Pseudopotential& pp,
                               const hyperfine::Params& params,
                               std::optional<double> field_tesla, double hbar) {
  transition.validate();
  const hyperfine::StateSet states = field_tesla
                                         ? hyperfine::solve_states(params, *field_tesla)
                                         : hyperfine::high_field_states();
  const double slope =
      field_tesla ? hyperfine::transition_field_slope(params, transition.initial,
                                                      transition.final, *field_tesla)
                  : params.gamma_e;

  const auto unit_bath = interaction::DensitySet::single(transition.bath, 1.0);
  const double delta_omega =
      clock_shift(model, transition, unit_bath, pp, states, hbar);
  // An interaction shift -|dw| must be compensated by raising the field:
  // the resonance-field displacement is -delta_omega / slope.
  const double delta_B = -delta_omega / slope;

  Result out;
  out.transition = std::string(1, hyperfine::level_name(transition.initial)) +
                   hyperfine::level_name(transition.final);
  out.model = model;
  out.delta_omega = delta_omega;
  out.delta_B = delta_B;
  out.C_m3_per_T = delta_B;  // per unit density, so C numerically equals dB
  out.C_cm3_gauss = constants::coeff_si_to_gauss_cm3 * out.C_m3_per_T;
  return out;
}

CoefficientUnit coefficient_unit_from_name(const std::string& name) {
  if (name == "m3-tesla") return CoefficientUnit::M3PerTesla;
  if (name == "cm3-gauss") return CoefficientUnit::Cm3PerGauss;
  throw std::invalid_argument("unknown coefficient unit '" + name +
                              "' (expected cm3-gauss or m3-tesla)");
}

DeltaA extract_delta_a(double C, CoefficientUnit unit, double sigma_C,
                       const hyperfine::Params& params, double hbar) {
  if (!std::isfinite(C)) throw std::invalid_argument("coefficient must be finite");
  if (sigma_C < 0)
    throw std::invalid_argument("coefficient uncertainty must be >= 0");
  const double to_si =
      unit == CoefficientUnit::Cm3PerGauss ? constants::coeff_gauss_cm3_to_si : 1.0;
  const double factor =
      params.gamma_e * params.mass / (constants::two_pi * hbar);
  return {C * to_si * factor, sigma_C * to_si * factor};
}

TheoryComparison compare_to_theory(double delta_a_m) {
  BandPosition pos = BandPosition::Within;
  if (delta_a_m < kTheoryBandMin)
    pos = BandPosition::Below;
  else if (delta_a_m > kTheoryBandMax)
    pos = BandPosition::Above;
  return {pos, pos == BandPosition::Within, kTheoryBandMin, kTheoryBandMax};
}

std::string band_position_name(BandPosition p) {
  switch (p) {
    case BandPosition::Below: return "below";
    case BandPosition::Within: return "within";
    case BandPosition::Above: return "above";
  }
  return {};
}

record::Record to_record(const Result& result) {
  record::Record r;
  r.add("transition", result.transition)
      .add("model", interaction::model_name(result.model))
      .add("delta_omega_rad_s", result.delta_omega)
      .add("delta_B_T", result.delta_B)
      .add("C_m3_per_T", result.C_m3_per_T)
      .add("C_cm3_gauss", result.C_cm3_gauss);
  return r;
}

}  // namespace hfshift::shifts
