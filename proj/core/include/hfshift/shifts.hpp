// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hfshift/interaction.hpp"
#include "hfshift/record.hpp"

#include <optional>
#include <string>

// Cold-collision clock shifts of the electron-spin-resonance transitions
// a->d and b->c, their resonance-field shift coefficients C (defined by
// Delta B = C * n_bath), and the extraction of the scattering-length
// difference Delta a = a_t - a_s from a measured C.
namespace hfshift::shifts {

enum class TransitionId { ad, bc };

TransitionId transition_from_name(const std::string& name);  // "ad" | "bc"
std::string transition_name(TransitionId id);

struct Transition {
  hyperfine::Level initial;
  hyperfine::Level final;
  hyperfine::Level bath;  // the spectator state whose density drives the shift

  static Transition ad() { return {hyperfine::Level::a, hyperfine::Level::d, hyperfine::Level::b}; }
  static Transition bc() { return {hyperfine::Level::b, hyperfine::Level::c, hyperfine::Level::a}; }
  static Transition of(TransitionId id);

  Transition reversed() const { return {final, initial, bath}; }
  std::string name() const;  // "a->d"
  void validate() const;     // initial != final
};

/// Frequency shift Delta omega (rad/s) of the transition in a gas with the
/// given densities: hbar * Delta omega = mu_final - mu_initial under the
/// model's coupling table.
double clock_shift(interaction::Model model, const Transition& transition,
                   const interaction::DensitySet& n,
                   const interaction::Pseudopotential& pp,
                   const hyperfine::StateSet& states,
                   double hbar = constants::hbar);

/// clock_shift(Symmetrized) / clock_shift(Distinguishable); empty when the
/// denominator vanishes (e.g. lambda_s = lambda_t). Exactly 2 for both named
/// transitions when only the bath density is nonzero.
std::optional<double> model_ratio(const Transition& transition,
                                  const interaction::DensitySet& n,
                                  const interaction::Pseudopotential& pp,
                                  const hyperfine::StateSet& states);

/// Field-shift coefficient and per-unit-density shift for one transition.
/// delta_omega and delta_B are quoted at unit bath density (1 m^-3); the
/// coefficient is reported in both unit conventions, always.
struct Result {
  std::string transition;   // "ad" | "bc"
  interaction::Model model;
  double delta_omega;       // rad/s per unit bath density
  double delta_B;           // T per unit bath density
  double C_m3_per_T;        // SI convention: Delta B [T] = C * n [m^-3]
  double C_cm3_gauss;       // experimental convention: Delta B [G] = C * n [cm^-3]
};

/// C with the sign fixed so that a_t > a_s gives C > 0 (the resonance field
/// moves up): Delta B = -Delta omega / slope. With field_tesla unset the
/// high-field limit is used (product states, slope = gamma_e); otherwise the
/// states and slope are evaluated at the given field.
Result field_shift_coefficient(const Transition& transition,
                               interaction::Model model,
                               const interaction::Pseudopotential& pp,
                               const hyperfine::Params& params,
                               std::optional<double> field_tesla = std::nullopt,
                               double hbar = constants::hbar);

enum class CoefficientUnit { M3PerTesla, Cm3PerGauss };

CoefficientUnit coefficient_unit_from_name(const std::string& name);

struct DeltaA {
  double delta_a;  // a_t - a_s, m
  double sigma;    // 1-sigma uncertainty, m
};

/// Delta a = C * gamma_e * mass / (2 pi hbar) with C converted to SI first;
/// the uncertainty scales by the same factor. The unit tag is mandatory.
DeltaA extract_delta_a(double C, CoefficientUnit unit, double sigma_C,
                       const hyperfine::Params& params,
                       double hbar = constants::hbar);

enum class BandPosition { Below, Within, Above };

/// Comparison of an extracted Delta a against the 42-55 pm band of ab initio
/// scattering-length differences.
struct TheoryComparison {
  BandPosition position;
  bool within_range;
  double band_min;  // m
  double band_max;  // m
};

TheoryComparison compare_to_theory(double delta_a_m);

std::string band_position_name(BandPosition p);

/// Flat record with keys transition, model, delta_omega_rad_s, delta_B_T,
/// C_m3_per_T, C_cm3_gauss.
record::Record to_record(const Result& result);

}  // namespace hfshift::shifts
