// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hfshift/constants.hpp"
#include "hfshift/spin_algebra.hpp"

#include <array>
#include <string>

// Single-atom hyperfine + Zeeman eigenproblem for a spin-1/2 electron and a
// spin-1/2 nucleus. Internal scale hbar = 1: energies are angular frequencies
// (rad/s). Hamiltonian convention:
//
//   H/hbar = A (I.S)/hbar^2 + gamma_e B S_z/hbar - gamma_n B I_z/hbar
//
// with gamma_e > 0 the electron gyromagnetic magnitude, so the electron-up
// states rise with field and the nuclear-up states fall.
namespace hfshift::hyperfine {

struct Params {
  double A;        // hyperfine constant, rad/s
  double gamma_e;  // electron gyromagnetic ratio, rad s^-1 T^-1 (positive)
  double gamma_n;  // nuclear gyromagnetic ratio, rad s^-1 T^-1
  double mass;     // atomic mass, kg

  static Params hydrogen();
  void validate() const;  // throws std::invalid_argument
};

/// The four hyperfine levels in the standard naming: a and c are the mixed
/// pair (superpositions of |dU> and |uD>, a below c), b = |dD>, d = |uU>.
/// For hydrogen this coincides with ascending energy order at fields below
/// the c-d crossing near A/(2 gamma_n) ~= 16.7 T; the labels follow the
/// state character, not the instantaneous energy order, so b and d stay
/// exactly pure at every field.
enum class Level : int { a = 0, b = 1, c = 2, d = 3 };

char level_name(Level level);
Level level_from_name(char name);  // throws std::invalid_argument

struct State {
  Level level;
  double energy;   // rad/s; NaN for the field-free high-field idealization
  spin::Ket ket;   // 4-dim, normalized
  double epsilon;  // admixture angle, rad; 0 for b, d and in the high-field limit
};

using StateSet = std::array<State, 4>;  // indexed by Level

const State& state(const StateSet& states, Level level);

/// Numeric diagonalization of the 4x4 Hamiltonian (Jacobi rotations) at field
/// B >= 0 tesla. Energies agree with closed_form_energies to ~1e-15 relative.
/// At B = 0 the triplet degeneracy is resolved by m_F order (b, c, d).
StateSet solve_states(const Params& params, double field_tesla);

/// Closed-form eigenvalues {E_a, E_b, E_c, E_d} of the same Hamiltonian:
///   E_a,c = -A/4 -+ sqrt(A^2 + (gamma_e+gamma_n)^2 B^2)/2
///   E_b,d =  A/4 -+ (gamma_e-gamma_n) B/2
std::array<double, 4> closed_form_energies(const Params& params,
                                           double field_tesla);

/// The B -> infinity limit: a=|dU>, b=|dD>, c=|uD>, d=|uU>, epsilon = 0
/// exactly, energies unset (NaN).
StateSet high_field_states();

/// d(omega_fi)/dB of the transition frequency omega = E_final - E_initial by
/// central finite difference with step 1e-6 * max(B, 1 T); falls back to a
/// second-order one-sided difference when B - step would be negative.
double transition_field_slope(const Params& params, Level initial, Level final,
                              double field_tesla);

/// Hyperfine parameters plus the hbar used by downstream unit chains, as
/// loaded from a constants file ("key = value", '#' comments; keys A,
/// gamma_e, gamma_n, mass, hbar in SI units, angular where applicable).
struct ConstantSet {
  Params params;
  double hbar;
};

ConstantSet hydrogen_constants();
ConstantSet load_constants(const std::string& path);

}  // namespace hfshift::hyperfine
