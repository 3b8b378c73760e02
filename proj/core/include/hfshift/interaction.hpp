// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hfshift/constants.hpp"
#include "hfshift/hyperfine.hpp"

#include <array>
#include <string>

// Contact-pseudopotential couplings between hyperfine states.
//
// The interaction is V(r) = lambda delta(r) with lambda = 4 pi hbar^2 a / m,
// diagonal in the electron-pair channel (lambda_s for e_s, lambda_t for e_t)
// and independent of the nuclear spins. Only the exchange-symmetric spin
// components (e_t, n_t) and (e_s, n_s) carry s-wave contact matrix elements:
// the antisymmetric spatial factor vanishes at zero range while the symmetric
// one is doubled, so a symmetric heterostate pair couples with twice the
// naive product-state weight. The two models below differ exactly there:
//
//   Symmetrized     - weights taken from the exchange-symmetrized pair ket
//                     (the doubling is automatic);
//   Distinguishable - weights taken from the ordered product ket, with the
//                     antisymmetric components merely zeroed (the convention
//                     that treats the heterostate atoms as distinguishable
//                     and halves every heterostate coupling).
//
// Same-state pairs are identical-boson symmetrized in both models.
namespace hfshift::interaction {

/// lambda = 4 pi hbar^2 a / mass, J*m^3. mass must be > 0.
double lambda_from_scattering_length(double a, double mass,
                                     double hbar = constants::hbar);

/// Inverse of lambda_from_scattering_length.
double scattering_length_from_lambda(double lambda, double mass,
                                     double hbar = constants::hbar);

struct Pseudopotential {
  double a_singlet;  // singlet scattering length, m
  double a_triplet;  // triplet scattering length, m
  double mass;       // kg
  double hbar = constants::hbar;

  double lambda_singlet() const {
    return lambda_from_scattering_length(a_singlet, mass, hbar);
  }
  double lambda_triplet() const {
    return lambda_from_scattering_length(a_triplet, mass, hbar);
  }
};

enum class Model { Symmetrized, Distinguishable };

std::string model_name(Model model);

/// Effective pair coupling lambda_ab (J*m^3) between two hyperfine states
/// under the chosen model. Exact rational channel weights up to the final
/// float combination, so e.g. the Distinguishable value is exactly half the
/// Symmetrized one for every heterostate pair.
double pair_lambda(Model model, const hyperfine::State& alpha,
                   const hyperfine::State& beta, const Pseudopotential& pp);

/// Symmetric 4x4 table of pair couplings over the hyperfine levels.
class CouplingTable {
 public:
  static CouplingTable build(Model model, const hyperfine::StateSet& states,
                             const Pseudopotential& pp);

  double lambda(hyperfine::Level alpha, hyperfine::Level beta) const {
    return entries_[static_cast<int>(alpha)][static_cast<int>(beta)];
  }
  Model model() const { return model_; }

 private:
  std::array<std::array<double, 4>, 4> entries_{};
  Model model_ = Model::Symmetrized;
};

/// Number densities per hyperfine level, m^-3, all >= 0.
class DensitySet {
 public:
  DensitySet() = default;
  explicit DensitySet(const std::array<double, 4>& n);

  static DensitySet single(hyperfine::Level level, double n);

  double n(hyperfine::Level level) const {
    return n_[static_cast<int>(level)];
  }
  DensitySet& set(hyperfine::Level level, double n);
  double total() const { return n_[0] + n_[1] + n_[2] + n_[3]; }

 private:
  std::array<double, 4> n_{};
};

/// Mean-field interaction energy density, J*m^-3:
///   E = 1/2 sum_a lambda_aa n_a^2 + sum_{a<b} lambda_ab n_a n_b.
/// The cross term carries no 1/2: for heterostate pairs the exchange
/// doubling is already inside lambda_ab.
double energy_density(const CouplingTable& table, const DensitySet& n);

/// mu_a = dE/dn_a = lambda_aa n_a + sum_{b != a} lambda_ab n_b, in J.
double chemical_potential(const CouplingTable& table, const DensitySet& n,
                          hyperfine::Level level);

}  // namespace hfshift::interaction
