// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hfshift/interaction.hpp"

#include <stdexcept>

namespace hfshift::interaction {

double lambda_from_scattering_length(double a, double mass, double hbar) {
  if (!(mass > 0))
    throw std::invalid_argument("lambda_from_scattering_length: mass must be > 0");
  return 4.0 * constants::pi * hbar * hbar * a / mass;
}

double scattering_length_from_lambda(double lambda, double mass, double hbar) {
  if (!(mass > 0))
    throw std::invalid_argument("scattering_length_from_lambda: mass must be > 0");
  return lambda * mass / (4.0 * constants::pi * hbar * hbar);
}

std::string model_name(Model model) {
  return model == Model::Symmetrized ? "symmetrized" : "distinguishable";
}

double pair_lambda(Model model, const hyperfine::State& alpha,
                   const hyperfine::State& beta, const Pseudopotential& pp) {
  spin::Ket pair_ket = spin::Ket::zero_pair();
  switch (model) {
    case Model::Symmetrized:
      pair_ket = spin::symmetrize(alpha.ket, beta.ket);
      break;
    case Model::Distinguishable:
      // Ordered product; the zeroed antisymmetric components simply drop out
      // of the exchange-symmetric channel weights below.
      pair_ket = spin::tensor(alpha.ket, beta.ket);
      break;
  }
  if (pair_ket.is_zero())
    throw std::runtime_error("pair_lambda: symmetrized pair state vanished");

  const spin::ChannelWeights w =
      spin::channel_weights(pair_ket, spin::ChannelFilter::ExchangeSymmetric);
  return to_double(w.electron_singlet) * pp.lambda_singlet() +
         to_double(w.electron_triplet) * pp.lambda_triplet();
}

CouplingTable CouplingTable::build(Model model, const hyperfine::StateSet& states,
                                   const Pseudopotential& pp) {
  CouplingTable table;
  table.model_ = model;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const double lambda = pair_lambda(model, states[i], states[j], pp);
      table.entries_[i][j] = lambda;
      table.entries_[j][i] = lambda;
    }
  }
  return table;
}

DensitySet::DensitySet(const std::array<double, 4>& n) : n_(n) {
  for (double v : n_)
    if (v < 0) throw std::invalid_argument("density must be non-negative");
}

DensitySet DensitySet::single(hyperfine::Level level, double n) {
  return DensitySet().set(level, n);
}

DensitySet& DensitySet::set(hyperfine::Level level, double n) {
  if (n < 0) throw std::invalid_argument("density must be non-negative");
  n_[static_cast<int>(level)] = n;
  return *this;
}

double energy_density(const CouplingTable& table, const DensitySet& n) {
  using hyperfine::Level;
  double energy = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double ni = n.n(static_cast<Level>(i));
    energy += 0.5 * table.lambda(static_cast<Level>(i), static_cast<Level>(i)) *
              ni * ni;
    for (int j = i + 1; j < 4; ++j) {
      energy += table.lambda(static_cast<Level>(i), static_cast<Level>(j)) * ni *
                n.n(static_cast<Level>(j));
    }
  }
  return energy;
}

double chemical_potential(const CouplingTable& table, const DensitySet& n,
                          hyperfine::Level level) {
  double mu = 0.0;
  for (int j = 0; j < 4; ++j) {
    const auto other = static_cast<hyperfine::Level>(j);
    mu += table.lambda(level, other) * n.n(other);
  }
  return mu;
}

}  // namespace hfshift::interaction
