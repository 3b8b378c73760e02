// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hfshift/shifts.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Measurement ingestion and weighted linear least squares for the
// resonance-field shift relations
//
//   Delta B_ad = C_ab n_b + C_aa n_a     (bath b, self a)
//   Delta B_bc = C_ba n_a + C_bb n_b     (bath a, self b)
//
// Rows carry the experimental units (densities in cm^-3, fields in gauss);
// the solver converts to SI internally and reports coefficients back in the
// gauss*cm^3 convention.
namespace hfshift::fitting {

struct MeasurementRow {
  shifts::TransitionId transition;
  double n_a;      // cm^-3
  double n_b;      // cm^-3
  double delta_B;  // gauss
  double sigma_B;  // gauss, > 0
};

class SingularFitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// CSV schema (exact header): transition,n_a,n_b,delta_B,sigma_B
/// Comment lines start with '#'; scientific notation permitted. Errors name
/// the offending data row and column.
std::vector<MeasurementRow> load_measurements(const std::string& path);

void write_measurements(const std::string& path,
                        const std::vector<MeasurementRow>& rows);

struct FitResult {
  double C_cross;            // cm^3 (gauss convention): C_ab or C_ba
  double C_self;             // cm^3: C_aa or C_bb
  double covariance[2][2];   // cm^6, order (cross, self)
  double chi2;
  int dof;        // rows - 2
  int rows_used;

  double sigma_cross() const;
  double sigma_self() const;
};

/// Weighted least squares (weights 1/sigma_B^2) of delta_B against
/// [n_bath, n_self] over the rows matching the transition. Requires >= 3
/// such rows and a rank-2 design; throws SingularFitError naming the
/// collinearity otherwise.
FitResult fit_coefficients(const std::vector<MeasurementRow>& rows,
                           shifts::TransitionId transition);

struct GridPoint {
  double n_bath;  // cm^-3
  double n_self;  // cm^-3
};

/// delta_B = C_cross n_bath + C_self n_self + noise, with Gaussian noise of
/// width noise_sigma (gauss) drawn from mt19937_64(seed) through a Box-Muller
/// transform; fully deterministic for a given seed. Noiseless rows carry a
/// nominal sigma_B of 1e-4 G so they remain valid measurements.
std::vector<MeasurementRow> synthesize_dataset(shifts::TransitionId transition,
                                               double C_cross, double C_self,
                                               const std::vector<GridPoint>& grid,
                                               double noise_sigma,
                                               std::uint64_t seed);

}  // namespace hfshift::fitting
