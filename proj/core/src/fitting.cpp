// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hfshift/fitting.hpp"

#include "hfshift/constants.hpp"
#include "hfshift/record.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace hfshift::fitting {

namespace {

constexpr char kHeader[] = "transition,n_a,n_b,delta_B,sigma_B";
constexpr double kNoiselessSigmaGauss = 1e-4;

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  out.push_back(cell);
  return out;
}

double parse_number(const std::string& cell, int row, const char* column) {
  double value = 0;
  const char* begin = cell.data();
  const char* end = cell.data() + cell.size();
  while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end != begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end)
    throw std::runtime_error("row " + std::to_string(row) + ": " + column +
                             " value '" + cell + "' is not a number");
  return value;
}

// Gaussian deviates via Box-Muller on top of mt19937_64, so synthetic
// datasets are reproducible across platforms for a given seed.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = unit_open();
    const double u2 = unit_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(constants::two_pi * u2);
    have_spare_ = true;
    return r * std::cos(constants::two_pi * u2);
  }

 private:
  double unit_open() {  // uniform in (0, 1]
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

void bath_self(shifts::TransitionId id, const MeasurementRow& row, double& bath,
               double& self) {
  if (id == shifts::TransitionId::ad) {
    bath = row.n_b;
    self = row.n_a;
  } else {
    bath = row.n_a;
    self = row.n_b;
  }
}

}  // namespace

double FitResult::sigma_cross() const { return std::sqrt(covariance[0][0]); }
double FitResult::sigma_self() const { return std::sqrt(covariance[1][1]); }

std::vector<MeasurementRow> load_measurements(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open measurement file: " + path);

  std::vector<MeasurementRow> rows;
  std::string line;
  bool header_seen = false;
  int data_row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kHeader)
        throw std::runtime_error("bad header '" + line + "' (expected '" +
                                 kHeader + "')");
      header_seen = true;
      continue;
    }
    ++data_row;
    const auto cells = split_csv(line);
    if (cells.size() != 5)
      throw std::runtime_error("row " + std::to_string(data_row) + ": expected 5 columns, got " +
                               std::to_string(cells.size()));

    MeasurementRow row;
    try {
      row.transition = shifts::transition_from_name(cells[0]);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("row " + std::to_string(data_row) +
                               ": transition must be 'ad' or 'bc', got '" +
                               cells[0] + "'");
    }
    row.n_a = parse_number(cells[1], data_row, "n_a");
    row.n_b = parse_number(cells[2], data_row, "n_b");
    row.delta_B = parse_number(cells[3], data_row, "delta_B");
    row.sigma_B = parse_number(cells[4], data_row, "sigma_B");
    if (row.n_a < 0)
      throw std::runtime_error("row " + std::to_string(data_row) +
                               ": n_a must be non-negative");
    if (row.n_b < 0)
      throw std::runtime_error("row " + std::to_string(data_row) +
                               ": n_b must be non-negative");
    if (!(row.sigma_B > 0))
      throw std::runtime_error("row " + std::to_string(data_row) +
                               ": sigma_B must be positive");
    rows.push_back(row);
  }
  if (!header_seen) throw std::runtime_error("bad header '' (expected '" +
                                             std::string(kHeader) + "')");
  if (rows.empty()) throw std::runtime_error("no measurements");
  return rows;
}

void write_measurements(const std::string& path,
                        const std::vector<MeasurementRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write measurement file: " + path);
  out << kHeader << '\n';
  for (const auto& row : rows) {
    out << shifts::transition_name(row.transition) << ','
        << record::format_double(row.n_a) << ','
        << record::format_double(row.n_b) << ','
        << record::format_double(row.delta_B) << ','
        << record::format_double(row.sigma_B) << '\n';
  }
}

FitResult fit_coefficients(const std::vector<MeasurementRow>& rows,
                           shifts::TransitionId transition) {
  // Normal equations of the 2-parameter weighted fit, solved with the
  // closed-form symmetric 2x2 inverse. All sums in SI (m^-3, T).
  double m00 = 0, m01 = 0, m11 = 0, v0 = 0, v1 = 0;
  int used = 0;
  for (const auto& row : rows) {
    if (row.transition != transition) continue;
    ++used;
    double bath_cm3 = 0, self_cm3 = 0;
    bath_self(transition, row, bath_cm3, self_cm3);
    const double xb = bath_cm3 * constants::per_cm3_to_per_m3;
    const double xs = self_cm3 * constants::per_cm3_to_per_m3;
    const double y = row.delta_B * constants::gauss_to_tesla;
    const double sigma = row.sigma_B * constants::gauss_to_tesla;
    const double w = 1.0 / (sigma * sigma);
    m00 += w * xb * xb;
    m01 += w * xb * xs;
    m11 += w * xs * xs;
    v0 += w * xb * y;
    v1 += w * xs * y;
  }
  if (used < 3)
    throw std::runtime_error("insufficient data: need at least 3 rows for transition " +
                             shifts::transition_name(transition) + ", got " +
                             std::to_string(used));

  const double det = m00 * m11 - m01 * m01;
  if (!(det > 1e-12 * std::max(m00 * m11, m01 * m01))) {
    std::string why = m11 == 0.0
                          ? "the self-density column is identically zero"
                          : "the bath and self densities are collinear";
    throw SingularFitError("singular fit: design matrix rank < 2 (" + why + ")");
  }

  const double i00 = m11 / det, i01 = -m01 / det, i11 = m00 / det;
  const double c_cross_si = i00 * v0 + i01 * v1;
  const double c_self_si = i01 * v0 + i11 * v1;

  double chi2 = 0;
  for (const auto& row : rows) {
    if (row.transition != transition) continue;
    double bath_cm3 = 0, self_cm3 = 0;
    bath_self(transition, row, bath_cm3, self_cm3);
    const double xb = bath_cm3 * constants::per_cm3_to_per_m3;
    const double xs = self_cm3 * constants::per_cm3_to_per_m3;
    const double y = row.delta_B * constants::gauss_to_tesla;
    const double sigma = row.sigma_B * constants::gauss_to_tesla;
    const double r = (y - c_cross_si * xb - c_self_si * xs) / sigma;
    chi2 += r * r;
  }

  const double to_exp = constants::coeff_si_to_gauss_cm3;
  FitResult out;
  out.C_cross = c_cross_si * to_exp;
  out.C_self = c_self_si * to_exp;
  out.covariance[0][0] = i00 * to_exp * to_exp;
  out.covariance[0][1] = out.covariance[1][0] = i01 * to_exp * to_exp;
  out.covariance[1][1] = i11 * to_exp * to_exp;
  out.chi2 = chi2;
  out.dof = used - 2;
  out.rows_used = used;
  return out;
}

std::vector<MeasurementRow> synthesize_dataset(shifts::TransitionId transition,
                                               double C_cross, double C_self,
                                               const std::vector<GridPoint>& grid,
                                               double noise_sigma,
                                               std::uint64_t seed) {
  if (grid.empty()) throw std::invalid_argument("synthesize_dataset: empty density grid");
  if (noise_sigma < 0)
    throw std::invalid_argument("synthesize_dataset: noise sigma must be >= 0");

  GaussianSampler gauss(seed);
  std::vector<MeasurementRow> rows;
  rows.reserve(grid.size());
  for (const auto& point : grid) {
    if (point.n_bath < 0 || point.n_self < 0)
      throw std::invalid_argument("synthesize_dataset: densities must be non-negative");
    MeasurementRow row;
    row.transition = transition;
    if (transition == shifts::TransitionId::ad) {
      row.n_b = point.n_bath;
      row.n_a = point.n_self;
    } else {
      row.n_a = point.n_bath;
      row.n_b = point.n_self;
    }
    row.delta_B = C_cross * point.n_bath + C_self * point.n_self;
    if (noise_sigma > 0) row.delta_B += noise_sigma * gauss();
    row.sigma_B = noise_sigma > 0 ? noise_sigma : kNoiselessSigmaGauss;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hfshift::fitting
