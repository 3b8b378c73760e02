// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hfshift/hyperfine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace hfshift::hyperfine {

namespace {

using Matrix4 = std::array<std::array<double, 4>, 4>;

// Basis order matches spin::AtomLabel: 0=|dD>, 1=|dU>, 2=|uD>, 3=|uU>.
constexpr int kDD = 0, kDU = 1, kUD = 2, kUU = 3;

Matrix4 hamiltonian(const Params& p, double B) {
  Matrix4 h{};
  const double ge = p.gamma_e, gn = p.gamma_n, A = p.A;
  h[kDD][kDD] = A / 4 - (ge - gn) * B / 2;
  h[kDU][kDU] = -A / 4 - (ge + gn) * B / 2;
  h[kUD][kUD] = -A / 4 + (ge + gn) * B / 2;
  h[kUU][kUU] = A / 4 + (ge - gn) * B / 2;
  h[kDU][kUD] = h[kUD][kDU] = A / 2;  // flip-flop term
  return h;
}

// Cyclic Jacobi rotations for a symmetric 4x4. The hyperfine matrix couples
// only (kDU, kUD), so the |dD> and |uU> columns stay exact unit vectors.
void jacobi_eigensymm(Matrix4 a, std::array<double, 4>& eigenvalues,
                      Matrix4& eigenvectors) {
  Matrix4& v = eigenvectors;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v[i][j] = (i == j) ? 1.0 : 0.0;

  double scale = 0.0;
  for (int i = 0; i < 4; ++i) scale = std::max(scale, std::abs(a[i][i]));
  const double tiny = std::max(scale, 1.0) * 1e-300;

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
    if (off <= tiny * tiny) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 4; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 4; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  for (int i = 0; i < 4; ++i) eigenvalues[i] = a[i][i];
}

spin::Ket column_ket(const Matrix4& v, int col) {
  std::array<spin::Amplitude, spin::kAtomDim> amps{};
  for (int i = 0; i < 4; ++i) amps[i] = spin::Amplitude::from_double(v[i][col]);
  return spin::Ket::atom(amps);
}

std::string strip(const std::string& s) {
  auto b = s.begin(), e = s.end();
  while (b != e && std::isspace(static_cast<unsigned char>(*b))) ++b;
  while (e != b && std::isspace(static_cast<unsigned char>(*(e - 1)))) --e;
  return std::string(b, e);
}

}  // namespace

Params Params::hydrogen() {
  return {
      constants::two_pi * 1.4204057518e9,   // A: 1S hyperfine splitting, Hz
      constants::two_pi * 28.0249514e9,     // gamma_e / 2pi, Hz/T
      constants::two_pi * 42.5774785e6,     // gamma_n / 2pi, Hz/T (proton)
      1.6735575e-27,                        // m_H, kg
  };
}

void Params::validate() const {
  if (!(A > 0)) throw std::invalid_argument("hyperfine constant A must be > 0");
  if (!(gamma_e > 0)) throw std::invalid_argument("gamma_e must be > 0");
  if (!(mass > 0)) throw std::invalid_argument("mass must be > 0");
}

char level_name(Level level) { return "abcd"[static_cast<int>(level)]; }

Level level_from_name(char name) {
  switch (name) {
    case 'a': return Level::a;
    case 'b': return Level::b;
    case 'c': return Level::c;
    case 'd': return Level::d;
  }
  throw std::invalid_argument(std::string("unknown hyperfine level '") + name +
                              "' (expected a, b, c or d)");
}

const State& state(const StateSet& states, Level level) {
  return states[static_cast<int>(level)];
}

StateSet solve_states(const Params& params, double field_tesla) {
  params.validate();
  if (field_tesla < 0) throw std::invalid_argument("field must be ≥ 0");

  std::array<double, 4> eigenvalues;
  Matrix4 vectors;
  jacobi_eigensymm(hamiltonian(params, field_tesla), eigenvalues, vectors);

  // b and d are the columns of the untouched pure states. The remaining two
  // columns span the {|dU>, |uD>} block; a is the lower one.
  int col_b = -1, col_d = -1;
  for (int c = 0; c < 4; ++c) {
    if (std::abs(vectors[kDD][c]) > 0.5) col_b = c;
    if (std::abs(vectors[kUU][c]) > 0.5) col_d = c;
  }
  int col_a = -1, col_c = -1;
  for (int c = 0; c < 4; ++c) {
    if (c == col_b || c == col_d) continue;
    if (col_a < 0)
      col_a = c;
    else
      col_c = c;
  }
  if (eigenvalues[col_a] > eigenvalues[col_c]) std::swap(col_a, col_c);

  // Sign convention: a = cos(eps)|dU> - sin(eps)|uD>, c = sin(eps)|dU> +
  // cos(eps)|uD> with eps in [0, pi/4].
  auto fix_sign = [&vectors](int col, int pivot) {
    if (vectors[pivot][col] < 0)
      for (int i = 0; i < 4; ++i) vectors[i][col] = -vectors[i][col];
  };
  fix_sign(col_a, kDU);
  fix_sign(col_c, kUD);
  fix_sign(col_b, kDD);
  fix_sign(col_d, kUU);
  const double epsilon = std::atan2(-vectors[kUD][col_a], vectors[kDU][col_a]);

  return StateSet{
      State{Level::a, eigenvalues[col_a], column_ket(vectors, col_a), epsilon},
      State{Level::b, eigenvalues[col_b], column_ket(vectors, col_b), 0.0},
      State{Level::c, eigenvalues[col_c], column_ket(vectors, col_c), epsilon},
      State{Level::d, eigenvalues[col_d], column_ket(vectors, col_d), 0.0},
  };
}

std::array<double, 4> closed_form_energies(const Params& params,
                                           double field_tesla) {
  params.validate();
  if (field_tesla < 0) throw std::invalid_argument("field must be ≥ 0");
  const double A = params.A, B = field_tesla;
  const double gp = params.gamma_e + params.gamma_n;
  const double gm = params.gamma_e - params.gamma_n;
  const double root = std::sqrt(A * A + gp * gp * B * B);
  return {
      -A / 4 - root / 2,  // a
      A / 4 - gm * B / 2,  // b
      -A / 4 + root / 2,  // c
      A / 4 + gm * B / 2,  // d
  };
}

StateSet high_field_states() {
  const double unset = std::numeric_limits<double>::quiet_NaN();
  using spin::AtomLabel;
  using spin::Projection;
  const auto down = Projection::Down, up = Projection::Up;
  return StateSet{
      State{Level::a, unset, spin::Ket::atom_basis({down, up}), 0.0},
      State{Level::b, unset, spin::Ket::atom_basis({down, down}), 0.0},
      State{Level::c, unset, spin::Ket::atom_basis({up, down}), 0.0},
      State{Level::d, unset, spin::Ket::atom_basis({up, up}), 0.0},
  };
}

double transition_field_slope(const Params& params, Level initial, Level final,
                              double field_tesla) {
  if (initial == final)
    throw std::invalid_argument("transition requires two distinct levels");
  if (field_tesla < 0) throw std::invalid_argument("field must be ≥ 0");

  const auto omega = [&](double B) {
    const StateSet s = solve_states(params, B);
    return state(s, final).energy - state(s, initial).energy;
  };
  const double h = 1e-6 * std::max(field_tesla, 1.0);
  if (field_tesla >= h) {
    return (omega(field_tesla + h) - omega(field_tesla - h)) / (2 * h);
  }
  // One-sided second-order stencil keeps the evaluation at B >= 0.
  return (-3 * omega(field_tesla) + 4 * omega(field_tesla + h) -
          omega(field_tesla + 2 * h)) /
         (2 * h);
}

ConstantSet hydrogen_constants() {
  return {Params::hydrogen(), constants::hbar};
}

ConstantSet load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open constants file: " + path);

  ConstantSet out = hydrogen_constants();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip(line.substr(0, line.find('#')));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("constants file line " + std::to_string(line_no) +
                               ": expected 'key = value'");
    const std::string key = strip(text.substr(0, eq));
    const std::string value_str = strip(text.substr(eq + 1));
    double value = 0;
    const auto [ptr, ec] = std::from_chars(
        value_str.data(), value_str.data() + value_str.size(), value);
    if (ec != std::errc{} || ptr != value_str.data() + value_str.size())
      throw std::runtime_error("constants file line " + std::to_string(line_no) +
                               ": '" + value_str + "' is not a number");

    if (key == "A")
      out.params.A = value;
    else if (key == "gamma_e")
      out.params.gamma_e = value;
    else if (key == "gamma_n")
      out.params.gamma_n = value;
    else if (key == "mass")
      out.params.mass = value;
    else if (key == "hbar")
      out.hbar = value;
    else
      throw std::runtime_error("constants file line " + std::to_string(line_no) +
                               ": unknown key '" + key +
                               "' (expected A, gamma_e, gamma_n, mass, hbar)");
  }
  out.params.validate();
  if (!(out.hbar > 0)) throw std::runtime_error("hbar must be > 0");
  return out;
}

}  // namespace hfshift::hyperfine
