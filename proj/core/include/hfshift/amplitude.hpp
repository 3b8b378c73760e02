// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hfshift/rational.hpp"

#include <string>

namespace hfshift::spin {

/// Exact signed square-root-of-a-rational, the amplitude type of the spin
/// algebra: value = sign * sqrt(radicand) with radicand >= 0 a rational.
///
/// Every amplitude arising from the hyperfine pair algebra is of this form
/// (1, +-1/2, +-1/sqrt(2), products and renormalizations thereof), so
/// products, squares and the sums taken inside basis changes are exact.
/// Sums are defined only when the two radicands differ by a perfect rational
/// square factor (e.g. sqrt(1/8) + sqrt(1/2), but not 1/2 + sqrt(1/2));
/// incompatible sums throw std::domain_error. All values reachable through
/// the public ket operations stay within one compatibility class per
/// component.
class Amplitude {
 public:
  Amplitude() = default;  // zero

  static Amplitude zero() { return Amplitude(); }
  static Amplitude one() { return from_rational(1); }

  /// value = q (radicand q^2, sign of q).
  static Amplitude from_rational(const Rational& q);

  /// value = sqrt(r); r must be >= 0.
  static Amplitude sqrt_of(const Rational& r);

  /// value = -sqrt(r).
  static Amplitude negative_sqrt_of(const Rational& r);

  /// Exact embedding of a double: radicand is the exact dyadic rational x^2.
  static Amplitude from_double(double x);

  int sign() const { return sign_; }              // -1, 0, +1
  const Rational& radicand() const { return radicand_; }
  double value() const { return value_; }
  bool is_zero() const { return sign_ == 0; }

  Rational square() const { return radicand_; }

  Amplitude operator-() const;
  Amplitude operator*(const Amplitude& other) const;

  /// Exact sum. Throws std::domain_error when the radicand ratio is not a
  /// perfect rational square (the sum would leave the representation).
  Amplitude operator+(const Amplitude& other) const;
  Amplitude operator-(const Amplitude& other) const { return *this + (-other); }

  /// value / sqrt(s), s > 0 rational. Exact (radicand /= s).
  Amplitude divided_by_sqrt(const Rational& s) const;

  bool operator==(const Amplitude& other) const;
  bool operator!=(const Amplitude& other) const { return !(*this == other); }

  /// "+1", "-1/2", "+√(1/2)"; zero prints "0".
  std::string str() const;

 private:
  Amplitude(int sign, Rational radicand);

  int sign_ = 0;
  Rational radicand_ = 0;
  double value_ = 0.0;
};

}  // namespace hfshift::spin
