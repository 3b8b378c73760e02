// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hfshift/amplitude.hpp"

#include <cmath>
#include <stdexcept>

namespace hfshift::spin {

Amplitude::Amplitude(int sign, Rational radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw std::domain_error("Amplitude: negative radicand");
  if (radicand_ == 0) sign_ = 0;
  if (sign_ == 0 && radicand_ != 0)
    throw std::domain_error("Amplitude: zero sign with nonzero radicand");
  value_ = sign_ * std::sqrt(to_double(radicand_));
}

Amplitude Amplitude::from_rational(const Rational& q) {
  const int s = q > 0 ? 1 : (q < 0 ? -1 : 0);
  return Amplitude(s, q * q);
}

Amplitude Amplitude::sqrt_of(const Rational& r) {
  if (r < 0) throw std::domain_error("Amplitude::sqrt_of: negative radicand");
  return Amplitude(r == 0 ? 0 : 1, r);
}

Amplitude Amplitude::negative_sqrt_of(const Rational& r) {
  return -sqrt_of(r);
}

Amplitude Amplitude::from_double(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("Amplitude::from_double: non-finite value");
  const Rational q(x);  // exact binary expansion of the double
  const int s = x > 0 ? 1 : (x < 0 ? -1 : 0);
  return Amplitude(s, q * q);
}

Amplitude Amplitude::operator-() const {
  return Amplitude(-sign_, radicand_);
}

Amplitude Amplitude::operator*(const Amplitude& other) const {
  return Amplitude(sign_ * other.sign_, radicand_ * other.radicand_);
}

Amplitude Amplitude::operator+(const Amplitude& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  // sign*sqrt(r) + sign'*sqrt(r') = (sign*t + sign') * sqrt(r')
  // with t = sqrt(r/r'), exact only when r/r' is a perfect square.
  const Rational ratio = radicand_ / other.radicand_;
  if (!is_perfect_square(ratio)) {
    throw std::domain_error(
        "Amplitude: sum of sqrt(" + to_string(radicand_) + ") and sqrt(" +
        to_string(other.radicand_) + ") is not a signed square rational");
  }
  const Rational factor = sign_ * exact_sqrt(ratio) + other.sign_;
  const int s = factor > 0 ? 1 : (factor < 0 ? -1 : 0);
  return Amplitude(s, factor * factor * other.radicand_);
}

Amplitude Amplitude::divided_by_sqrt(const Rational& s) const {
  if (s <= 0)
    throw std::domain_error("Amplitude::divided_by_sqrt: scale must be > 0");
  return Amplitude(sign_, radicand_ / s);
}

bool Amplitude::operator==(const Amplitude& other) const {
  return sign_ == other.sign_ && radicand_ == other.radicand_;
}

std::string Amplitude::str() const {
  if (sign_ == 0) return "0";
  std::string out(sign_ < 0 ? "-" : "+");
  if (is_perfect_square(radicand_)) {
    out += to_string(exact_sqrt(radicand_));
  } else {
    out += "√(" + to_string(radicand_) + ")";
  }
  return out;
}

}  // namespace hfshift::spin
