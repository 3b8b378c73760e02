// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hfshift/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace hfshift {

namespace {

// Integer square root if n is a perfect square, otherwise nullopt-ish via flag.
bool square_root_if_exact(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

}  // namespace

bool is_perfect_square(const Rational& q) {
  if (q < 0) return false;
  BigInt r;
  return square_root_if_exact(numerator(q), r) &&
         square_root_if_exact(denominator(q), r);
}

Rational exact_sqrt(const Rational& q) {
  if (q < 0) throw std::domain_error("exact_sqrt: negative radicand");
  BigInt num_root, den_root;
  if (!square_root_if_exact(numerator(q), num_root) ||
      !square_root_if_exact(denominator(q), den_root)) {
    throw std::domain_error("exact_sqrt: " + to_string(q) +
                            " is not a perfect rational square");
  }
  return Rational(num_root, den_root);
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

}  // namespace hfshift
