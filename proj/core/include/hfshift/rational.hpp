// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hfshift {

// Arbitrary-precision exact rational. Large enough to hold the exact square
// of any finite double (numerators up to ~2^2100 after a few products).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// True if q = (p/r)^2 for some rational p/r. Requires q >= 0.
bool is_perfect_square(const Rational& q);

/// Exact rational square root; throws std::domain_error unless
/// is_perfect_square(q).
Rational exact_sqrt(const Rational& q);

/// "3", "1/2", "-7/4" (canonical reduced form).
std::string to_string(const Rational& q);

}  // namespace hfshift
