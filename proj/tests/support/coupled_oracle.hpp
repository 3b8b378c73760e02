// Brute-force oracle for the pair spin algebra, independent of the library's
// basis-change path: explicit 16-component coupled vectors, the 16x16
// exchange permutation, and projector sandwiches, all in exact arithmetic.
#pragma once

#include "hfshift/spin_algebra.hpp"

#include <array>

namespace oracle {

using hfshift::Rational;
namespace spin = hfshift::spin;
using Amp = spin::Amplitude;
using Vec16 = std::array<Amp, 16>;

inline Vec16 ket_amps(const spin::Ket& k) {
  Vec16 v{};
  for (int i = 0; i < 16; ++i) v[i] = k.amp(i);
  return v;
}

// Exchange of the two atoms as an explicit permutation: (E v)_{(j,i)} = v_{(i,j)}.
inline Vec16 apply_exchange(const Vec16& v) {
  Vec16 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[4 * j + i] = v[4 * i + j];
  return out;
}

// Coefficient of the ordered two-spin product |s1 s2> (s = 0 down, 1 up) in
// channel c (0 singlet, 1..3 triplet m = -1, 0, +1); the singlet is
// (|ud> - |du>)/sqrt(2), written out here rather than taken from the library.
inline Amp two_spin_coeff(int c, int s1, int s2) {
  const Rational half(1, 2);
  switch (c) {
    case 0:
      if (s1 == 1 && s2 == 0) return Amp::sqrt_of(half);
      if (s1 == 0 && s2 == 1) return Amp::negative_sqrt_of(half);
      return Amp::zero();
    case 1: return (s1 == 0 && s2 == 0) ? Amp::one() : Amp::zero();
    case 2: return (s1 != s2) ? Amp::sqrt_of(half) : Amp::zero();
    default: return (s1 == 1 && s2 == 1) ? Amp::one() : Amp::zero();
  }
}

// The coupled basis vector |E, N> over the 16 ordered product labels.
inline Vec16 coupled_vector(int e_channel, int n_channel) {
  Vec16 v{};
  for (int p = 0; p < 16; ++p) {
    const int i = p / 4, j = p % 4;  // atom1, atom2 product labels
    const int e1 = i / 2, n1 = i % 2;
    const int e2 = j / 2, n2 = j % 2;
    v[p] = two_spin_coeff(e_channel, e1, e2) * two_spin_coeff(n_channel, n1, n2);
  }
  return v;
}

inline Amp dot(const Vec16& a, const Vec16& b) {
  Amp sum = Amp::zero();
  for (int i = 0; i < 16; ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    sum = sum + a[i] * b[i];
  }
  return sum;
}

inline Rational norm_squared(const Vec16& v) {
  Rational s = 0;
  for (const auto& a : v) s += a.square();
  return s;
}

// <v| P_{E,N} |v> with P = |E,N><E,N| applied explicitly.
inline Rational projector_weight(const Vec16& v, int e_channel, int n_channel) {
  const Vec16 basis = coupled_vector(e_channel, n_channel);
  const Amp c = dot(basis, v);
  Vec16 projected{};
  for (int i = 0; i < 16; ++i) projected[i] = basis[i] * c;
  const Amp sandwich = dot(v, projected);  // = c^2, non-negative
  if (sandwich.is_zero()) return 0;
  return hfshift::exact_sqrt(sandwich.square());
}

// Exchange-projected symmetric part (I + E)v / 2, unnormalized.
inline Vec16 symmetric_part(const Vec16& v) {
  const Vec16 ex = apply_exchange(v);
  Vec16 out{};
  for (int i = 0; i < 16; ++i)
    out[i] = (v[i] + ex[i]).divided_by_sqrt(4);  // divide by 2
  return out;
}

inline Vec16 antisymmetric_part(const Vec16& v) {
  const Vec16 ex = apply_exchange(v);
  Vec16 out{};
  for (int i = 0; i < 16; ++i)
    out[i] = (v[i] - ex[i]).divided_by_sqrt(4);
  return out;
}

// Electron singlet/triplet weights of a (not necessarily normalized) vector,
// restricted to the exchange-symmetric channels when symmetric_only is set,
// normalized by the vector's squared norm.
struct Weights {
  Rational electron_singlet;
  Rational electron_triplet;
};

inline Weights channel_weights(const Vec16& v, bool symmetric_only) {
  Rational w_es = 0, w_et = 0;
  for (int e = 0; e < 4; ++e) {
    for (int n = 0; n < 4; ++n) {
      if (symmetric_only) {
        const bool keep = (e == 0) ? (n == 0) : (n != 0);
        if (!keep) continue;
      }
      const Amp c = dot(coupled_vector(e, n), v);
      if (e == 0)
        w_es += c.square();
      else
        w_et += c.square();
    }
  }
  const Rational n2 = norm_squared(v);
  return {w_es / n2, w_et / n2};
}

}  // namespace oracle
