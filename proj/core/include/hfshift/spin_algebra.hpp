// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hfshift/amplitude.hpp"
#include "hfshift/rational.hpp"

#include <array>
#include <compare>
#include <string>

// Exact algebra of one- and two-atom spin-1/2 x spin-1/2 states: tensor
// products, exchange (anti)symmetrization, and the decomposition of pair
// states into electron/nuclear singlet-triplet channels.
//
// Phase convention (fixed for the whole library):
//   singlet     = (|ud> - |du>) / sqrt(2)
//   triplet(0)  = (|ud> + |du>) / sqrt(2)
// for both the electron and the nuclear pair, with the first-listed atom as
// atom 1. Product labels are ordered (dD, dU, uD, uU) for a single atom and
// lexicographically (atom1, atom2) for pairs; d/u = electron down/up,
// D/U = nuclear down/up.
namespace hfshift::spin {

inline constexpr int kAtomDim = 4;
inline constexpr int kPairDim = 16;

enum class Projection : int { Down = 0, Up = 1 };

/// Single-atom product-basis label |electron nuclear>.
struct AtomLabel {
  Projection electron = Projection::Down;
  Projection nuclear = Projection::Down;

  int index() const {
    return 2 * static_cast<int>(electron) + static_cast<int>(nuclear);
  }
  static AtomLabel from_index(int i);
  std::string name() const;  // "dD", "dU", "uD", "uU"
  auto operator<=>(const AtomLabel&) const = default;
};

/// Ordered pair label |atom1, atom2>.
struct PairLabel {
  AtomLabel first;
  AtomLabel second;

  int index() const { return kAtomDim * first.index() + second.index(); }
  static PairLabel from_index(int i);
  PairLabel swapped() const { return {second, first}; }
  std::string name() const;  // "dU,uD"
  auto operator<=>(const PairLabel&) const = default;
};

enum class Channel : int {
  Singlet = 0,
  TripletMinus = 1,
  TripletZero = 2,
  TripletPlus = 3,
};

inline bool is_triplet(Channel c) { return c != Channel::Singlet; }

/// Exchange parity of the two-spin channel: -1 for the singlet, +1 for any
/// triplet component.
inline int channel_parity(Channel c) { return is_triplet(c) ? 1 : -1; }

/// Coupled pair label: electron channel x nuclear channel.
struct CoupledLabel {
  Channel electron = Channel::Singlet;
  Channel nuclear = Channel::Singlet;

  int index() const {
    return kAtomDim * static_cast<int>(electron) + static_cast<int>(nuclear);
  }
  static CoupledLabel from_index(int i);
  std::string name() const;  // "e_t(-1) n_t(0)", "e_s n_s", ...

  /// Parity under exchange of the two atoms (both spins swap).
  int exchange_parity() const {
    return channel_parity(electron) * channel_parity(nuclear);
  }
  auto operator<=>(const CoupledLabel&) const = default;
};

/// Normalized spin state over the 4-dim atom basis or the 16-dim pair basis,
/// with exact amplitudes. The zero ket carries an explicit flag and is never
/// silently renormalized.
class Ket {
 public:
  static Ket atom_basis(AtomLabel label);
  static Ket pair_basis(PairLabel label);
  static Ket atom(const std::array<Amplitude, kAtomDim>& amplitudes);
  static Ket pair(const std::array<Amplitude, kPairDim>& amplitudes);
  static Ket zero_atom() { return Ket(kAtomDim); }
  static Ket zero_pair() { return Ket(kPairDim); }

  int dim() const { return dim_; }
  bool is_zero() const { return zero_; }

  const Amplitude& amp(int index) const;
  const Amplitude& amp(AtomLabel label) const { return amp(label.index()); }
  const Amplitude& amp(PairLabel label) const { return amp(label.index()); }

  /// Sum of squared amplitudes, exact. 1 for any nonzero ket produced by the
  /// algebra; the factory constructors accept anything within 1e-12 of 1 to
  /// admit floating-point eigenvectors.
  Rational norm_squared() const;

  /// Terms "<amp>*|label>" in canonical label order, zero terms skipped.
  std::string str() const;

  bool operator==(const Ket& other) const;

 private:
  explicit Ket(int dim);  // zero ket
  Ket(int dim, std::array<Amplitude, kPairDim> amps);

  int dim_;
  bool zero_;
  std::array<Amplitude, kPairDim> amps_;
};

/// |left> (x) |right>: amplitude of (p,q) is amp_left(p)*amp_right(q).
/// Inputs must both be 4-dim; throws std::invalid_argument otherwise.
Ket tensor(const Ket& left, const Ket& right);

/// (|ab> + |ba>) / norm; returns the flagged zero ket when the sum vanishes,
/// a normalized pair ket otherwise. For a = b this is just |aa>.
Ket symmetrize(const Ket& a, const Ket& b);

/// (|ab> - |ba>) / norm with the same zero-ket contract; identically zero
/// for a = b.
Ket antisymmetrize(const Ket& a, const Ket& b);

/// Exchange of the two atoms: amplitude (i,j) -> (j,i).
Ket swap_atoms(const Ket& pair_ket);

/// Coefficients of a pair ket over the 16 coupled labels.
struct CoupledAmplitudes {
  std::array<Amplitude, kPairDim> coeff;

  const Amplitude& at(CoupledLabel label) const { return coeff[label.index()]; }
  Rational weight(CoupledLabel label) const { return at(label).square(); }
  std::string str() const;
};

/// Change of basis product -> coupled under the fixed phase convention; the
/// transform is orthogonal with entries in {0, +-1, +-1/sqrt(2), +-1/2}.
CoupledAmplitudes to_coupled(const Ket& pair_ket);

/// Inverse basis change; round-trips exactly.
Ket from_coupled(const CoupledAmplitudes& coupled);

enum class ChannelFilter {
  All,                // every coupled component
  ExchangeSymmetric,  // only (e_t, n_t) and (e_s, n_s): the components that
                      // survive in s-wave contact matrix elements
};

/// Squared weight in the electron-singlet vs electron-triplet channels,
/// normalized by the ket's squared norm. Unrestricted weights sum to 1;
/// with ChannelFilter::ExchangeSymmetric each weight can only shrink.
/// Throws std::domain_error for the zero ket.
struct ChannelWeights {
  Rational electron_singlet;  // w_es
  Rational electron_triplet;  // w_et
};
ChannelWeights channel_weights(const Ket& pair_ket,
                               ChannelFilter filter = ChannelFilter::All);

/// Floating-point inner product <a|b> (works for any pair of same-dim kets).
double overlap(const Ket& a, const Ket& b);

}  // namespace hfshift::spin
