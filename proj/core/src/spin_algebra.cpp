// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hfshift/spin_algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hfshift::spin {

namespace {

constexpr double kNormTolerance = 1e-12;

// Two-spin singlet/triplet transform. u4(c, s1, s2) is the coefficient of the
// ordered product |s1 s2> in channel c:
//   singlet     = (|ud> - |du>)/sqrt(2)
//   triplet(-1) = |dd>,  triplet(0) = (|ud> + |du>)/sqrt(2),  triplet(+1) = |uu>
Amplitude u4(Channel c, Projection s1, Projection s2) {
  const bool up1 = s1 == Projection::Up;
  const bool up2 = s2 == Projection::Up;
  const Rational half(1, 2);
  switch (c) {
    case Channel::Singlet:
      if (up1 && !up2) return Amplitude::sqrt_of(half);
      if (!up1 && up2) return Amplitude::negative_sqrt_of(half);
      return Amplitude::zero();
    case Channel::TripletMinus:
      return (!up1 && !up2) ? Amplitude::one() : Amplitude::zero();
    case Channel::TripletZero:
      if (up1 != up2) return Amplitude::sqrt_of(half);
      return Amplitude::zero();
    case Channel::TripletPlus:
      return (up1 && up2) ? Amplitude::one() : Amplitude::zero();
  }
  return Amplitude::zero();
}

void require_atom_dim(const Ket& k, const char* op) {
  if (k.dim() != kAtomDim)
    throw std::invalid_argument(std::string(op) + ": expected a 4-dim atom ket");
}

void require_pair_dim(const Ket& k, const char* op) {
  if (k.dim() != kPairDim)
    throw std::invalid_argument(std::string(op) + ": expected a 16-dim pair ket");
}

}  // namespace

AtomLabel AtomLabel::from_index(int i) {
  if (i < 0 || i >= kAtomDim)
    throw std::out_of_range("AtomLabel index out of range");
  return {static_cast<Projection>(i / 2), static_cast<Projection>(i % 2)};
}

std::string AtomLabel::name() const {
  std::string s;
  s += electron == Projection::Up ? 'u' : 'd';
  s += nuclear == Projection::Up ? 'U' : 'D';
  return s;
}

PairLabel PairLabel::from_index(int i) {
  if (i < 0 || i >= kPairDim)
    throw std::out_of_range("PairLabel index out of range");
  return {AtomLabel::from_index(i / kAtomDim), AtomLabel::from_index(i % kAtomDim)};
}

std::string PairLabel::name() const { return first.name() + "," + second.name(); }

CoupledLabel CoupledLabel::from_index(int i) {
  if (i < 0 || i >= kPairDim)
    throw std::out_of_range("CoupledLabel index out of range");
  return {static_cast<Channel>(i / kAtomDim), static_cast<Channel>(i % kAtomDim)};
}

namespace {
std::string channel_name(char prefix, Channel c) {
  switch (c) {
    case Channel::Singlet: return std::string(1, prefix) + "_s";
    case Channel::TripletMinus: return std::string(1, prefix) + "_t(-1)";
    case Channel::TripletZero: return std::string(1, prefix) + "_t(0)";
    case Channel::TripletPlus: return std::string(1, prefix) + "_t(+1)";
  }
  return {};
}
}  // namespace

std::string CoupledLabel::name() const {
  return channel_name('e', electron) + " " + channel_name('n', nuclear);
}

Ket::Ket(int dim) : dim_(dim), zero_(true), amps_{} {}

Ket::Ket(int dim, std::array<Amplitude, kPairDim> amps)
    : dim_(dim), zero_(false), amps_(std::move(amps)) {
  const double norm = to_double(norm_squared());
  if (std::abs(norm - 1.0) > kNormTolerance)
    throw std::invalid_argument("Ket: amplitudes are not normalized");
}

Ket Ket::atom_basis(AtomLabel label) {
  std::array<Amplitude, kPairDim> amps{};
  amps[label.index()] = Amplitude::one();
  return Ket(kAtomDim, amps);
}

Ket Ket::pair_basis(PairLabel label) {
  std::array<Amplitude, kPairDim> amps{};
  amps[label.index()] = Amplitude::one();
  return Ket(kPairDim, amps);
}

Ket Ket::atom(const std::array<Amplitude, kAtomDim>& amplitudes) {
  std::array<Amplitude, kPairDim> amps{};
  for (int i = 0; i < kAtomDim; ++i) amps[i] = amplitudes[i];
  return Ket(kAtomDim, amps);
}

Ket Ket::pair(const std::array<Amplitude, kPairDim>& amplitudes) {
  return Ket(kPairDim, amplitudes);
}

const Amplitude& Ket::amp(int index) const {
  if (index < 0 || index >= dim_)
    throw std::out_of_range("Ket::amp: index out of range");
  return amps_[index];
}

Rational Ket::norm_squared() const {
  Rational sum = 0;
  for (int i = 0; i < dim_; ++i) sum += amps_[i].square();
  return sum;
}

std::string Ket::str() const {
  if (zero_) return "0";
  std::string out;
  for (int i = 0; i < dim_; ++i) {
    if (amps_[i].is_zero()) continue;
    if (!out.empty()) out += " ";
    const std::string label = dim_ == kAtomDim ? AtomLabel::from_index(i).name()
                                               : PairLabel::from_index(i).name();
    out += amps_[i].str() + "·|" + label + "⟩";
  }
  return out;
}

bool Ket::operator==(const Ket& other) const {
  if (dim_ != other.dim_ || zero_ != other.zero_) return false;
  for (int i = 0; i < dim_; ++i)
    if (amps_[i] != other.amps_[i]) return false;
  return true;
}

Ket tensor(const Ket& left, const Ket& right) {
  require_atom_dim(left, "tensor");
  require_atom_dim(right, "tensor");
  if (left.is_zero() || right.is_zero()) return Ket::zero_pair();
  std::array<Amplitude, kPairDim> amps{};
  for (int p = 0; p < kAtomDim; ++p)
    for (int q = 0; q < kAtomDim; ++q)
      amps[kAtomDim * p + q] = left.amp(p) * right.amp(q);
  return Ket::pair(amps);
}

namespace {

Ket combine_exchanged(const Ket& a, const Ket& b, int parity) {
  // (|ab> +- |ba>) renormalized; explicit zero ket if the sum vanishes.
  std::array<Amplitude, kPairDim> raw{};
  Rational norm2 = 0;
  bool all_zero = true;
  for (int p = 0; p < kAtomDim; ++p) {
    for (int q = 0; q < kAtomDim; ++q) {
      const Amplitude ab = a.amp(p) * b.amp(q);
      const Amplitude ba = b.amp(p) * a.amp(q);
      const Amplitude sum = parity > 0 ? ab + ba : ab - ba;
      raw[kAtomDim * p + q] = sum;
      norm2 += sum.square();
      all_zero = all_zero && sum.is_zero();
    }
  }
  if (all_zero || norm2 == 0) return Ket::zero_pair();
  for (auto& amp : raw) amp = amp.divided_by_sqrt(norm2);
  return Ket::pair(raw);
}

}  // namespace

Ket symmetrize(const Ket& a, const Ket& b) {
  require_atom_dim(a, "symmetrize");
  require_atom_dim(b, "symmetrize");
  return combine_exchanged(a, b, +1);
}

Ket antisymmetrize(const Ket& a, const Ket& b) {
  require_atom_dim(a, "antisymmetrize");
  require_atom_dim(b, "antisymmetrize");
  return combine_exchanged(a, b, -1);
}

Ket swap_atoms(const Ket& pair_ket) {
  require_pair_dim(pair_ket, "swap_atoms");
  if (pair_ket.is_zero()) return Ket::zero_pair();
  std::array<Amplitude, kPairDim> amps{};
  for (int i = 0; i < kPairDim; ++i) {
    const PairLabel label = PairLabel::from_index(i);
    amps[label.swapped().index()] = pair_ket.amp(i);
  }
  return Ket::pair(amps);
}

CoupledAmplitudes to_coupled(const Ket& pair_ket) {
  require_pair_dim(pair_ket, "to_coupled");
  CoupledAmplitudes out{};
  if (pair_ket.is_zero()) return out;
  for (int li = 0; li < kPairDim; ++li) {
    const CoupledLabel cl = CoupledLabel::from_index(li);
    Amplitude c = Amplitude::zero();
    for (int pi = 0; pi < kPairDim; ++pi) {
      const PairLabel pl = PairLabel::from_index(pi);
      const Amplitude m = u4(cl.electron, pl.first.electron, pl.second.electron) *
                          u4(cl.nuclear, pl.first.nuclear, pl.second.nuclear);
      if (m.is_zero() || pair_ket.amp(pi).is_zero()) continue;
      c = c + m * pair_ket.amp(pi);
    }
    out.coeff[li] = c;
  }
  return out;
}

Ket from_coupled(const CoupledAmplitudes& coupled) {
  std::array<Amplitude, kPairDim> amps{};
  bool all_zero = true;
  for (int pi = 0; pi < kPairDim; ++pi) {
    const PairLabel pl = PairLabel::from_index(pi);
    Amplitude a = Amplitude::zero();
    for (int li = 0; li < kPairDim; ++li) {
      if (coupled.coeff[li].is_zero()) continue;
      const CoupledLabel cl = CoupledLabel::from_index(li);
      const Amplitude m = u4(cl.electron, pl.first.electron, pl.second.electron) *
                          u4(cl.nuclear, pl.first.nuclear, pl.second.nuclear);
      if (m.is_zero()) continue;
      a = a + m * coupled.coeff[li];
    }
    amps[pi] = a;
    all_zero = all_zero && a.is_zero();
  }
  if (all_zero) return Ket::zero_pair();
  return Ket::pair(amps);
}

std::string CoupledAmplitudes::str() const {
  std::string out;
  for (int i = 0; i < kPairDim; ++i) {
    if (coeff[i].is_zero()) continue;
    if (!out.empty()) out += " ";
    out += coeff[i].str() + "·|" + CoupledLabel::from_index(i).name() + "⟩";
  }
  return out.empty() ? "0" : out;
}

ChannelWeights channel_weights(const Ket& pair_ket, ChannelFilter filter) {
  require_pair_dim(pair_ket, "channel_weights");
  if (pair_ket.is_zero())
    throw std::domain_error("channel_weights: undefined for the zero ket");
  const CoupledAmplitudes coupled = to_coupled(pair_ket);
  Rational w_es = 0, w_et = 0;
  for (int i = 0; i < kPairDim; ++i) {
    const CoupledLabel label = CoupledLabel::from_index(i);
    if (filter == ChannelFilter::ExchangeSymmetric) {
      const bool keep = (label.electron == Channel::Singlet)
                            ? label.nuclear == Channel::Singlet
                            : is_triplet(label.nuclear);
      if (!keep) continue;
    }
    const Rational w = coupled.coeff[i].square();
    if (label.electron == Channel::Singlet)
      w_es += w;
    else
      w_et += w;
  }
  const Rational norm2 = pair_ket.norm_squared();
  return {w_es / norm2, w_et / norm2};
}

double overlap(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("overlap: dimension mismatch");
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) sum += a.amp(i).value() * b.amp(i).value();
  return sum;
}

}  // namespace hfshift::spin
