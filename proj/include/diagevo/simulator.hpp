// Copyright 2026 The diagevo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "diagevo/coupling_set.hpp"

namespace diagevo::simulator {

using Amplitude = std::complex<double>;
using spectrum::PhaseVector;

/// Normalized 2^n-amplitude state; basis index bit (i-1) is particle i.
class StateVector {
 public:
  /// Rejects states whose norm deviates from 1 by more than 1e-9.
  StateVector(unsigned n, std::vector<Amplitude> amplitudes);

  static StateVector basis(unsigned n, Mask index);

  unsigned n() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  Amplitude operator[](Mask x) const { return amps_[x]; }

  double norm() const;
  double probability(Mask x) const { return std::norm(amps_[x]); }
  std::vector<double> probabilities() const;

 private:
  unsigned n_;
  std::vector<Amplitude> amps_;
};

struct Histogram {
  std::uint64_t shots = 0;
  std::map<Mask, std::uint64_t> counts;
};

/// Inverse-CDF sampler over |amplitude|^2.
class Sampler {
 public:
  explicit Sampler(const StateVector &sv);
  Mask draw(std::mt19937_64 &rng) const;

 private:
  std::vector<double> cumulative_;
};

inline constexpr unsigned kDenseQftLimit = 20;

StateVector uniform(unsigned n);

/// amplitude[x] *= exp(i p(x)).
StateVector apply_phases(StateVector sv, const PhaseVector &p);

/// Single-particle Hadamard on particle i (1-based).
StateVector apply_hadamard(StateVector sv, unsigned i);

/// Hadamard on every particle (normalized Walsh-Hadamard transform).
StateVector hadamard_all(StateVector sv);

/// amplitude'[y] = q^{-1/2} sum_x exp(+-2 pi i x y / q) amplitude[x], with
/// '-' when `inverse`. With `bit_reversal` (the default) the output is in
/// natural order; without it the output index bits come out reversed, as
/// produced by the interleaved Hadamard / phase-shift schedule.
StateVector apply_qft(StateVector sv, bool inverse = false,
                      bool bit_reversal = true);

/// `shots` i.i.d. samples; deterministic for a given seed.
Histogram measure(const StateVector &sv, std::uint64_t shots,
                  std::uint64_t seed);

/// |<a|b>|^2
double fidelity(const StateVector &a, const StateVector &b);

}  // namespace diagevo::simulator
