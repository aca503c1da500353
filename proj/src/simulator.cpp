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

#include "diagevo/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace diagevo::simulator {

namespace {

constexpr double kNormTolerance = 1e-9;

void same_width(const StateVector &a, unsigned n, const char *what) {
  require(a.n() == n, std::string(what) + ": width mismatch");
}

}  // namespace

StateVector::StateVector(unsigned n, std::vector<Amplitude> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  check_width(n_);
  require(amps_.size() == dim(n_), "state vector needs 2^n amplitudes");
  require(std::abs(norm() - 1.0) <= kNormTolerance,
          "state vector is not normalized");
}

StateVector StateVector::basis(unsigned n, Mask index) {
  check_width(n);
  require(index < dim(n), "basis index out of range");
  std::vector<Amplitude> a(dim(n));
  a[index] = 1.0;
  return StateVector(n, std::move(a));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto &a : amps_) s += std::norm(a);
  return s;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  std::transform(amps_.begin(), amps_.end(), p.begin(),
                 [](const Amplitude &a) { return std::norm(a); });
  return p;
}

Sampler::Sampler(const StateVector &sv) : cumulative_(sv.size()) {
  double acc = 0.0;
  for (Mask x = 0; x < sv.size(); ++x) {
    acc += sv.probability(x);
    cumulative_[x] = acc;
  }
}

Mask Sampler::draw(std::mt19937_64 &rng) const {
  std::uniform_real_distribution<double> u(0.0, cumulative_.back());
  const double r = u(rng);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
  if (it == cumulative_.end()) --it;
  return static_cast<Mask>(it - cumulative_.begin());
}

StateVector uniform(unsigned n) {
  check_width(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(dim(n)));
  return StateVector(n, std::vector<Amplitude>(dim(n), Amplitude(a, 0.0)));
}

StateVector apply_phases(StateVector sv, const PhaseVector &p) {
  same_width(sv, p.n(), "apply_phases");
  auto amps = sv.amplitudes();
  for (Mask x = 0; x < amps.size(); ++x) {
    amps[x] *= std::polar(1.0, p[x]);
  }
  return sv;
}

StateVector apply_hadamard(StateVector sv, unsigned i) {
  require(i >= 1 && i <= sv.n(), "Hadamard particle index " +
                                     std::to_string(i) + " out of range");
  const Mask bit = Mask{1} << (i - 1);
  const double r = 1.0 / std::sqrt(2.0);
  auto amps = sv.amplitudes();
  for (Mask x = 0; x < amps.size(); ++x) {
    if (x & bit) continue;
    const Amplitude a = amps[x];
    const Amplitude b = amps[x | bit];
    amps[x] = r * (a + b);
    amps[x | bit] = r * (a - b);
  }
  return sv;
}

StateVector hadamard_all(StateVector sv) {
  auto amps = sv.amplitudes();
  for (std::size_t half = 1; half < amps.size(); half <<= 1) {
    for (std::size_t block = 0; block < amps.size(); block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const Amplitude a = amps[i];
        const Amplitude b = amps[i + half];
        amps[i] = a + b;
        amps[i + half] = a - b;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(amps.size()));
  for (auto &a : amps) a *= scale;
  return sv;
}

StateVector apply_qft(StateVector sv, bool inverse, bool bit_reversal) {
  if (sv.n() > kDenseQftLimit) {
    throw ResourceLimit("dense QFT is limited to n <= " +
                        std::to_string(kDenseQftLimit));
  }
  const unsigned n = sv.n();
  auto amps = sv.amplitudes();
  const std::size_t q = amps.size();

  // Iterative radix-2 transform: permute, then butterflies.
  for (Mask x = 0; x < q; ++x) {
    const Mask r = reverse_bits(x, n);
    if (x < r) std::swap(amps[x], amps[r]);
  }
  const double sign = inverse ? -1.0 : 1.0;
  for (std::size_t len = 2; len <= q; len <<= 1) {
    const double ang = sign * 2.0 * kPi / static_cast<double>(len);
    for (std::size_t start = 0; start < q; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Amplitude w = std::polar(1.0, ang * static_cast<double>(k));
        const Amplitude a = amps[start + k];
        const Amplitude b = w * amps[start + k + len / 2];
        amps[start + k] = a + b;
        amps[start + k + len / 2] = a - b;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  for (auto &a : amps) a *= scale;

  if (!bit_reversal) {
    for (Mask y = 0; y < q; ++y) {
      const Mask r = reverse_bits(y, n);
      if (y < r) std::swap(amps[y], amps[r]);
    }
  }
  return sv;
}

Histogram measure(const StateVector &sv, std::uint64_t shots,
                  std::uint64_t seed) {
  require(shots >= 1, "measure needs at least one shot");
  const Sampler sampler(sv);
  std::mt19937_64 rng(seed);
  Histogram h;
  h.shots = shots;
  for (std::uint64_t i = 0; i < shots; ++i) ++h.counts[sampler.draw(rng)];
  return h;
}

double fidelity(const StateVector &a, const StateVector &b) {
  same_width(a, b.n(), "fidelity");
  Amplitude inner = 0.0;
  for (Mask x = 0; x < a.size(); ++x) inner += std::conj(a[x]) * b[x];
  return std::min(1.0, std::norm(inner));
}

}  // namespace diagevo::simulator
