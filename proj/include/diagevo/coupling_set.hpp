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

#include <span>
#include <vector>

#include "diagevo/bits.hpp"
#include "diagevo/error.hpp"

namespace diagevo::spectrum {

/// Wraps an angle into (-pi, pi].
double canonical_angle(double a);

/// Target or reconstructed phases, one per basis state x (radians).
class PhaseVector {
 public:
  PhaseVector(unsigned n, std::vector<double> phases);

  unsigned n() const { return n_; }
  std::size_t size() const { return phases_.size(); }
  std::span<const double> phases() const { return phases_; }
  double operator[](Mask x) const { return phases_[x]; }

 private:
  unsigned n_;
  std::vector<double> phases_;
};

/// Compiled diagonal Hamiltonian: a global phase phi plus one dimensionless
/// angle (coupling strength times evolution time) per nonempty particle
/// subset S. Storage is dense and indexed by subset mask; slot 0 holds phi.
///
/// Angles are stored as given. Use canonical() for the (-pi, pi] form;
/// compose() always returns canonical sets.
class CouplingSet {
 public:
  /// All-zero set on n particles.
  explicit CouplingSet(unsigned n);
  /// `angles[0]` is phi, `angles[S]` the angle of subset S.
  CouplingSet(unsigned n, std::vector<double> angles);

  unsigned n() const { return n_; }
  double phi() const { return angles_[0]; }
  double theta(Mask s) const;
  void set_phi(double v);
  void set_theta(Mask s, double v);

  /// Dense view including phi at index 0.
  std::span<const double> angles() const { return angles_; }

  CouplingSet canonical() const;

  /// Largest |S| with |theta[S]| > threshold (0 if none).
  unsigned max_order(double threshold = 1e-12) const;

  bool operator==(const CouplingSet &) const = default;

 private:
  unsigned n_;
  std::vector<double> angles_;
};

/// Sum of angles, canonicalized. Realizes the product of the two diagonal
/// unitaries.
CouplingSet compose(const CouplingSet &a, const CouplingSet &b);

/// Inverse evolution: every angle negated.
CouplingSet negate(const CouplingSet &cs);

}  // namespace diagevo::spectrum
