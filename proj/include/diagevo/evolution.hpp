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

#include <string>
#include <vector>

#include "diagevo/coupling_set.hpp"

namespace diagevo::evolution {

using spectrum::CouplingSet;
using spectrum::PhaseVector;

/// Threshold below which an angle counts as absent.
inline constexpr double kZeroThreshold = 1e-12;

/// Term structure of a compiled Hamiltonian.
struct ResourceReport {
  unsigned n = 0;
  std::size_t nonzero_terms = 0;
  unsigned max_order = 0;
  /// per_order[k] = number of nonzero k-particle terms, k = 0..n.
  std::vector<std::size_t> per_order;
  /// One-time evolutions needed (1 for a single set; n for the QFT schedule).
  unsigned evolutions = 1;
};

struct VerifyReport {
  /// Max over x of the distance on the circle between reconstructed and
  /// target phase, in [0, pi].
  double max_circle_error = 0.0;
  bool exact_pass = false;
  std::vector<std::string> notes;
};

/// Distance between two angles modulo 2pi, in [0, pi].
double circle_distance(double a, double b);

/// Diagonal of the one-time evolution:
///   phase(x) = phi - sum_{S != 0} theta[S] (-1)^{popcount(x & S)},
/// via one Walsh-Hadamard transform.
PhaseVector phases_of(const CouplingSet &cs);

/// Same contract as phases_of by a direct double loop; n <= 12.
PhaseVector phases_of_naive(const CouplingSet &cs);

VerifyReport verify(const CouplingSet &cs, const PhaseVector &target,
                    double tol = 1e-9);

ResourceReport resources(const CouplingSet &cs,
                         double threshold = kZeroThreshold);

}  // namespace diagevo::evolution
