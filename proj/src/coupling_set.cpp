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

#include "diagevo/coupling_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace diagevo::spectrum {

double canonical_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

PhaseVector::PhaseVector(unsigned n, std::vector<double> phases)
    : n_(n), phases_(std::move(phases)) {
  check_width(n_);
  require(phases_.size() == dim(n_), "phase vector needs 2^n entries");
  for (double p : phases_) require(std::isfinite(p), "phase is not finite");
}

CouplingSet::CouplingSet(unsigned n) : n_(n) {
  check_width(n_);
  angles_.assign(dim(n_), 0.0);
}

CouplingSet::CouplingSet(unsigned n, std::vector<double> angles)
    : n_(n), angles_(std::move(angles)) {
  check_width(n_);
  require(angles_.size() == dim(n_),
          "coupling set needs 2^n slots (phi plus 2^n - 1 subsets)");
  for (double a : angles_) require(std::isfinite(a), "angle is not finite");
}

double CouplingSet::theta(Mask s) const {
  require(s >= 1 && s < dim(n_), "subset mask " + std::to_string(s) +
                                     " out of range for n=" +
                                     std::to_string(n_));
  return angles_[s];
}

void CouplingSet::set_phi(double v) {
  require(std::isfinite(v), "phi is not finite");
  angles_[0] = v;
}

void CouplingSet::set_theta(Mask s, double v) {
  require(s >= 1 && s < dim(n_), "subset mask " + std::to_string(s) +
                                     " out of range for n=" +
                                     std::to_string(n_));
  require(std::isfinite(v), "angle is not finite");
  angles_[s] = v;
}

CouplingSet CouplingSet::canonical() const {
  CouplingSet out(*this);
  for (auto &a : out.angles_) a = canonical_angle(a);
  return out;
}

unsigned CouplingSet::max_order(double threshold) const {
  unsigned best = 0;
  for (Mask s = 1; s < angles_.size(); ++s) {
    if (std::abs(angles_[s]) > threshold) {
      best = std::max(best, static_cast<unsigned>(popcount(s)));
    }
  }
  return best;
}

CouplingSet compose(const CouplingSet &a, const CouplingSet &b) {
  require(a.n() == b.n(), "cannot compose coupling sets of different width");
  std::vector<double> sum(a.angles().begin(), a.angles().end());
  for (std::size_t s = 0; s < sum.size(); ++s) {
    sum[s] = canonical_angle(sum[s] + b.angles()[s]);
  }
  return CouplingSet(a.n(), std::move(sum));
}

CouplingSet negate(const CouplingSet &cs) {
  std::vector<double> neg(cs.angles().begin(), cs.angles().end());
  for (auto &v : neg) v = -v;
  return CouplingSet(cs.n(), std::move(neg));
}

}  // namespace diagevo::spectrum
