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

#include "diagevo/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "diagevo/spectrum.hpp"

namespace diagevo::evolution {

double circle_distance(double a, double b) {
  return std::abs(spectrum::canonical_angle(a - b));
}

PhaseVector phases_of(const CouplingSet &cs) {
  std::vector<double> v(cs.angles().begin(), cs.angles().end());
  for (std::size_t s = 1; s < v.size(); ++s) v[s] = -v[s];
  spectrum::fwht_inplace(v);
  return PhaseVector(cs.n(), std::move(v));
}

PhaseVector phases_of_naive(const CouplingSet &cs) {
  if (cs.n() > 12) {
    throw ResourceLimit("naive reconstruction is limited to n <= 12");
  }
  const auto size = dim(cs.n());
  std::vector<double> out(size);
  for (Mask x = 0; x < size; ++x) {
    double p = cs.phi();
    for (Mask s = 1; s < size; ++s) {
      p -= cs.theta(s) * parity_sign(x, s);
    }
    out[x] = p;
  }
  return PhaseVector(cs.n(), std::move(out));
}

VerifyReport verify(const CouplingSet &cs, const PhaseVector &target,
                    double tol) {
  require(cs.n() == target.n(), "verify: width mismatch between coupling "
                                "set and target phases");
  const auto got = phases_of(cs);
  VerifyReport r;
  Mask worst = 0;
  for (Mask x = 0; x < got.size(); ++x) {
    const double d = circle_distance(got[x], target[x]);
    if (d > r.max_circle_error) {
      r.max_circle_error = d;
      worst = x;
    }
  }
  r.exact_pass = r.max_circle_error < tol;
  if (!r.exact_pass) {
    std::ostringstream os;
    os.precision(12);
    os << "largest deviation at x=" << worst << ": reconstructed "
       << got[worst] << " vs target " << target[worst];
    r.notes.push_back(os.str());
  }
  return r;
}

ResourceReport resources(const CouplingSet &cs, double threshold) {
  ResourceReport r;
  r.n = cs.n();
  r.per_order.assign(cs.n() + 1, 0);
  for (Mask s = 1; s < cs.angles().size(); ++s) {
    if (std::abs(cs.angles()[s]) > threshold) {
      const auto k = static_cast<unsigned>(popcount(s));
      ++r.per_order[k];
      ++r.nonzero_terms;
      r.max_order = std::max(r.max_order, k);
    }
  }
  return r;
}

}  // namespace diagevo::evolution
