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

#include "diagevo/spectrum.hpp"

#include <cmath>
#include <string>

namespace diagevo::spectrum {

void fwht_inplace(std::span<double> v) {
  require(is_power_of_two(v.size()),
          "FWHT length " + std::to_string(v.size()) +
              " is not a power of two");
  for (std::size_t half = 1; half < v.size(); half <<= 1) {
    for (std::size_t block = 0; block < v.size(); block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const double a = v[i];
        const double b = v[i + half];
        v[i] = a + b;
        v[i + half] = a - b;
      }
    }
  }
}

std::vector<double> fwht(std::vector<double> v) {
  fwht_inplace(v);
  return v;
}

CouplingSet compile_phase_function(const PhaseVector &p) {
  std::vector<double> w(p.phases().begin(), p.phases().end());
  fwht_inplace(w);
  const double inv = std::ldexp(1.0, -static_cast<int>(p.n()));
  w[0] *= inv;
  for (std::size_t s = 1; s < w.size(); ++s) w[s] *= -inv;
  return CouplingSet(p.n(), std::move(w));
}

double default_scale(const boolfn::TruthTable &tt) {
  return std::ldexp(kPi, 1 - static_cast<int>(tt.m()));
}

double modular_scale(std::uint64_t N) {
  require(N >= 1, "modulus must be positive");
  return kPi / (2.0 * static_cast<double>(N));
}

CouplingSet compile_boolean(const boolfn::TruthTable &tt, double scale) {
  require(std::isfinite(scale), "phase scale is not finite");
  std::vector<double> phases(tt.size());
  for (std::size_t x = 0; x < phases.size(); ++x) {
    phases[x] = scale * static_cast<double>(tt[x]);
  }
  return compile_phase_function(PhaseVector(tt.n(), std::move(phases)));
}

CouplingSet compile_boolean(const boolfn::TruthTable &tt) {
  return compile_boolean(tt, default_scale(tt));
}

CouplingSet reduce_balanced(const boolfn::TruthTable &tt) {
  if (boolfn::classify_promise(tt) != boolfn::PromiseClass::Balanced) {
    throw InvalidArgument("reduce_balanced needs a balanced Boolean table");
  }
  require(tt.n() >= 2,
          "balanced reduction needs n >= 2 (the substitution uses x_1 x_2)");
  std::vector<double> phases(tt.size());
  for (Mask x = 0; x < tt.size(); ++x) {
    const double nx = static_cast<double>(x & 1U) *
                      static_cast<double>((x >> 1) & 1U);
    const double g = static_cast<double>(tt[x]) - 2.0 * nx;
    phases[x] = kPi * parity_sign(x, ~Mask{0}) * g;
  }
  return compile_phase_function(PhaseVector(tt.n(), std::move(phases)));
}

CouplingSet grover_couplings(unsigned n, Mask t) {
  check_width(n);
  require(t < dim(n), "marked index " + std::to_string(t) +
                          " out of range for n=" + std::to_string(n));
  const double step = std::ldexp(kPi, -static_cast<int>(n));
  std::vector<double> angles(dim(n));
  angles[0] = step;
  for (Mask s = 1; s < angles.size(); ++s) {
    angles[s] = -step * parity_sign(t, s);
  }
  return CouplingSet(n, std::move(angles));
}

namespace {

void check_shor_args(std::uint64_t a, std::uint64_t N, unsigned n) {
  require(N >= 3 && (N & 1U), "modulus N must be odd and at least 3");
  require(a >= 1 && a < N, "base a must lie in [1, N)");
  require(boolfn::gcd(a, N) == 1, "base a=" + std::to_string(a) +
                                      " is not coprime to N=" +
                                      std::to_string(N));
  check_width(n);
  require(dim(n) >= N * N, "register too small: need 2^n >= N^2");
}

// Fills out[S] = prod_{i in S} lo_i * prod_{i not in S} hi_i for all masks S.
template <typename T>
std::vector<T> subset_products(const std::vector<T> &lo,
                               const std::vector<T> &hi) {
  std::vector<T> out(std::size_t{1} << lo.size());
  out[0] = 1;
  std::size_t filled = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    for (std::size_t s = 0; s < filled; ++s) {
      out[s + filled] = out[s] * lo[i];
      out[s] = out[s] * hi[i];
    }
    filled <<= 1;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> shor_lambdas(std::uint64_t a, std::uint64_t N,
                                        unsigned n) {
  check_shor_args(a, N, n);
  std::vector<std::uint64_t> lambdas(n);
  std::uint64_t cur = a % N;
  for (unsigned i = 0; i < n; ++i) {
    lambdas[i] = cur;
    cur = cur * cur % N;
  }
  return lambdas;
}

std::vector<std::uint64_t> shor_product_values(std::uint64_t a,
                                               std::uint64_t N, unsigned n) {
  const auto lambdas = shor_lambdas(a, N, n);
  double log_max = 0.0;
  for (auto l : lambdas) log_max += std::log2(static_cast<double>(l));
  if (log_max >= 63.0) {
    throw ResourceLimit("integer product of lambdas exceeds 64 bits");
  }
  std::vector<std::uint64_t> ones(n, 1);
  return subset_products(lambdas, ones);
}

CouplingSet shor_couplings(std::uint64_t a, std::uint64_t N, unsigned n) {
  const auto lambdas = shor_lambdas(a, N, n);
  const double prefactor =
      modular_scale(N) * std::ldexp(1.0, -static_cast<int>(n));

  double log_bound = 0.0;
  for (auto l : lambdas) log_bound += std::log2(static_cast<double>(l + 1));

  std::vector<double> angles(dim(n));
  if (log_bound < 126.0) {
    // prod (1 +- lambda_i) is exact in 128-bit integers.
    std::vector<__int128> lo(n), hi(n);
    for (unsigned i = 0; i < n; ++i) {
      lo[i] = 1 - static_cast<__int128>(lambdas[i]);
      hi[i] = 1 + static_cast<__int128>(lambdas[i]);
    }
    const auto prods = subset_products(lo, hi);
    for (std::size_t s = 0; s < prods.size(); ++s) {
      angles[s] = prefactor * static_cast<double>(prods[s]);
    }
  } else {
    std::vector<long double> lo(n), hi(n);
    for (unsigned i = 0; i < n; ++i) {
      lo[i] = 1.0L - static_cast<long double>(lambdas[i]);
      hi[i] = 1.0L + static_cast<long double>(lambdas[i]);
    }
    const auto prods = subset_products(lo, hi);
    for (std::size_t s = 0; s < prods.size(); ++s) {
      angles[s] = static_cast<double>(prefactor * prods[s]);
    }
  }
  for (std::size_t s = 1; s < angles.size(); ++s) angles[s] = -angles[s];
  return CouplingSet(n, std::move(angles));
}

namespace {

void check_pair(unsigned j, unsigned k, unsigned n) {
  check_width(n);
  require(j >= 1 && j < k && k <= n,
          "controlled phase shift needs 1 <= j < k <= n, got j=" +
              std::to_string(j) + " k=" + std::to_string(k) +
              " n=" + std::to_string(n));
}

double cps_angle(unsigned j, unsigned k) {
  return std::ldexp(kPi, -static_cast<int>(k - j));
}

}  // namespace

CouplingSet cps_couplings(unsigned j, unsigned k, unsigned n) {
  check_pair(j, k, n);
  const double q = cps_angle(j, k) / 4.0;
  const Mask bj = Mask{1} << (j - 1);
  const Mask bk = Mask{1} << (k - 1);
  CouplingSet cs(n);
  cs.set_phi(q);
  cs.set_theta(bj, q);
  cs.set_theta(bk, q);
  cs.set_theta(bj | bk, -q);
  return cs;
}

CouplingSet cps_product_couplings(unsigned l, unsigned l_hi, unsigned n) {
  check_pair(l, l_hi, n);
  CouplingSet acc(n);
  for (unsigned m = l + 1; m <= l_hi; ++m) {
    acc = compose(acc, cps_couplings(l, m, n));
  }
  return acc;
}

CouplingSet quoted_cps_couplings(unsigned j, unsigned k, unsigned n) {
  check_pair(j, k, n);
  const double h = cps_angle(j, k) / 2.0;
  const Mask bj = Mask{1} << (j - 1);
  const Mask bk = Mask{1} << (k - 1);
  CouplingSet cs(n);
  // phi chosen so the |0...0> phase is zero.
  cs.set_phi(-h);
  cs.set_theta(bj, -h);
  cs.set_theta(bk, -h);
  cs.set_theta(bj | bk, h);
  return cs;
}

}  // namespace diagevo::spectrum
