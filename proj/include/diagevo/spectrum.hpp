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

#include <cstdint>
#include <span>
#include <vector>

#include "diagevo/coupling_set.hpp"
#include "diagevo/truth_table.hpp"

namespace diagevo::spectrum {

/// In-place unnormalized Walsh-Hadamard transform:
/// out[S] = sum_x (-1)^{popcount(x & S)} v[x]. Length must be a power of two.
void fwht_inplace(std::span<double> v);
std::vector<double> fwht(std::vector<double> v);

/// Generic compiler. phi = mean(p); theta[S] = -2^{-n} * fwht(p)[S].
CouplingSet compile_phase_function(const PhaseVector &p);

/// Phase scale for a table: pi / 2^{m-1} (pi for Boolean tables).
double default_scale(const boolfn::TruthTable &tt);
/// pi / (2N), the phase step used to encode residues mod N.
double modular_scale(std::uint64_t N);

/// compile_phase_function(scale * values).
CouplingSet compile_boolean(const boolfn::TruthTable &tt, double scale);
CouplingSet compile_boolean(const boolfn::TruthTable &tt);

/// Balanced-function reduction. Compiles
///   pi * (-1)^{x_1+...+x_n} (f(x) - 2 x_1 x_2),
/// which agrees with pi*f(x) modulo 2pi and has no n-particle term.
/// Requires a balanced Boolean table with n >= 2.
CouplingSet reduce_balanced(const boolfn::TruthTable &tt);

/// Closed form for the one-hot marker at t:
/// phi = pi/2^n, theta[S] = -(pi/2^n) (-1)^{popcount(t & S)}.
CouplingSet grover_couplings(unsigned n, Mask t);

/// lambda_i = a^{2^{i-1}} mod N for i = 1..n.
std::vector<std::uint64_t> shor_lambdas(std::uint64_t a, std::uint64_t N,
                                        unsigned n);

/// Integer product prod_i lambda_i^{x_i} (no reduction mod N).
std::vector<std::uint64_t> shor_product_values(std::uint64_t a,
                                               std::uint64_t N, unsigned n);

/// Closed product form for the phases (pi/2N) * prod_i lambda_i^{x_i}:
///   phi      =  (pi/2N) prod_i (1+lambda_i)/2
///   theta[S] = -(pi/2N) prod_{i in S} (1-lambda_i)/2 prod_{i not in S} (1+lambda_i)/2
/// Each product is formed exactly in integers and rounded once.
CouplingSet shor_couplings(std::uint64_t a, std::uint64_t N, unsigned n);

/// Controlled phase shift exp(i theta x_j x_k), theta = pi/2^{k-j}, from
///   theta x_j x_k = (theta/4)[1 - (-1)^{x_j} - (-1)^{x_k} + (-1)^{x_j+x_k}].
CouplingSet cps_couplings(unsigned j, unsigned k, unsigned n);

/// Product S_{l,l_hi} ... S_{l,l+1}.
CouplingSet cps_product_couplings(unsigned l, unsigned l_hi, unsigned n);

/// The two-term parameter values 2w_jk t = theta, 2w_j t = 2w_k t = -theta
/// exactly as commonly quoted for S_{j,k}. Kept only so reports can show
/// how far they are from the target; they realize exp(-2i theta x_j x_k).
CouplingSet quoted_cps_couplings(unsigned j, unsigned k, unsigned n);

}  // namespace diagevo::spectrum
