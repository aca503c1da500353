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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "diagevo/evolution.hpp"
#include "diagevo/simulator.hpp"
#include "diagevo/spectrum.hpp"
#include "diagevo/truth_table.hpp"

namespace diagevo::algorithms {

using simulator::StateVector;
using spectrum::CouplingSet;

// ---------------------------------------------------------------------------
// Deutsch-Jozsa

enum class Verdict { Constant, Balanced };
std::string to_string(Verdict v);

struct DJVerdict {
  Verdict verdict = Verdict::Constant;
  /// Exact probability of |0...0> after the final Hadamard layer.
  double prob_zero = 0.0;
  /// Term structure of the oracle actually used.
  evolution::ResourceReport resources;
  double final_norm = 1.0;
};

/// H-layer, phase oracle, H-layer on |0...0>. Balanced tables (n >= 2) use
/// the reduced coupling set with no n-particle term. Throws if the promise
/// does not hold.
DJVerdict deutsch_jozsa(const boolfn::TruthTable &tt);

// ---------------------------------------------------------------------------
// Grover

struct GroverRun {
  unsigned n = 0;
  Mask t = 0;
  std::uint64_t iterations = 0;
  double success_prob = 0.0;
  double closed_form_prob = 0.0;
  double final_norm = 1.0;
};

/// floor((pi/4) sqrt(2^n))
std::uint64_t grover_default_iterations(unsigned n);

/// sin^2((2k+1) asin(2^{-n/2}))
double grover_closed_form(unsigned n, std::uint64_t k);

/// Oracle and diffusion are both compiled one-hot phase oracles; the
/// diffusion is H-layer, |0>-marker oracle, H-layer.
GroverRun grover_search(unsigned n, Mask t,
                        std::optional<std::uint64_t> iterations = {});

// ---------------------------------------------------------------------------
// Simon

struct SimonRun {
  unsigned n = 0;
  /// Nonzero outcomes in draw order.
  std::vector<Mask> samples;
  std::optional<Mask> recovered_s;
  std::uint64_t discarded_zero = 0;
  std::uint64_t draws = 0;
  /// Exact probability mass on outcomes y with y.s odd; present only when
  /// the true period was supplied.
  std::optional<double> odd_mass;
  double final_norm = 1.0;
};

inline std::uint64_t simon_default_budget(unsigned n) {
  return n > 1 ? 50ULL * (n - 1) : 50ULL;
}

/// Basis of {s : popcount(row & s) even for every row} over GF(2), ascending.
std::vector<Mask> gf2_nullspace(const std::vector<Mask> &rows, unsigned n);

/// Each round samples one outcome of H-layer, phase oracle with scale
/// pi/2^{m-1}, H-layer on |0...0>; zero outcomes are discarded. Stops at
/// n-1 independent rows or after `max_samples` draws. `s_true` is used only
/// to check the promise and report the odd-parity mass.
SimonRun simon_run(const boolfn::TruthTable &tt, std::optional<Mask> s_true,
                   std::optional<std::uint64_t> max_samples,
                   std::uint64_t seed);

/// Smallest nonzero s with f(x) = f(x^s) for all x, if any.
std::optional<Mask> find_simon_period(const boolfn::TruthTable &tt);

// ---------------------------------------------------------------------------
// Shor order finding

/// Least r >= 1 with a^r = 1 (mod N), by iteration.
std::uint64_t classical_order(std::uint64_t a, std::uint64_t N);

/// True iff r is exactly the multiplicative order of a mod N (a^r = 1 and
/// a^{r/p} != 1 for every prime p dividing r).
bool is_exact_order(std::uint64_t a, std::uint64_t N, std::uint64_t r);

/// Distinct denominators of the convergents of y/q not exceeding `bound`,
/// ascending.
std::vector<std::uint64_t> continued_fraction_denominators(std::uint64_t y,
                                                           std::uint64_t q,
                                                           std::uint64_t bound);

/// Width with N^2 <= 2^n < 2N^2.
unsigned shor_register_width(std::uint64_t N);

inline constexpr std::uint64_t kShorDeskLimit = 21;

/// Which phase vector the control register receives.
enum class ShorPhaseModel {
  /// (pi/2N) prod_i lambda_i^{x_i}: what the compiled coupling set realizes.
  IntegerProduct,
  /// (pi/2N) (a^x mod N), applied directly.
  Modular,
};
std::string to_string(ShorPhaseModel m);

struct OrderCandidate {
  std::uint64_t r = 0;
  /// Shots whose convergents produced this denominator.
  std::uint64_t shots = 0;
  bool verified = false;
};

/// Per-state gap between the integer-product phases and the mod-N phases.
/// The two differ by (pi/2) k(x) with k(x) = (P(x) - (a^x mod N)) / N.
struct ShorPhaseComparison {
  std::size_t states = 0;
  std::size_t mismatched_states = 0;
  double max_circle_gap = 0.0;
  /// quarter_turns[j] = number of x with k(x) = j (mod 4).
  std::vector<std::size_t> quarter_turns;
};

ShorPhaseComparison compare_shor_phases(std::uint64_t a, std::uint64_t N,
                                        unsigned n);

struct ShorRun {
  std::uint64_t a = 0;
  std::uint64_t N = 0;
  unsigned n = 0;
  ShorPhaseModel model = ShorPhaseModel::IntegerProduct;
  simulator::Histogram measurements;
  std::vector<OrderCandidate> order_candidates;
  std::uint64_t classical_order = 0;
  double empirical_success_rate = 0.0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
  ShorPhaseComparison phase_comparison;
  double final_norm = 1.0;
  std::vector<std::string> notes;
};

/// uniform(n), phase encoding, QFT, `shots` measurements, continued-fraction
/// post-processing. A shot succeeds if one of its convergent denominators
/// (<= N) is the exact order.
ShorRun shor_order_finding(std::uint64_t a, std::uint64_t N,
                           std::uint64_t shots, std::uint64_t seed,
                           ShorPhaseModel model = ShorPhaseModel::IntegerProduct);

// ---------------------------------------------------------------------------
// Concurrent QFT schedule

struct HadamardStep {
  unsigned particle = 0;
  bool operator==(const HadamardStep &) const = default;
};

using QftStep = std::variant<HadamardStep, CouplingSet>;

inline constexpr unsigned kMaxScheduleWidth = 12;

/// Time-ordered H_n, S_{n-1,n}, H_{n-1}, S_{n-2,n}S_{n-2,n-1}, H_{n-2}, ...,
/// S_{1,n}...S_{1,2}, H_1; each product of phase shifts is one coupling set.
/// The output has its index bits reversed relative to the DFT.
std::vector<QftStep> qft_schedule(unsigned n);

StateVector run_schedule(StateVector sv, const std::vector<QftStep> &steps);

struct QftRun {
  unsigned n = 0;
  std::size_t hadamard_steps = 0;
  std::size_t coupling_evolutions = 0;
  /// Term structure summed over all coupling sets; evolutions = n.
  evolution::ResourceReport resources;
  /// Max amplitude error of schedule + bit reversal against the dense QFT.
  std::optional<double> max_dense_error;
  /// Circle error of the quoted two-term S_{1,2} parameters.
  double quoted_parameter_error = 0.0;
  double final_norm = 1.0;
  std::vector<std::string> notes;
};

/// Builds the schedule and, if requested, checks it against apply_qft: every
/// basis state for n <= 8, otherwise a seeded random state.
QftRun qft_run(unsigned n, bool check_dense, std::uint64_t seed = 0);

}  // namespace diagevo::algorithms
