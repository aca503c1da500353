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

#include "diagevo/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace diagevo::algorithms {

using spectrum::PhaseVector;

std::string to_string(Verdict v) {
  return v == Verdict::Constant ? "Constant" : "Balanced";
}

std::string to_string(ShorPhaseModel m) {
  return m == ShorPhaseModel::IntegerProduct ? "integer_product" : "modular";
}

// ---------------------------------------------------------------------------
// Deutsch-Jozsa

DJVerdict deutsch_jozsa(const boolfn::TruthTable &tt) {
  const auto cls = boolfn::classify_promise(tt);
  if (cls == boolfn::PromiseClass::Neither) {
    throw InvalidArgument(
        "Deutsch-Jozsa promise violated: table is neither constant nor "
        "balanced");
  }
  const bool balanced = cls == boolfn::PromiseClass::Balanced;
  const auto cs = (balanced && tt.n() >= 2)
                      ? spectrum::reduce_balanced(tt)
                      : spectrum::compile_boolean(tt, kPi);

  auto sv = simulator::hadamard_all(StateVector::basis(tt.n(), 0));
  sv = simulator::apply_phases(std::move(sv), evolution::phases_of(cs));
  sv = simulator::hadamard_all(std::move(sv));

  DJVerdict out;
  out.prob_zero = sv.probability(0);
  out.verdict = out.prob_zero > 0.5 ? Verdict::Constant : Verdict::Balanced;
  out.resources = evolution::resources(cs);
  out.final_norm = sv.norm();
  return out;
}

// ---------------------------------------------------------------------------
// Grover

std::uint64_t grover_default_iterations(unsigned n) {
  return static_cast<std::uint64_t>(
      std::floor(kPi / 4.0 * std::sqrt(static_cast<double>(dim(n)))));
}

double grover_closed_form(unsigned n, std::uint64_t k) {
  const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(dim(n))));
  const double s = std::sin(static_cast<double>(2 * k + 1) * theta);
  return s * s;
}

GroverRun grover_search(unsigned n, Mask t,
                        std::optional<std::uint64_t> iterations) {
  check_width(n, kDefaultWidthGuard);
  require(t < dim(n), "marked index " + std::to_string(t) +
                          " out of range for n=" + std::to_string(n));
  const auto oracle =
      evolution::phases_of(spectrum::grover_couplings(n, t));
  const auto zero_flip =
      evolution::phases_of(spectrum::grover_couplings(n, 0));

  GroverRun run;
  run.n = n;
  run.t = t;
  run.iterations = iterations.value_or(grover_default_iterations(n));

  auto sv = simulator::uniform(n);
  for (std::uint64_t k = 0; k < run.iterations; ++k) {
    sv = simulator::apply_phases(std::move(sv), oracle);
    sv = simulator::hadamard_all(std::move(sv));
    sv = simulator::apply_phases(std::move(sv), zero_flip);
    sv = simulator::hadamard_all(std::move(sv));
  }
  run.success_prob = sv.probability(t);
  run.closed_form_prob = grover_closed_form(n, run.iterations);
  run.final_norm = sv.norm();
  return run;
}

// ---------------------------------------------------------------------------
// Simon

std::vector<Mask> gf2_nullspace(const std::vector<Mask> &rows, unsigned n) {
  require(n >= 1 && n <= 64, "GF(2) width must be in [1, 64]");
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

  // Reduced row echelon form; pivot_row[c] is the row with leading bit c.
  std::vector<Mask> echelon;
  std::vector<int> pivot_col;
  for (Mask r : rows) {
    r &= full;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if ((r >> pivot_col[i]) & 1U) r ^= echelon[i];
    }
    if (r == 0) continue;
    const int c = std::countr_zero(r);
    for (auto &e : echelon) {
      if ((e >> c) & 1U) e ^= r;
    }
    echelon.push_back(r);
    pivot_col.push_back(c);
  }

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[static_cast<unsigned>(c)] = true;

  std::vector<Mask> basis;
  for (unsigned f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Mask v = Mask{1} << f;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if ((echelon[i] >> f) & 1U) v |= Mask{1} << pivot_col[i];
    }
    basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::optional<Mask> find_simon_period(const boolfn::TruthTable &tt) {
  for (Mask s = 1; s < tt.size(); ++s) {
    if (tt[s] != tt[0]) continue;
    bool ok = true;
    for (Mask x = 0; x < tt.size() && ok; ++x) ok = tt[x] == tt[x ^ s];
    if (ok) return s;
  }
  return std::nullopt;
}

SimonRun simon_run(const boolfn::TruthTable &tt, std::optional<Mask> s_true,
                   std::optional<std::uint64_t> max_samples,
                   std::uint64_t seed) {
  const unsigned n = tt.n();
  check_width(n, kDefaultWidthGuard);
  if (s_true) {
    require(*s_true != 0 && *s_true < tt.size(),
            "Simon period must be a nonzero n-bit mask");
    for (Mask x = 0; x < tt.size(); ++x) {
      require(tt[x] == tt[x ^ *s_true],
              "table does not satisfy f(x) = f(x ^ s)");
    }
  }
  const auto budget = max_samples.value_or(simon_default_budget(n));

  const auto cs = spectrum::compile_boolean(tt, spectrum::default_scale(tt));
  auto sv = simulator::hadamard_all(StateVector::basis(n, 0));
  sv = simulator::apply_phases(std::move(sv), evolution::phases_of(cs));
  sv = simulator::hadamard_all(std::move(sv));

  SimonRun run;
  run.n = n;
  run.final_norm = sv.norm();
  if (s_true) {
    double odd = 0.0;
    for (Mask y = 0; y < sv.size(); ++y) {
      if (parity_sign(y, *s_true) < 0) odd += sv.probability(y);
    }
    run.odd_mass = odd;
  }

  const simulator::Sampler sampler(sv);
  std::mt19937_64 rng(seed);
  // by_lead[b]: reduced row whose highest set bit is b.
  std::vector<Mask> by_lead(n, 0);
  std::size_t rank = 0;
  const std::size_t wanted = n - 1;
  while (rank < wanted && run.draws < budget) {
    const Mask y = sampler.draw(rng);
    ++run.draws;
    if (y == 0) {
      ++run.discarded_zero;
      continue;
    }
    run.samples.push_back(y);
    for (Mask r = y; r != 0;) {
      const auto lead = static_cast<unsigned>(std::bit_width(r) - 1);
      if (by_lead[lead] == 0) {
        by_lead[lead] = r;
        ++rank;
        break;
      }
      r ^= by_lead[lead];
    }
  }

  if (rank == wanted) {
    const auto basis = gf2_nullspace(run.samples, n);
    if (basis.size() == 1) run.recovered_s = basis.front();
  }
  return run;
}

// ---------------------------------------------------------------------------
// Shor

std::uint64_t classical_order(std::uint64_t a, std::uint64_t N) {
  require(N >= 2, "modulus must be at least 2");
  require(boolfn::gcd(a, N) == 1, "order needs gcd(a, N) = 1");
  std::uint64_t r = 1;
  std::uint64_t v = a % N;
  while (v != 1) {
    v = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) * a % N);
    ++r;
  }
  return r;
}

bool is_exact_order(std::uint64_t a, std::uint64_t N, std::uint64_t r) {
  if (r == 0 || boolfn::gcd(a, N) != 1) return false;
  if (boolfn::mod_pow(a, r, N) != 1 % N) return false;
  std::uint64_t rest = r;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    if (boolfn::mod_pow(a, r / p, N) == 1 % N) return false;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1 && boolfn::mod_pow(a, r / rest, N) == 1 % N) return false;
  return true;
}

std::vector<std::uint64_t> continued_fraction_denominators(
    std::uint64_t y, std::uint64_t q, std::uint64_t bound) {
  require(q >= 1 && y < q, "continued fractions need 0 <= y < q");
  std::vector<std::uint64_t> out;
  // k_{-2} = 1, k_{-1} = 0; k_i = a_i k_{i-1} + k_{i-2}.
  std::uint64_t k_prev2 = 1;
  std::uint64_t k_prev1 = 0;
  std::uint64_t num = y;
  std::uint64_t den = q;
  while (true) {
    const std::uint64_t term = num / den;
    const std::uint64_t k = term * k_prev1 + k_prev2;
    if (k > bound) break;
    if (out.empty() || out.back() != k) out.push_back(k);
    const std::uint64_t rem = num % den;
    if (rem == 0) break;
    num = den;
    den = rem;
    k_prev2 = k_prev1;
    k_prev1 = k;
  }
  return out;
}

unsigned shor_register_width(std::uint64_t N) {
  require(N >= 2, "modulus must be at least 2");
  const auto sq = static_cast<unsigned __int128>(N) * N;
  unsigned n = 0;
  while ((static_cast<unsigned __int128>(1) << n) < sq) ++n;
  return n;
}

ShorPhaseComparison compare_shor_phases(std::uint64_t a, std::uint64_t N,
                                        unsigned n) {
  const auto product = spectrum::shor_product_values(a, N, n);
  const double scale = spectrum::modular_scale(N);
  ShorPhaseComparison c;
  c.states = product.size();
  c.quarter_turns.assign(4, 0);
  std::uint64_t residue = 1 % N;
  for (Mask x = 0; x < product.size(); ++x) {
    const std::uint64_t k = (product[x] - residue) / N;
    ++c.quarter_turns[k % 4];
    if (k % 4 != 0) ++c.mismatched_states;
    const double gap = evolution::circle_distance(
        scale * static_cast<double>(product[x]),
        scale * static_cast<double>(residue));
    c.max_circle_gap = std::max(c.max_circle_gap, gap);
    residue = residue * (a % N) % N;
  }
  return c;
}

ShorRun shor_order_finding(std::uint64_t a, std::uint64_t N,
                           std::uint64_t shots, std::uint64_t seed,
                           ShorPhaseModel model) {
  require(N >= 3 && (N & 1U), "modulus N must be odd and at least 3");
  if (N > kShorDeskLimit) {
    throw ResourceLimit("order finding is limited to N <= " +
                        std::to_string(kShorDeskLimit));
  }
  require(a >= 1 && a < N, "base a must lie in [1, N)");
  require(boolfn::gcd(a, N) == 1, "base a=" + std::to_string(a) +
                                      " is not coprime to N=" +
                                      std::to_string(N));
  require(shots >= 1, "need at least one shot");

  ShorRun run;
  run.a = a;
  run.N = N;
  run.n = shor_register_width(N);
  run.model = model;
  run.classical_order = classical_order(a, N);

  const unsigned n = run.n;
  const double scale = spectrum::modular_scale(N);
  std::vector<double> phases(dim(n));
  if (model == ShorPhaseModel::IntegerProduct) {
    const auto p = evolution::phases_of(spectrum::shor_couplings(a, N, n));
    phases.assign(p.phases().begin(), p.phases().end());
  } else {
    const auto table = boolfn::make_modexp_table(a, N, n);
    for (Mask x = 0; x < phases.size(); ++x) {
      phases[x] = scale * static_cast<double>(table[x]);
    }
  }

  auto sv = simulator::uniform(n);
  sv = simulator::apply_phases(std::move(sv), PhaseVector(n, phases));
  sv = simulator::apply_qft(std::move(sv));
  run.final_norm = sv.norm();
  run.measurements = simulator::measure(sv, shots, seed);

  std::map<std::uint64_t, OrderCandidate> candidates;
  std::uint64_t successes = 0;
  std::optional<std::uint64_t> found;
  for (const auto &[y, count] : run.measurements.counts) {
    bool shot_ok = false;
    for (auto r : continued_fraction_denominators(y, dim(n), N)) {
      auto &c = candidates[r];
      c.r = r;
      c.shots += count;
      c.verified = is_exact_order(a, N, r);
      if (c.verified) {
        shot_ok = true;
        found = r;
      }
    }
    if (shot_ok) successes += count;
  }
  for (auto &[r, c] : candidates) run.order_candidates.push_back(c);
  run.empirical_success_rate =
      static_cast<double>(successes) / static_cast<double>(shots);

  if (found && *found % 2 == 0) {
    const auto half = boolfn::mod_pow(a, *found / 2, N);
    if (half != N - 1) {
      run.factors = std::make_pair(boolfn::gcd(half + N - 1, N),
                                   boolfn::gcd(half + 1, N));
    }
  }

  run.phase_comparison = compare_shor_phases(a, N, n);
  {
    std::ostringstream os;
    os << "integer-product phases differ from mod-N phases on "
       << run.phase_comparison.mismatched_states << " of "
       << run.phase_comparison.states
       << " states (max circle gap " << run.phase_comparison.max_circle_gap
       << " rad)";
    run.notes.push_back(os.str());
  }
  return run;
}

// ---------------------------------------------------------------------------
// QFT schedule

std::vector<QftStep> qft_schedule(unsigned n) {
  check_width(n, kMaxScheduleWidth);
  std::vector<QftStep> steps;
  steps.emplace_back(HadamardStep{n});
  for (unsigned l = n - 1; l >= 1; --l) {
    steps.emplace_back(spectrum::cps_product_couplings(l, n, n));
    steps.emplace_back(HadamardStep{l});
  }
  return steps;
}

StateVector run_schedule(StateVector sv, const std::vector<QftStep> &steps) {
  for (const auto &step : steps) {
    if (const auto *h = std::get_if<HadamardStep>(&step)) {
      sv = simulator::apply_hadamard(std::move(sv), h->particle);
    } else {
      const auto &cs = std::get<CouplingSet>(step);
      require(cs.n() == sv.n(), "schedule width mismatch");
      sv = simulator::apply_phases(std::move(sv), evolution::phases_of(cs));
    }
  }
  return sv;
}

namespace {

StateVector reverse_output(StateVector sv) {
  auto amps = sv.amplitudes();
  for (Mask y = 0; y < amps.size(); ++y) {
    const Mask r = reverse_bits(y, sv.n());
    if (y < r) std::swap(amps[y], amps[r]);
  }
  return sv;
}

double max_amplitude_error(const StateVector &a, const StateVector &b) {
  double worst = 0.0;
  for (Mask x = 0; x < a.size(); ++x) {
    worst = std::max(worst, std::abs(a[x] - b[x]));
  }
  return worst;
}

StateVector random_state(unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<simulator::Amplitude> amps(dim(n));
  double norm = 0.0;
  for (auto &a : amps) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto &a : amps) a /= std::sqrt(norm);
  return StateVector(n, std::move(amps));
}

}  // namespace

QftRun qft_run(unsigned n, bool check_dense, std::uint64_t seed) {
  const auto steps = qft_schedule(n);
  QftRun run;
  run.n = n;
  run.resources.n = n;
  run.resources.per_order.assign(n + 1, 0);
  for (const auto &step : steps) {
    if (std::holds_alternative<HadamardStep>(step)) {
      ++run.hadamard_steps;
      continue;
    }
    ++run.coupling_evolutions;
    const auto r = evolution::resources(std::get<CouplingSet>(step));
    run.resources.nonzero_terms += r.nonzero_terms;
    run.resources.max_order = std::max(run.resources.max_order, r.max_order);
    for (unsigned k = 0; k <= n; ++k) run.resources.per_order[k] += r.per_order[k];
  }
  run.resources.evolutions = n;

  if (check_dense) {
    double worst = 0.0;
    double norm_dev = 0.0;
    auto check = [&](const StateVector &in) {
      const auto got = reverse_output(run_schedule(in, steps));
      const auto want = simulator::apply_qft(in);
      worst = std::max(worst, max_amplitude_error(got, want));
      norm_dev = std::max(norm_dev, std::abs(got.norm() - 1.0));
    };
    if (n <= 8) {
      for (Mask x = 0; x < dim(n); ++x) check(StateVector::basis(n, x));
    } else {
      check(random_state(n, seed));
    }
    run.max_dense_error = worst;
    run.final_norm = 1.0 + norm_dev;
  } else {
    run.final_norm = run_schedule(StateVector::basis(n, 0), steps).norm();
  }

  if (n >= 2) {
    std::vector<double> target(dim(n));
    for (Mask x = 0; x < target.size(); ++x) {
      target[x] = ((x & 1U) && (x & 2U)) ? kPi / 2.0 : 0.0;
    }
    const auto rep = evolution::verify(spectrum::quoted_cps_couplings(1, 2, n),
                                       PhaseVector(n, std::move(target)));
    run.quoted_parameter_error = rep.max_circle_error;
    std::ostringstream os;
    os << "quoted two-term S_{1,2} parameters (2w_12 t = theta, "
          "2w_1 t = 2w_2 t = -theta) miss the target by "
       << rep.max_circle_error
       << " rad; they realize exp(-2i theta x_j x_k). The schedule uses the "
          "exact decomposition instead.";
    run.notes.push_back(os.str());
  }
  return run;
}

}  // namespace diagevo::algorithms
