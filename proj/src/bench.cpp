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

#include "diagevo/bench.hpp"

#include <algorithm>
#include <random>

#include "diagevo/algorithms.hpp"
#include "diagevo/spectrum.hpp"
#include "diagevo/truth_table.hpp"

namespace diagevo::bench {

namespace {

struct KindName {
  Kind kind;
  const char *name;
};

constexpr KindName kNames[] = {
    {Kind::GeneralBoolean, "general_boolean"},
    {Kind::DeutschJozsa, "deutsch_jozsa"},
    {Kind::Grover, "grover"},
    {Kind::Shor, "shor"},
    {Kind::Simon, "simon"},
    {Kind::Cps, "cps"},
    {Kind::Qft, "qft"},
};

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

evolution::ResourceReport all_orders_up_to(unsigned n, unsigned top) {
  evolution::ResourceReport r;
  r.n = n;
  r.per_order.assign(n + 1, 0);
  for (unsigned k = 1; k <= top; ++k) {
    r.per_order[k] = binomial(n, k);
    r.nonzero_terms += r.per_order[k];
  }
  r.max_order = top;
  return r;
}

evolution::ResourceReport table_row(Kind kind, unsigned n) {
  switch (kind) {
    case Kind::GeneralBoolean:
    case Kind::Grover:
    case Kind::Shor:
    case Kind::Simon:
      return all_orders_up_to(n, n);
    case Kind::DeutschJozsa:
      return all_orders_up_to(n, std::max(1U, n - 1));
    case Kind::Cps: {
      evolution::ResourceReport r;
      r.n = n;
      r.per_order.assign(n + 1, 0);
      if (n >= 2) {
        r.per_order[1] = 2;
        r.per_order[2] = 1;
        r.nonzero_terms = 3;
        r.max_order = 2;
      }
      return r;
    }
    case Kind::Qft: {
      // Set l of the schedule touches particles l..n: n-l+1 one-body terms
      // and n-l two-body terms.
      evolution::ResourceReport r;
      r.n = n;
      r.per_order.assign(n + 1, 0);
      if (n >= 2) {
        r.per_order[1] = static_cast<std::size_t>(n) * (n + 1) / 2 - 1;
        r.per_order[2] = static_cast<std::size_t>(n) * (n - 1) / 2;
        r.nonzero_terms = r.per_order[1] + r.per_order[2];
        r.max_order = 2;
      }
      r.evolutions = n;
      return r;
    }
  }
  return {};
}

}  // namespace

std::string to_string(Kind k) {
  for (const auto &kn : kNames) {
    if (kn.kind == k) return kn.name;
  }
  return "?";
}

Kind parse_kind(const std::string &name) {
  for (const auto &kn : kNames) {
    if (name == kn.name) return kn.kind;
  }
  throw InvalidArgument("unknown estimate kind '" + name + "'");
}

GateEstimate sequential_gate_estimate(
    Kind kind, unsigned n, std::optional<unsigned> m,
    std::optional<evolution::ResourceReport> instance) {
  require(n >= 1 && n <= kMaxEstimateWidth,
          "estimate width must be in [1, " +
              std::to_string(kMaxEstimateWidth) + "]");
  if (kind == Kind::Simon) {
    require(m.has_value(), "simon estimate needs the output width m");
    require(*m >= 1 && *m <= 64, "output width m must be in [1, 64]");
  }

  GateEstimate e;
  e.kind = kind;
  e.n = n;
  e.m = kind == Kind::Simon ? m : std::nullopt;
  const std::uint64_t nn = n;
  switch (kind) {
    case Kind::GeneralBoolean:
    case Kind::DeutschJozsa:
      e.law = "n*2^n";
      e.sequential_gates = nn << n;
      break;
    case Kind::Grover:
      e.law = "n";
      e.sequential_gates = nn;
      break;
    case Kind::Shor:
      e.law = "n^3";
      e.sequential_gates = nn * nn * nn;
      break;
    case Kind::Simon:
      e.law = "m*n*2^n";
      e.sequential_gates = static_cast<std::uint64_t>(*m) * (nn << n);
      break;
    case Kind::Cps:
      e.law = "1";
      e.sequential_gates = 1;
      break;
    case Kind::Qft:
      e.law = "n^2";
      e.sequential_gates = nn * nn;
      break;
  }
  e.sequential_gates *= e.constant;

  if (instance) {
    const unsigned evolutions = table_row(kind, n).evolutions;
    e.concurrent = *instance;
    e.concurrent.evolutions = evolutions;
    e.concurrent_source = "instance";
  } else {
    e.concurrent = table_row(kind, n);
  }
  return e;
}

evolution::ResourceReport representative_instance(Kind kind, unsigned n,
                                                  std::optional<unsigned> m,
                                                  std::uint64_t seed) {
  check_width(n, 16);
  std::mt19937_64 rng(seed);
  switch (kind) {
    case Kind::GeneralBoolean: {
      std::vector<std::uint64_t> v(dim(n));
      for (auto &x : v) x = rng() & 1U;
      return evolution::resources(
          spectrum::compile_boolean(boolfn::TruthTable(n, 1, std::move(v))));
    }
    case Kind::DeutschJozsa: {
      require(n >= 2, "balanced reduction needs n >= 2");
      std::vector<std::uint64_t> v(dim(n), 0);
      std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dim(n) / 2),
                1U);
      std::shuffle(v.begin(), v.end(), rng);
      return evolution::resources(
          spectrum::reduce_balanced(boolfn::TruthTable(n, 1, std::move(v))));
    }
    case Kind::Grover:
      return evolution::resources(spectrum::grover_couplings(n, dim(n) - 1));
    case Kind::Shor: {
      require(n >= 4, "order-finding instance needs n >= 4");
      std::uint64_t N = 3;
      for (std::uint64_t c = 3; c * c <= dim(n); c += 2) {
        if (algorithms::shor_register_width(c) == n) N = c;
      }
      require(algorithms::shor_register_width(N) == n,
              "no odd modulus has register width " + std::to_string(n));
      return evolution::resources(spectrum::shor_couplings(2, N, n));
    }
    case Kind::Simon: {
      require(m.has_value(), "simon instance needs the output width m");
      std::uniform_int_distribution<Mask> pick(1, dim(n) - 1);
      const auto tt = boolfn::make_simon_function(n, *m, pick(rng), rng());
      return evolution::resources(spectrum::compile_boolean(tt));
    }
    case Kind::Cps:
      require(n >= 2, "controlled phase shift needs n >= 2");
      return evolution::resources(spectrum::cps_couplings(1, 2, n));
    case Kind::Qft:
      return algorithms::qft_run(n, false).resources;
  }
  return {};
}

}  // namespace diagevo::bench
