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

#include "diagevo/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "diagevo/algorithms.hpp"
#include "diagevo/bench.hpp"
#include "diagevo/evolution.hpp"
#include "diagevo/report.hpp"
#include "diagevo/spectrum.hpp"
#include "diagevo/truth_table.hpp"

namespace diagevo::cli {

namespace {

using report::Json;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_vector(const std::string &text) {
  std::vector<double> v;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.front() == '#') continue;
    std::istringstream toks(line);
    std::string tok;
    while (toks >> tok) {
      std::size_t used = 0;
      double d = 0.0;
      try {
        d = std::stod(tok, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != tok.size()) {
        throw InvalidArgument("vector file: bad number '" + tok + "'");
      }
      v.push_back(d);
    }
  }
  return v;
}

struct ScaleChoice {
  std::optional<double> scale;
  bool boolean = false;
  bool simon = false;

  double resolve(const boolfn::TruthTable &tt,
                 std::optional<std::uint64_t> modulus) const {
    if (scale) return *scale;
    if (boolean) return kPi;
    if (modulus) return spectrum::modular_scale(*modulus);
    (void)simon;  // pi/2^{m-1} is also the default
    return spectrum::default_scale(tt);
  }
};

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
  bool force = false;
  double tol = 1e-9;

  unsigned width_limit() const { return force ? kMaxWidth : kDefaultWidthGuard; }
};

boolfn::TruthTable load_table(const std::string &path, const Options &opt) {
  auto tt = boolfn::parse_truth_table(read_file(path));
  check_width(tt.n(), opt.width_limit());
  return tt;
}

spectrum::CouplingSet load_couplings(const std::string &path,
                                     const Options &opt) {
  auto cs = report::parse_coupling_set(read_file(path));
  check_width(cs.n(), opt.width_limit());
  return cs;
}

void emit(std::ostream &out, const Json &j, const Options &opt) {
  out << report::emit_report(j, report::parse_format(opt.format));
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Compile functions into diagonal-Hamiltonian couplings and "
               "run phase-oracle algorithms"};
  app.name("diagevo");
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Report format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", opt.seed, "Random seed");
  app.add_flag("--force", opt.force, "Allow widths up to 24 (default cap 20)");
  app.add_option("--tol", opt.tol, "Verification tolerance (radians)");
  app.fallthrough();

  // compile
  auto *compile = app.add_subcommand("compile", "Compile a truth table");
  std::string table_path;
  ScaleChoice compile_scale;
  std::vector<std::uint64_t> shor_args;
  bool reduce = false;
  std::string out_path;
  compile->add_option("table-file", table_path)->required();
  auto *scale_opt =
      compile->add_option("--scale", compile_scale.scale, "Phase per unit value");
  auto *bool_opt = compile->add_flag("--boolean", compile_scale.boolean,
                                     "Scale pi");
  auto *simon_opt = compile->add_flag("--simon", compile_scale.simon,
                                      "Scale pi/2^(m-1)");
  auto *shor_opt = compile->add_option("--shor", shor_args,
                                       "Closed-form order-finding couplings "
                                       "for base a, modulus N")
                       ->expected(2);
  auto *reduce_opt = compile->add_flag("--reduce-balanced", reduce,
                                       "Drop the n-particle term of a "
                                       "balanced function");
  compile->add_option("--out", out_path, "Write JSON here instead of stdout");
  scale_opt->excludes(bool_opt)->excludes(simon_opt)->excludes(shor_opt);
  bool_opt->excludes(simon_opt)->excludes(shor_opt);
  simon_opt->excludes(shor_opt);
  reduce_opt->excludes(scale_opt)->excludes(simon_opt)->excludes(shor_opt);

  // verify
  auto *verify = app.add_subcommand("verify", "Check couplings against a table");
  std::string verify_table, verify_couplings;
  ScaleChoice verify_scale;
  std::optional<std::uint64_t> verify_modulus;
  verify->add_option("table-file", verify_table)->required();
  verify->add_option("couplings", verify_couplings)->required();
  auto *vs = verify->add_option("--scale", verify_scale.scale);
  auto *vb = verify->add_flag("--boolean", verify_scale.boolean);
  auto *vsi = verify->add_flag("--simon", verify_scale.simon);
  auto *vm = verify->add_option("--shor-modulus", verify_modulus,
                                "Target scale pi/(2N)");
  vs->excludes(vb)->excludes(vsi)->excludes(vm);
  vb->excludes(vsi)->excludes(vm);
  vsi->excludes(vm);

  // resources
  auto *resources = app.add_subcommand("resources", "Term structure of a set");
  std::string resources_path;
  resources->add_option("couplings", resources_path)->required();

  // run
  auto *run_cmd = app.add_subcommand("run", "Run an algorithm pipeline");
  run_cmd->require_subcommand(1);
  auto *dj = run_cmd->add_subcommand("dj", "Deutsch-Jozsa");
  std::string dj_table;
  dj->add_option("table-file", dj_table)->required();

  auto *grover = run_cmd->add_subcommand("grover", "Grover search");
  unsigned grover_n = 0;
  Mask grover_t = 0;
  std::optional<std::uint64_t> grover_iters;
  grover->add_option("n", grover_n)->required();
  grover->add_option("t", grover_t)->required();
  grover->add_option("--iters", grover_iters, "Grover iterations");

  auto *simon = run_cmd->add_subcommand("simon", "Simon period finding");
  std::string simon_table;
  std::optional<std::uint64_t> simon_budget;
  simon->add_option("table-file", simon_table)->required();
  simon->add_option("--max-samples", simon_budget, "Draw budget");

  auto *shor = run_cmd->add_subcommand("shor", "Shor order finding");
  std::uint64_t shor_a = 0, shor_n_mod = 0, shor_shots = 1000;
  std::string phase_model = "integer_product";
  shor->add_option("a", shor_a)->required();
  shor->add_option("N", shor_n_mod)->required();
  shor->add_option("--shots", shor_shots, "Measurement shots");
  shor->add_option("--phase-model", phase_model,
                   "integer_product (compiled couplings) or modular")
      ->check(CLI::IsMember({"integer_product", "modular"}));

  auto *qft = run_cmd->add_subcommand("qft", "Concurrent QFT schedule");
  unsigned qft_n = 0;
  bool check_dense = false;
  qft->add_option("n", qft_n)->required();
  qft->add_flag("--check-dense", check_dense,
                "Compare against the dense transform");

  // bench
  auto *bench_cmd = app.add_subcommand("bench", "Gate-count estimate");
  std::string kind_name;
  unsigned bench_n = 0;
  std::optional<unsigned> bench_m;
  bool instance = false;
  bench_cmd->add_option("kind", kind_name)->required();
  bench_cmd->add_option("n", bench_n)->required();
  bench_cmd->add_option("m", bench_m);
  bench_cmd->add_flag("--instance", instance,
                      "Measure a representative compiled instance");

  // fwht
  auto *fwht_cmd = app.add_subcommand("fwht", "Walsh-Hadamard transform");
  std::string vector_path;
  fwht_cmd->add_option("vector-file", vector_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (compile->parsed()) {
      const auto tt = load_table(table_path, opt);
      spectrum::CouplingSet cs(tt.n());
      if (reduce) {
        cs = spectrum::reduce_balanced(tt);
      } else if (!shor_args.empty()) {
        const auto a = shor_args[0];
        const auto N = shor_args[1];
        require(tt == boolfn::make_modexp_table(a, N, tt.n()),
                "table is not a^x mod N for the given a and N");
        cs = spectrum::shor_couplings(a, N, tt.n());
      } else {
        cs = spectrum::compile_boolean(tt, compile_scale.resolve(tt, {}));
      }
      const auto text = report::to_json(cs).dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InvalidArgument("cannot write '" + out_path + "'");
        f << text;
      }
      return kSuccess;
    }

    if (verify->parsed()) {
      const auto tt = load_table(verify_table, opt);
      const auto cs = load_couplings(verify_couplings, opt);
      const double scale = verify_scale.resolve(tt, verify_modulus);
      std::vector<double> target(tt.size());
      for (Mask x = 0; x < tt.size(); ++x) {
        target[x] = scale * static_cast<double>(tt[x]);
      }
      const auto rep = evolution::verify(
          cs, spectrum::PhaseVector(tt.n(), std::move(target)), opt.tol);
      emit(out, report::to_json(rep), opt);
      return rep.exact_pass ? kSuccess : kVerificationFailure;
    }

    if (resources->parsed()) {
      const auto cs = load_couplings(resources_path, opt);
      emit(out, report::to_json(evolution::resources(cs)), opt);
      return kSuccess;
    }

    if (dj->parsed()) {
      const auto tt = load_table(dj_table, opt);
      emit(out, report::to_json(algorithms::deutsch_jozsa(tt)), opt);
      return kSuccess;
    }
    if (grover->parsed()) {
      check_width(grover_n, kDefaultWidthGuard);
      emit(out,
           report::to_json(
               algorithms::grover_search(grover_n, grover_t, grover_iters)),
           opt);
      return kSuccess;
    }
    if (simon->parsed()) {
      const auto tt = load_table(simon_table, opt);
      check_width(tt.n(), kDefaultWidthGuard);
      const auto s = algorithms::find_simon_period(tt);
      emit(out,
           report::to_json(
               algorithms::simon_run(tt, s, simon_budget, opt.seed)),
           opt);
      return kSuccess;
    }
    if (shor->parsed()) {
      const auto model = phase_model == "modular"
                             ? algorithms::ShorPhaseModel::Modular
                             : algorithms::ShorPhaseModel::IntegerProduct;
      emit(out,
           report::to_json(algorithms::shor_order_finding(
               shor_a, shor_n_mod, shor_shots, opt.seed, model)),
           opt);
      return kSuccess;
    }
    if (qft->parsed()) {
      check_width(qft_n, algorithms::kMaxScheduleWidth);
      const auto r = algorithms::qft_run(qft_n, check_dense, opt.seed);
      emit(out, report::to_json(r), opt);
      if (r.max_dense_error && *r.max_dense_error >= opt.tol) {
        return kVerificationFailure;
      }
      return kSuccess;
    }

    if (bench_cmd->parsed()) {
      const auto kind = bench::parse_kind(kind_name);
      std::optional<evolution::ResourceReport> inst;
      if (instance) {
        inst = bench::representative_instance(kind, bench_n, bench_m, opt.seed);
      }
      emit(out,
           report::to_json(
               bench::sequential_gate_estimate(kind, bench_n, bench_m, inst)),
           opt);
      return kSuccess;
    }

    if (fwht_cmd->parsed()) {
      auto v = parse_vector(read_file(vector_path));
      require(is_power_of_two(v.size()),
              "vector length " + std::to_string(v.size()) +
                  " is not a power of two");
      const auto n = static_cast<unsigned>(std::countr_zero(v.size()));
      check_width(std::max(1U, n), opt.width_limit());
      spectrum::fwht_inplace(v);
      emit(out, Json{{"length", v.size()}, {"values", v}}, opt);
      return kSuccess;
    }
  } catch (const ResourceLimit &e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no command\n";
  return kUsageError;
}

}  // namespace diagevo::cli
