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

#include "diagevo/report.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace diagevo::report {

namespace {

constexpr double kOmitThreshold = 1e-15;

using Row = std::vector<std::pair<std::string, std::string>>;

std::string scalar_text(const Json &v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const Json &v, const std::string &prefix, Row &out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
              out);
    }
  } else if (v.is_array()) {
    if (v.empty()) {
      out.emplace_back(prefix, "");
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      flatten(v[i], prefix + "." + std::to_string(i), out);
    }
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

std::string csv_cell(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string to_csv(const Json &report) {
  std::vector<Row> rows;
  if (report.is_array()) {
    for (const auto &el : report) {
      rows.emplace_back();
      flatten(el, "", rows.back());
    }
  } else {
    rows.emplace_back();
    flatten(report, "", rows.back());
  }
  std::vector<std::string> header;
  std::set<std::string> seen;
  for (const auto &row : rows) {
    for (const auto &[k, v] : row) {
      if (seen.insert(k).second) header.push_back(k);
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) {
    os << (i ? "," : "") << csv_cell(header[i]);
  }
  os << '\n';
  for (const auto &row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      std::string cell;
      for (const auto &[k, v] : row) {
        if (k == header[i]) {
          cell = v;
          break;
        }
      }
      os << (i ? "," : "") << csv_cell(cell);
    }
    os << '\n';
  }
  return os.str();
}

std::string to_text(const Json &report) {
  Row row;
  flatten(report, "", row);
  std::ostringstream os;
  for (const auto &[k, v] : row) os << (k.empty() ? "value" : k) << ": " << v << '\n';
  return os.str();
}

Json particles_of(Mask s) {
  Json p = Json::array();
  for (unsigned i = 0; s >> i; ++i) {
    if ((s >> i) & 1U) p.push_back(i + 1);
  }
  return p;
}

template <typename T>
Json optional_json(const std::optional<T> &v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Format parse_format(const std::string &name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw InvalidArgument("unknown report format '" + name +
                        "' (expected json, csv or text)");
}

Json to_json(const spectrum::CouplingSet &cs) {
  Json j;
  j["n"] = cs.n();
  j["phi"] = cs.phi();
  Json terms = Json::array();
  for (Mask s = 1; s < cs.angles().size(); ++s) {
    const double a = cs.angles()[s];
    if (std::abs(a) < kOmitThreshold) continue;
    terms.push_back({{"mask", s}, {"particles", particles_of(s)}, {"angle", a}});
  }
  j["terms"] = std::move(terms);
  return j;
}

spectrum::CouplingSet coupling_set_from_json(const Json &j) {
  try {
    require(j.is_object(), "coupling set JSON must be an object");
    const auto n = j.at("n").get<unsigned>();
    check_width(n);
    spectrum::CouplingSet cs(n);
    cs.set_phi(j.at("phi").get<double>());
    std::set<Mask> seen;
    for (const auto &t : j.at("terms")) {
      const auto mask = t.at("mask").get<Mask>();
      require(mask >= 1 && mask < dim(n),
              "term mask " + std::to_string(mask) + " out of range");
      require(seen.insert(mask).second,
              "duplicate term for mask " + std::to_string(mask));
      if (t.contains("particles")) {
        Mask from_particles = 0;
        for (const auto &p : t.at("particles")) {
          const auto i = p.get<unsigned>();
          require(i >= 1 && i <= n, "particle index out of range");
          from_particles |= Mask{1} << (i - 1);
        }
        require(from_particles == mask,
                "term particles disagree with mask " + std::to_string(mask));
      }
      cs.set_theta(mask, t.at("angle").get<double>());
    }
    return cs;
  } catch (const Json::exception &e) {
    throw InvalidArgument(std::string("malformed coupling set JSON: ") +
                          e.what());
  }
}

spectrum::CouplingSet parse_coupling_set(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception &e) {
    throw InvalidArgument(std::string("coupling set is not valid JSON: ") +
                          e.what());
  }
  return coupling_set_from_json(j);
}

Json to_json(const evolution::ResourceReport &r) {
  return {{"n", r.n},
          {"nonzero_terms", r.nonzero_terms},
          {"max_order", r.max_order},
          {"per_order", r.per_order},
          {"evolutions", r.evolutions}};
}

Json to_json(const evolution::VerifyReport &r) {
  return {{"max_circle_error", r.max_circle_error},
          {"exact_pass", r.exact_pass},
          {"notes", r.notes}};
}

Json to_json(const simulator::Histogram &h) {
  Json counts = Json::object();
  for (const auto &[k, v] : h.counts) counts[std::to_string(k)] = v;
  return {{"shots", h.shots}, {"counts", std::move(counts)}};
}

Json to_json(const algorithms::DJVerdict &v) {
  return {{"verdict", algorithms::to_string(v.verdict)},
          {"prob_zero", v.prob_zero},
          {"resources", to_json(v.resources)},
          {"final_norm", v.final_norm}};
}

Json to_json(const algorithms::GroverRun &r) {
  return {{"n", r.n},
          {"t", r.t},
          {"iterations", r.iterations},
          {"success_prob", r.success_prob},
          {"closed_form_prob", r.closed_form_prob},
          {"final_norm", r.final_norm}};
}

Json to_json(const algorithms::SimonRun &r) {
  return {{"n", r.n},
          {"samples", r.samples},
          {"recovered_s", optional_json(r.recovered_s)},
          {"discarded_zero", r.discarded_zero},
          {"draws", r.draws},
          {"odd_mass", optional_json(r.odd_mass)},
          {"final_norm", r.final_norm}};
}

Json to_json(const algorithms::ShorRun &r) {
  Json candidates = Json::array();
  for (const auto &c : r.order_candidates) {
    candidates.push_back(
        {{"r", c.r}, {"shots", c.shots}, {"verified", c.verified}});
  }
  Json factors = nullptr;
  if (r.factors) factors = Json::array({r.factors->first, r.factors->second});
  const auto &pc = r.phase_comparison;
  return {{"a", r.a},
          {"N", r.N},
          {"n", r.n},
          {"phase_model", algorithms::to_string(r.model)},
          {"measurements", to_json(r.measurements)},
          {"order_candidates", std::move(candidates)},
          {"classical_order", r.classical_order},
          {"empirical_success_rate", r.empirical_success_rate},
          {"factors", std::move(factors)},
          {"phase_comparison",
           {{"states", pc.states},
            {"mismatched_states", pc.mismatched_states},
            {"max_circle_gap", pc.max_circle_gap},
            {"quarter_turns", pc.quarter_turns}}},
          {"final_norm", r.final_norm},
          {"notes", r.notes}};
}

Json to_json(const algorithms::QftRun &r) {
  return {{"n", r.n},
          {"hadamard_steps", r.hadamard_steps},
          {"coupling_evolutions", r.coupling_evolutions},
          {"resources", to_json(r.resources)},
          {"max_dense_error", optional_json(r.max_dense_error)},
          {"quoted_parameter_error", r.quoted_parameter_error},
          {"final_norm", r.final_norm},
          {"notes", r.notes}};
}

Json to_json(const bench::GateEstimate &e) {
  return {{"kind", bench::to_string(e.kind)},
          {"n", e.n},
          {"m", optional_json(e.m)},
          {"law", e.law},
          {"constant", e.constant},
          {"sequential_gates", e.sequential_gates},
          {"concurrent", to_json(e.concurrent)},
          {"concurrent_source", e.concurrent_source}};
}

std::string emit_report(const Json &report, Format format) {
  switch (format) {
    case Format::Json: return report.dump(2) + "\n";
    case Format::Csv: return to_csv(report);
    case Format::Text: return to_text(report);
  }
  throw InvalidArgument("unknown report format");
}

}  // namespace diagevo::report
