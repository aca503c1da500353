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
#include <string_view>

#include "json.hpp"

#include "diagevo/algorithms.hpp"
#include "diagevo/bench.hpp"
#include "diagevo/evolution.hpp"
#include "diagevo/simulator.hpp"

namespace diagevo::report {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };
Format parse_format(const std::string &name);

// Coupling-set file format:
//   {"n": int, "phi": float,
//    "terms": [{"mask": int, "particles": [1-based ints], "angle": float}]}
// Terms with |angle| < 1e-15 are omitted on write. On read, "particles" must
// agree with "mask" and each mask may appear once.
Json to_json(const spectrum::CouplingSet &cs);
spectrum::CouplingSet coupling_set_from_json(const Json &j);
spectrum::CouplingSet parse_coupling_set(std::string_view text);

Json to_json(const evolution::ResourceReport &r);
Json to_json(const evolution::VerifyReport &r);
Json to_json(const simulator::Histogram &h);
Json to_json(const algorithms::DJVerdict &v);
Json to_json(const algorithms::GroverRun &r);
Json to_json(const algorithms::SimonRun &r);
Json to_json(const algorithms::ShorRun &r);
Json to_json(const algorithms::QftRun &r);
Json to_json(const bench::GateEstimate &e);

/// Renders a report. JSON keeps insertion order; CSV flattens nested keys
/// into dotted column names (a top-level array becomes one row per
/// element); text prints one "key: value" line per flattened field.
std::string emit_report(const Json &report, Format format);

}  // namespace diagevo::report
