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
#include <stdexcept>
#include <string>

namespace diagevo {

/// Largest register width backed by dense 2^n storage.
inline constexpr unsigned kMaxWidth = 24;

/// Default guard for commands that allocate 2^n state; lifted to kMaxWidth by
/// an explicit force flag.
inline constexpr unsigned kDefaultWidthGuard = 20;

/// Malformed input or violated precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured size limit (register width, modulus, ...).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string &what) {
  if (!cond) throw InvalidArgument(what);
}

inline void check_width(unsigned n, unsigned limit = kMaxWidth) {
  if (n < 1) throw InvalidArgument("register width must be at least 1");
  if (n > limit) {
    throw ResourceLimit(
        "register width " + std::to_string(n) + " exceeds limit " +
        std::to_string(limit));
  }
}

}  // namespace diagevo
