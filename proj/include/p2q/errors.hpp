// Copyright 2026 The p2qaut Authors
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

#include <stdexcept>
#include <string>

namespace p2q {

// Bad input or a violated table condition (CLI exit code 2).
class ConditionError : public std::invalid_argument {
 public:
  explicit ConditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured bound (group order, automorphism table size) was exceeded
// (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An internal structural invariant failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace p2q
