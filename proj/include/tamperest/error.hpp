// Copyright 2026 The tamperest Authors
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

#include <stdexcept>
#include <string>
#include <vector>

namespace tamperest {

/// Malformed or inconsistent input: unknown states or symbols, bad costs,
/// alphabet partitions that overlap.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two inputs that are individually valid but do not fit together.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural assumption of the diagnosability check does not hold
/// (liveness, absence of unobservable cycles). `witness()` names the
/// offending states/events in human-readable form.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::vector<std::string> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::string> witness_;
};

}  // namespace tamperest
