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

#include <filesystem>
#include <string>
#include <string_view>

#include "tamperest/attack_model.hpp"
#include "tamperest/automata.hpp"

namespace tamperest {

/// Reads a whole file; throws ValidationError if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// True for names like "0" or "17" that serialize as JSON integers.
bool is_canonical_index(std::string_view name);

/// Plant documents:
///   {"states": [...], "observable": [...], "unobservable": [...],
///    "faults": [...], "initial": [...],
///    "transitions": [{"from": s, "event": e, "to": s'}]}
/// States may be strings or non-negative integers. Unknown top-level keys
/// are ignored. Malformed input throws ValidationError naming the location.
PlantNfa parse_plant(std::string_view text);
std::string serialize_plant(const PlantNfa& plant);

/// Cost tables:
///   {"deletions": {"α": 3}, "insertions": {"β": 2},
///    "substitutions": [{"from": "α", "to": "β", "cost": 2}]}
/// Symbols are resolved against `alphabet` and must be observable.
AttackModel parse_attack_model(std::string_view text, const Alphabet& alphabet);
std::string serialize_attack_model(const AttackModel& model);

}  // namespace tamperest
