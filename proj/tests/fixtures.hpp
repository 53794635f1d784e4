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

#include <string>

#include "tamperest/attack_model.hpp"
#include "tamperest/automata.hpp"
#include "tamperest/io.hpp"

namespace tamperest::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(TAMPEREST_FIXTURE_DIR) + "/" + name;
}

inline PlantNfa load_plant(const std::string& name) {
  return parse_plant(read_text_file(fixture_path(name)));
}

inline AttackModel load_attacks(const std::string& name, const PlantNfa& plant) {
  return parse_attack_model(read_text_file(fixture_path(name)), plant.alphabet());
}

// The five-state estimation example with its cost table.
struct EstimationFixture {
  PlantNfa plant = load_plant("estimation_plant.json");
  AttackModel model = load_attacks("estimation_attacks.json", plant);
  Word word(const std::string& text) const { return parse_word(plant.alphabet(), text); }
};

// A plant whose fault is diagnosable under any budget.
struct TransientFixture {
  PlantNfa plant = load_plant("transient_fault_plant.json");
  AttackModel model = load_attacks("transient_fault_attacks.json", plant);
};

// A plant whose fault is hidden by spending two units of attack.
struct PersistentFixture {
  PlantNfa plant = load_plant("persistent_fault_plant.json");
  AttackModel model = load_attacks("persistent_fault_attacks.json", plant);
};

}  // namespace tamperest::testing
