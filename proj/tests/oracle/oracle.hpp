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

// Brute-force references for the test suites. They rely only on the
// automaton and attack-model layers and rebuild every other construction
// from scratch.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "tamperest/attack_model.hpp"
#include "tamperest/automata.hpp"

namespace tamperest::oracle {

/// Thrown when an instance exceeds the oracle's size caps.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  std::size_t max_string_length = 8;
  Cost max_cost = 6;
  std::size_t max_states = 8;
  /// Simple paths explored before oracle_cmin gives up.
  std::size_t max_paths = 20'000'000;
};

/// Per-state minimum cost over every matching sequence of cost <= budget.
std::map<StateId, Cost> oracle_estimate(const PlantNfa& plant, const AttackModel& model,
                                        std::span<const Symbol> received, Cost budget,
                                        const OracleBudget& caps = {});

/// (2|X|(C+2))^2.
std::size_t diagnosis_horizon(const PlantNfa& plant, Cost budget);

/// Looks for a faulty run of the cost-layered plant (attack spend <= budget)
/// that keeps a fault-free run with the same observation alive for
/// `horizon` further steps. True when no such run exists.
bool oracle_diagnosable(const PlantNfa& plant, const AttackModel& model,
                        std::span<const Symbol> faults, Cost budget, std::size_t horizon,
                        const OracleBudget& caps = {});

struct OracleCmin {
  std::optional<Cost> cmin;
  /// Ending states as (x, left faulty, y, right faulty).
  std::set<std::tuple<StateId, bool, StateId, bool>> ending;
  std::size_t paths = 0;
};

/// Minimum over simple twin-verifier paths from an initial state to an
/// ending state of max(left cost, right cost).
OracleCmin oracle_cmin(const PlantNfa& plant, const AttackModel& model,
                       std::span<const Symbol> faults, const OracleBudget& caps = {});

/// Antichain of (left, right) costs of all simple paths from the initial
/// states, keyed by twin state.
std::map<std::tuple<StateId, bool, StateId, bool>, std::set<std::pair<Cost, Cost>>> oracle_pareto_labels(
    const PlantNfa& plant, const AttackModel& model, std::span<const Symbol> faults,
    const OracleBudget& caps = {});

}  // namespace tamperest::oracle
