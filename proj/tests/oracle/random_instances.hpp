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

#include <cstddef>
#include <random>

#include "tamperest/attack_model.hpp"
#include "tamperest/automata.hpp"

namespace tamperest::testing {

struct RandomPlantShape {
  std::size_t min_states = 2;
  std::size_t max_states = 5;
  std::size_t observables = 2;
  /// Non-fault unobservable events.
  std::size_t silent = 1;
  bool fault = false;
  /// Probability of each possible (from, event, to) transition.
  double density = 0.25;
  /// Forces liveness and forbids unobservable cycles: unobservable edges
  /// only go to higher-numbered states and every state gets an observable
  /// edge.
  bool diagnosable_shape = false;
  /// Every state initial instead of only state 0.
  bool all_initial = false;
};

/// Observables are named a, b, c, ...; silent events u0, u1, ...; the
/// fault, if any, is f.
PlantNfa random_plant(std::mt19937& rng, const RandomPlantShape& shape);

/// Each observable is deletable, insertable or substitutable with
/// probability `p`, costs uniform in 1..max_cost.
AttackModel random_attack_model(std::mt19937& rng, const Alphabet& alphabet, Cost max_cost, double p = 0.3);

/// Uniform random word over the observable events.
Word random_observation(std::mt19937& rng, const Alphabet& alphabet, std::size_t length);

}  // namespace tamperest::testing
