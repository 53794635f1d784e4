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

#include "tamperest/automata.hpp"
#include "tamperest/cmin.hpp"
#include "tamperest/diagnoser.hpp"
#include "tamperest/estimator.hpp"
#include "tamperest/matching_machine.hpp"

namespace tamperest {

// Graphviz renderings, one digraph per call. Node and edge order follow the
// underlying automaton, so output is byte-stable.

std::string to_dot(const PlantNfa& plant);
/// Observer states are rendered as set literals such as {1,2}.
std::string to_dot(const PlantNfa& plant, const ObserverDfa& observer);
/// Stages are laid out left to right, one column per stage.
std::string to_dot(const CostedObservationDfa& gsc);
std::string to_dot(const PlantNfa& plant, const ProductAutomaton& product);
std::string to_dot(const FVerifier& verifier);
std::string to_dot(const ModifiedVerifier& verifier, const EndingStates* ending = nullptr);

}  // namespace tamperest
