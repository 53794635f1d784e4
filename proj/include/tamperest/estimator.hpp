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

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tamperest/attack_model.hpp"
#include "tamperest/automata.hpp"
#include "tamperest/matching_machine.hpp"

namespace tamperest {

struct ProductState {
  StateId plant = 0;
  std::size_t stage = 0;
  Cost cost = 0;
  auto operator<=>(const ProductState&) const = default;
};

/// H = AC(G_nd || G_sc(B)) or its cost-reduced form. Built explicitly; the
/// production estimator does not materialise it.
class ProductAutomaton {
 public:
  Cost bound() const { return bound_; }
  std::size_t final_stage() const { return final_stage_; }

  std::size_t num_states() const { return states_.size(); }
  const ProductState& state(std::size_t i) const { return states_.at(i); }
  std::optional<std::size_t> find(const ProductState& s) const;
  const std::vector<std::size_t>& initial() const { return initial_; }
  std::span<const LabeledEdge> edges(std::size_t i) const { return edges_.at(i); }
  std::size_t num_transitions() const;

 private:
  friend ProductAutomaton build_product(const PlantNfa&, const CostedObservationDfa&);
  friend ProductAutomaton reduce_product(const ProductAutomaton&);

  std::size_t intern(const ProductState& s);

  Cost bound_ = 0;
  std::size_t final_stage_ = 0;
  std::vector<ProductState> states_;
  std::vector<std::vector<LabeledEdge>> edges_;
  std::vector<std::size_t> initial_;
  std::map<ProductState, std::size_t> index_;
};

/// Synchronises the plant with the costed observation machine. A label moves
/// the plant along R({x}, P̂(label)); insertions therefore keep it inside the
/// unobservable closure of x. The initial plant states are R(X_0, ε).
/// Throws ConfigurationError when the machine was built over another alphabet.
ProductAutomaton build_product(const PlantNfa& plant, const CostedObservationDfa& gsc);

/// Keeps, for each (plant state, stage), only the cheapest product state and
/// the transitions among kept states, then re-takes the accessible part.
ProductAutomaton reduce_product(const ProductAutomaton& h);

struct EstimateEntry {
  StateId state = 0;
  Cost cost = 0;
  /// One cheapest matching sequence leading to `state`, when requested.
  std::optional<LabelSequence> witness;
};

/// Least-cost state estimate for one received observation.
struct Estimate {
  Word received;
  Cost budget = 0;
  /// States reachable within the budget, sorted by state id.
  std::vector<EstimateEntry> entries;
  /// States only reachable by explanations costing more than the budget.
  std::vector<EstimateEntry> over_budget;

  std::optional<Cost> cost_of(StateId x) const;
  StateSet states() const;
};

/// Final-stage states of a (reduced) product. Saturated entries (cost equal
/// to the product bound) go to `over_budget`.
Estimate ending_estimates(const ProductAutomaton& rh, std::size_t final_stage, Cost budget);

struct EstimateOptions {
  bool witness = false;
};

/// Least-cost state estimation under an attacker budget. Equivalent to
/// ending_estimates(reduce_product(build_product(plant, build_gsc(ω, m, C+1))))
/// but computed by a stage-by-stage sweep with per-stage cost relaxation.
Estimate estimate_least_cost(const PlantNfa& plant, const AttackModel& model,
                             std::span<const Symbol> received, Cost budget,
                             const EstimateOptions& options = {});

}  // namespace tamperest
