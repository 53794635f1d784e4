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

namespace tamperest {

struct LabeledEdge {
  AttackLabel label;
  std::size_t to;
  auto operator<=>(const LabeledEdge&) const = default;
};

/// G_s: accepts exactly the matching sequences of a received observation.
/// Stage i means "the first i received symbols have been explained".
/// Deletion labels loop on a stage; every other label advances by one.
class ObservationAutomaton {
 public:
  std::size_t num_stages() const { return edges_.size(); }
  std::size_t final_stage() const { return edges_.size() - 1; }
  const Word& received() const { return received_; }
  std::span<const LabeledEdge> edges(std::size_t stage) const { return edges_.at(stage); }
  std::optional<std::size_t> next(std::size_t stage, const AttackLabel& label) const;

 private:
  friend ObservationAutomaton build_gs(std::span<const Symbol>, const AttackModel&);
  Word received_;
  std::vector<std::vector<LabeledEdge>> edges_;
};

ObservationAutomaton build_gs(std::span<const Symbol> received, const AttackModel& model);

struct StageCost {
  std::size_t stage = 0;
  Cost cost = 0;
  auto operator<=>(const StageCost&) const = default;
};

/// G_sc(B): G_s with a cost counter that saturates at `bound`. A state whose
/// cost equals the bound stands for "accumulated cost >= bound". For an
/// attacker budget C the estimator uses bound C + 1.
class CostedObservationDfa {
 public:
  Cost bound() const { return bound_; }
  std::size_t final_stage() const { return final_stage_; }
  const Word& received() const { return received_; }
  const AttackModel& model() const { return model_; }

  std::size_t num_states() const { return states_.size(); }
  const StageCost& state(std::size_t i) const { return states_.at(i); }
  std::size_t initial() const { return 0; }
  std::optional<std::size_t> find(StageCost s) const;
  std::span<const LabeledEdge> edges(std::size_t i) const { return edges_.at(i); }
  std::optional<std::size_t> next(std::size_t i, const AttackLabel& label) const;
  /// Runs a whole label sequence from the initial state.
  std::optional<std::size_t> run(std::span<const AttackLabel> labels) const;

 private:
  friend CostedObservationDfa build_gsc(std::span<const Symbol>, const AttackModel&, Cost);
  explicit CostedObservationDfa(const AttackModel& model) : model_(model) {}

  AttackModel model_;
  Word received_;
  Cost bound_ = 0;
  std::size_t final_stage_ = 0;
  std::vector<StageCost> states_;
  std::vector<std::vector<LabeledEdge>> edges_;
  std::map<StageCost, std::size_t> index_;
};

CostedObservationDfa build_gsc(std::span<const Symbol> received, const AttackModel& model,
                               Cost bound);

}  // namespace tamperest
