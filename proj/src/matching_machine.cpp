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

#include "tamperest/matching_machine.hpp"

#include <algorithm>

#include "tamperest/error.hpp"

namespace tamperest {

std::optional<std::size_t> ObservationAutomaton::next(std::size_t stage,
                                                      const AttackLabel& label) const {
  for (const auto& e : edges_.at(stage)) {
    if (e.label == label) return e.to;
  }
  return std::nullopt;
}

ObservationAutomaton build_gs(std::span<const Symbol> received, const AttackModel& model) {
  const Alphabet& alphabet = model.alphabet();
  for (Symbol s : received) {
    if (!alphabet.contains(s) || !alphabet.observable(s)) {
      throw ValidationError("received observation contains a non-observable symbol");
    }
  }
  ObservationAutomaton gs;
  gs.received_.assign(received.begin(), received.end());
  gs.edges_.resize(received.size() + 1);
  for (std::size_t i = 0; i <= received.size(); ++i) {
    auto& out = gs.edges_[i];
    for (const auto& [s, c] : model.deletions()) out.push_back({AttackLabel::deletion(s), i});
    if (i == received.size()) continue;
    const Symbol next = received[i];
    out.push_back({AttackLabel::plain(next), i + 1});
    if (model.insertion_cost(next)) out.push_back({AttackLabel::insertion(next), i + 1});
    for (const auto& [from, c] : model.substitutions_into(next)) {
      out.push_back({AttackLabel::substitution(from, next), i + 1});
    }
    std::sort(out.begin(), out.end());
  }
  return gs;
}

std::optional<std::size_t> CostedObservationDfa::find(StageCost s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CostedObservationDfa::next(std::size_t i,
                                                      const AttackLabel& label) const {
  for (const auto& e : edges_.at(i)) {
    if (e.label == label) return e.to;
  }
  return std::nullopt;
}

std::optional<std::size_t> CostedObservationDfa::run(std::span<const AttackLabel> labels) const {
  std::size_t q = initial();
  for (const auto& l : labels) {
    auto n = next(q, l);
    if (!n) return std::nullopt;
    q = *n;
  }
  return q;
}

CostedObservationDfa build_gsc(std::span<const Symbol> received, const AttackModel& model,
                               Cost bound) {
  const ObservationAutomaton gs = build_gs(received, model);
  CostedObservationDfa gsc(model);
  gsc.received_ = gs.received();
  gsc.bound_ = bound;
  gsc.final_stage_ = gs.final_stage();

  auto intern = [&gsc](StageCost s) {
    auto [it, inserted] = gsc.index_.emplace(s, gsc.states_.size());
    if (inserted) {
      gsc.states_.push_back(s);
      gsc.edges_.emplace_back();
    }
    return it->second;
  };
  intern({0, 0});
  for (std::size_t i = 0; i < gsc.states_.size(); ++i) {
    const StageCost from = gsc.states_[i];
    for (const auto& e : gs.edges(from.stage)) {
      const Cost c = std::min<Cost>(from.cost + label_cost(e.label, model), bound);
      const std::size_t j = intern({e.to, c});
      gsc.edges_[i].push_back({e.label, j});
    }
  }
  return gsc;
}

}  // namespace tamperest
