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

#include "tamperest/diagnoser.hpp"

#include <algorithm>
#include <stdexcept>

#include "tamperest/error.hpp"
#include "tamperest/graph.hpp"

namespace tamperest {

namespace {

std::string layered_name(const PlantNfa& plant, StateId x, Cost c) {
  return "(" + plant.state_name(x) + "," + std::to_string(c) + ")";
}

std::string fresh_marker_name(const Alphabet& alphabet, const std::string& base) {
  std::string name = "del_" + base;
  while (alphabet.find(name)) name += "'";
  return name;
}

void check_faults(const PlantNfa& plant, std::span<const Symbol> faults) {
  for (Symbol f : faults) {
    if (!plant.alphabet().contains(f)) throw ValidationError("unknown fault event");
    if (plant.is_observable(f)) {
      throw ValidationError("fault event '" + plant.alphabet().name(f) + "' is observable");
    }
  }
}

}  // namespace

std::optional<StateId> CostedPlant::find(StateId plant_state, Cost cost) const {
  auto it = index_.find({plant_state, cost});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Symbol> CostedPlant::deletion_marker(Symbol deleted) const {
  auto it = markers_.find(deleted);
  if (it == markers_.end()) return std::nullopt;
  return it->second;
}

CostedPlant build_modified_unchecked(const PlantNfa& plant, const AttackModel& model, Cost bound) {
  if (!(plant.alphabet() == model.alphabet())) {
    throw ConfigurationError("attack model and plant use different alphabets");
  }
  const Alphabet& sigma = plant.alphabet();
  PlantBuilder builder;
  for (Symbol e = 0; e < sigma.size(); ++e) builder.add_event(sigma.name(e), sigma.observable(e));
  for (Symbol f : plant.faults()) builder.mark_fault(f);
  std::map<Symbol, Symbol> markers;
  const auto first_marker = static_cast<Symbol>(sigma.size());
  for (const auto& [deleted, c] : model.deletions()) {
    markers.emplace(deleted,
                    builder.add_event(fresh_marker_name(builder.alphabet(), sigma.name(deleted)), false));
  }

  std::vector<std::pair<StateId, Cost>> layers;
  std::map<std::pair<StateId, Cost>, StateId> index;
  auto intern = [&](StateId x, Cost c) {
    auto [it, inserted] = index.emplace(std::make_pair(x, c), static_cast<StateId>(layers.size()));
    if (inserted) {
      builder.add_state(layered_name(plant, x, c));
      layers.emplace_back(x, c);
    }
    return it->second;
  };
  for (StateId x : plant.initial()) builder.add_initial(intern(x, 0));

  const auto observables = sigma.observables();
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto [x, c] = layers[i];
    const auto from = static_cast<StateId>(i);
    // Unattacked behaviour, same layer.
    for (const auto& e : plant.edges(x)) builder.add_transition(from, e.event, intern(e.to, c));
    for (Symbol e : observables) {
      // The plant executes σ, the attacker reports e instead.
      for (const auto& [original, cost] : model.substitutions_into(e)) {
        if (c + cost > bound) continue;
        for (StateId y : plant.successors(x, original)) {
          builder.add_transition(from, e, intern(y, c + cost));
        }
      }
      // The attacker reports e although the plant did not move.
      if (auto cost = model.insertion_cost(e); cost && c + *cost <= bound) {
        builder.add_transition(from, e, intern(x, c + *cost));
      }
    }
    // The plant executes σ, the attacker erases the report.
    for (const auto& [deleted, cost] : model.deletions()) {
      if (c + cost > bound) continue;
      for (StateId y : plant.successors(x, deleted)) {
        builder.add_transition(from, markers.at(deleted), intern(y, c + cost));
      }
    }
  }

  CostedPlant out(std::move(builder).build());
  out.bound_ = bound;
  out.layers_ = std::move(layers);
  out.index_ = std::move(index);
  out.markers_ = std::move(markers);
  out.first_marker_ = first_marker;
  return out;
}

CostedPlant build_modified(const PlantNfa& plant, const AttackModel& model, Cost bound) {
  CostedPlant modified = build_modified_unchecked(plant, model, bound);
  const PlantNfa& gm = modified.automaton();
  if (const auto cyc = check_no_unobservable_cycles(gm); !cyc.acyclic) {
    std::vector<std::string> witness;
    for (const auto& t : cyc.cycle) {
      witness.push_back(gm.state_name(t.from) + " -" + gm.alphabet().name(t.event) + "-> " +
                        gm.state_name(t.to));
    }
    throw PreconditionError("modified plant has a cycle of unobservable events", witness);
  }
  if (const auto live = check_liveness(gm); !live.live) {
    throw PreconditionError("modified plant is not live: a reachable state has no successor",
                            {gm.state_name(*live.dead_state)});
  }
  return modified;
}

std::optional<std::size_t> FVerifier::find(const VerifierState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FVerifier::num_transitions() const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

std::string FVerifier::format_state(std::size_t i) const {
  const auto& s = states_.at(i);
  auto tag = [](Tag t) { return t == Tag::kFault ? "F" : "N"; };
  return "(" + plant_.state_name(s.left) + "," + tag(s.left_tag) + "," +
         plant_.state_name(s.right) + "," + tag(s.right_tag) + ")";
}

FVerifier build_verifier(const PlantNfa& plant, std::span<const Symbol> faults) {
  check_faults(plant, faults);
  std::vector<bool> is_fault(plant.alphabet().size(), false);
  for (Symbol f : faults) is_fault[f] = true;

  FVerifier v(plant);
  auto intern = [&v](const VerifierState& s) {
    auto [it, inserted] = v.index_.emplace(s, v.states_.size());
    if (inserted) {
      v.states_.push_back(s);
      v.edges_.emplace_back();
    }
    return it->second;
  };
  for (StateId x : plant.initial()) {
    for (StateId y : plant.initial()) {
      v.initial_.push_back(intern({x, Tag::kNormal, y, Tag::kNormal}));
    }
  }

  for (std::size_t i = 0; i < v.states_.size(); ++i) {
    const VerifierState s = v.states_[i];
    std::vector<VerifierEdge> out;
    for (Symbol e = 0; e < plant.alphabet().size(); ++e) {
      const auto left = plant.successors(s.left, e);
      const auto right = plant.successors(s.right, e);
      if (plant.is_observable(e)) {
        for (StateId a : left) {
          for (StateId b : right) out.push_back({e, Move::kBoth, intern({a, s.left_tag, b, s.right_tag})});
        }
        continue;
      }
      const Tag lt = is_fault[e] ? Tag::kFault : s.left_tag;
      const Tag rt = is_fault[e] ? Tag::kFault : s.right_tag;
      for (StateId a : left) out.push_back({e, Move::kLeft, intern({a, lt, s.right, s.right_tag})});
      for (StateId b : right) out.push_back({e, Move::kRight, intern({s.left, s.left_tag, b, rt})});
      for (StateId a : left) {
        for (StateId b : right) out.push_back({e, Move::kBoth, intern({a, lt, b, rt})});
      }
    }
    std::sort(out.begin(), out.end());
    v.edges_[i] = std::move(out);
  }
  return v;
}

FVerifier build_verifier(const CostedPlant& modified, std::span<const Symbol> faults) {
  return build_verifier(modified.automaton(), faults);
}

std::optional<VerifierCycle> find_f_confused_cycle(const FVerifier& v) {
  graph::Adjacency adj(v.num_states());
  for (std::size_t i = 0; i < v.num_states(); ++i) {
    if (!v.state(i).mismatched()) continue;
    for (const auto& e : v.edges(i)) {
      if (v.state(e.to).mismatched()) adj[i].push_back(e.to);
    }
  }
  const auto cyclic = graph::on_cycle(adj);
  for (std::size_t i = 0; i < v.num_states(); ++i) {
    if (!cyclic[i]) continue;
    const auto path = graph::cycle_through(adj, i);
    VerifierCycle cycle;
    cycle.states = path;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      for (const auto& e : v.edges(path[k])) {
        if (e.to == path[k + 1]) {
          cycle.edges.push_back(e);
          break;
        }
      }
      // F tags never revert, so tags are constant around any cycle.
      if (v.state(path[k]).left_tag != v.state(path[k + 1]).left_tag ||
          v.state(path[k]).right_tag != v.state(path[k + 1]).right_tag) {
        throw std::logic_error("verifier tags change along a cycle");
      }
    }
    return cycle;
  }
  return std::nullopt;
}

void split_runs(std::span<const VerifierEdge> edges, Word& left, Word& right) {
  for (const auto& e : edges) {
    if (e.move != Move::kRight) left.push_back(e.event);
    if (e.move != Move::kLeft) right.push_back(e.event);
  }
}

DiagnosabilityVerdict verify_diagnosability(const PlantNfa& plant, const AttackModel& model,
                                            std::span<const Symbol> faults, Cost budget) {
  check_faults(plant, faults);
  const CostedPlant modified = build_modified(plant, model, budget);
  const FVerifier v = build_verifier(modified, faults);

  const std::size_t side = 2 * plant.num_states() * (std::size_t{budget} + 2);
  if (v.num_states() > side * side) {
    throw std::logic_error("verifier exceeds (2|X|(C+2))^2 states");
  }

  DiagnosabilityVerdict verdict;
  verdict.modified_states = modified.automaton().num_states();
  verdict.verifier_states = v.num_states();
  auto cycle = find_f_confused_cycle(v);
  if (!cycle) return verdict;

  verdict.diagnosable = false;
  DiagnosabilityWitness w;
  graph::Adjacency adj(v.num_states());
  for (std::size_t i = 0; i < v.num_states(); ++i) {
    for (const auto& e : v.edges(i)) adj[i].push_back(e.to);
  }
  w.access_path = graph::shortest_path(adj, v.initial(), cycle->states.front());
  std::vector<VerifierEdge> access_edges;
  for (std::size_t k = 0; k + 1 < w.access_path.size(); ++k) {
    for (const auto& e : v.edges(w.access_path[k])) {
      if (e.to == w.access_path[k + 1]) {
        access_edges.push_back(e);
        break;
      }
    }
  }
  Word left_prefix, right_prefix, left_cycle, right_cycle;
  split_runs(access_edges, left_prefix, right_prefix);
  split_runs(cycle->edges, left_cycle, right_cycle);
  const bool faulty_left = v.state(cycle->states.front()).left_tag == Tag::kFault;
  w.faulty_prefix = faulty_left ? left_prefix : right_prefix;
  w.faulty_cycle = faulty_left ? left_cycle : right_cycle;
  w.normal_prefix = faulty_left ? right_prefix : left_prefix;
  w.normal_cycle = faulty_left ? right_cycle : left_cycle;
  w.cycle = std::move(*cycle);
  verdict.witness = std::move(w);
  return verdict;
}

}  // namespace tamperest
