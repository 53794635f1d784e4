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

#include "tamperest/automata.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tamperest/error.hpp"
#include "tamperest/graph.hpp"

namespace tamperest {

namespace {

void normalize(StateSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

void check_states(const PlantNfa& plant, const StateSet& states) {
  for (StateId x : states) {
    if (x >= plant.num_states()) {
      throw ValidationError("unknown state id " + std::to_string(x));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Alphabet

Symbol Alphabet::add(std::string name, bool observable) {
  if (name.empty() || name == kEpsilon) {
    throw ValidationError("'" + name + "' is not a legal symbol name");
  }
  if (name.find_first_of(" \t\r\n") != std::string::npos) {
    throw ValidationError("symbol name '" + name + "' contains whitespace");
  }
  if (index_.count(name) != 0) throw ValidationError("duplicate symbol '" + name + "'");
  const auto id = static_cast<Symbol>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  observable_.push_back(observable);
  return id;
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::at(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw ValidationError("unknown symbol '" + std::string(name) + "'");
}

std::vector<Symbol> Alphabet::observables() const {
  std::vector<Symbol> out;
  for (Symbol s = 0; s < names_.size(); ++s) {
    if (observable_[s]) out.push_back(s);
  }
  return out;
}

std::vector<Symbol> Alphabet::unobservables() const {
  std::vector<Symbol> out;
  for (Symbol s = 0; s < names_.size(); ++s) {
    if (!observable_[s]) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// PlantNfa

std::optional<StateId> PlantNfa::find_state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

StateId PlantNfa::state(std::string_view name) const {
  if (auto x = find_state(name)) return *x;
  throw ValidationError("unknown state '" + std::string(name) + "'");
}

bool PlantNfa::is_fault(Symbol s) const {
  return std::binary_search(faults_.begin(), faults_.end(), s);
}

std::span<const StateId> PlantNfa::successors(StateId x, Symbol e) const {
  if (x >= num_states()) throw ValidationError("unknown state id " + std::to_string(x));
  if (!alphabet_.contains(e)) throw ValidationError("unknown symbol id " + std::to_string(e));
  return successors_[static_cast<std::size_t>(x) * alphabet_.size() + e];
}

std::vector<PlantNfa::Transition> PlantNfa::transitions() const {
  std::vector<Transition> out;
  for (StateId x = 0; x < num_states(); ++x) {
    for (const Edge& e : edges_[x]) out.push_back({x, e.event, e.to});
  }
  return out;
}

std::size_t PlantNfa::num_transitions() const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

bool PlantNfa::operator==(const PlantNfa& other) const {
  return alphabet_ == other.alphabet_ && state_names_ == other.state_names_ &&
         initial_ == other.initial_ && faults_ == other.faults_ && edges_ == other.edges_;
}

// ---------------------------------------------------------------------------
// PlantBuilder

StateId PlantBuilder::add_state(std::string name) {
  if (name.empty()) throw ValidationError("empty state name");
  if (plant_.state_index_.count(name) != 0) {
    throw ValidationError("duplicate state '" + name + "'");
  }
  const auto id = static_cast<StateId>(plant_.state_names_.size());
  plant_.state_index_.emplace(name, id);
  plant_.state_names_.push_back(std::move(name));
  return id;
}

Symbol PlantBuilder::add_event(std::string name, bool observable) {
  return plant_.alphabet_.add(std::move(name), observable);
}

void PlantBuilder::mark_fault(Symbol e) {
  if (!plant_.alphabet_.contains(e)) throw ValidationError("unknown fault symbol");
  if (plant_.alphabet_.observable(e)) {
    throw ValidationError("fault event '" + plant_.alphabet_.name(e) + "' must be unobservable");
  }
  plant_.faults_.push_back(e);
}

void PlantBuilder::add_initial(StateId x) {
  if (x >= num_states()) throw ValidationError("unknown initial state");
  plant_.initial_.push_back(x);
}

void PlantBuilder::add_initial(std::string_view state) { add_initial(plant_.state(state)); }

void PlantBuilder::add_transition(StateId from, Symbol event, StateId to) {
  if (from >= num_states() || to >= num_states()) {
    throw ValidationError("transition endpoint is not a state");
  }
  if (!plant_.alphabet_.contains(event)) throw ValidationError("transition label is not an event");
  pending_.push_back({from, event, to});
}

void PlantBuilder::add_transition(std::string_view from, std::string_view event,
                                  std::string_view to) {
  add_transition(plant_.state(from), plant_.alphabet_.at(event), plant_.state(to));
}

PlantNfa PlantBuilder::build() && {
  PlantNfa& p = plant_;
  if (p.state_names_.empty()) throw ValidationError("plant has no states");
  if (p.initial_.empty()) throw ValidationError("plant has no initial state");
  normalize(p.initial_);
  std::sort(p.faults_.begin(), p.faults_.end());
  p.faults_.erase(std::unique(p.faults_.begin(), p.faults_.end()), p.faults_.end());

  std::sort(pending_.begin(), pending_.end());
  pending_.erase(std::unique(pending_.begin(), pending_.end()), pending_.end());
  const std::size_t sigma = p.alphabet_.size();
  p.edges_.assign(p.num_states(), {});
  p.successors_.assign(p.num_states() * sigma, {});
  for (const auto& t : pending_) {
    p.edges_[t.from].push_back({t.event, t.to});
    p.successors_[static_cast<std::size_t>(t.from) * sigma + t.event].push_back(t.to);
  }
  pending_.clear();
  return std::move(plant_);
}

// ---------------------------------------------------------------------------
// Words

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == kEpsilon) continue;
    out.push_back(alphabet.at(token));
  }
  return out;
}

std::string format_word(const Alphabet& alphabet, std::span<const Symbol> word) {
  if (word.empty()) return std::string(kEpsilon);
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i != 0) out += ' ';
    out += alphabet.name(word[i]);
  }
  return out;
}

std::string format_states(const PlantNfa& plant, const StateSet& states) {
  std::string out = "{";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i != 0) out += ',';
    out += plant.state_name(states[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Operations

StateSet step(const PlantNfa& plant, const StateSet& from, std::span<const Symbol> events) {
  check_states(plant, from);
  StateSet current = from;
  normalize(current);
  for (Symbol e : events) {
    if (!plant.alphabet().contains(e)) throw ValidationError("unknown symbol id " + std::to_string(e));
    StateSet next;
    for (StateId x : current) {
      auto succ = plant.successors(x, e);
      next.insert(next.end(), succ.begin(), succ.end());
    }
    normalize(next);
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

Word project(const PlantNfa& plant, std::span<const Symbol> events) {
  Word out;
  for (Symbol e : events) {
    if (!plant.alphabet().contains(e)) throw ValidationError("unknown symbol id " + std::to_string(e));
    if (plant.is_observable(e)) out.push_back(e);
  }
  return out;
}

StateSet unobservable_closure(const PlantNfa& plant, const StateSet& from) {
  check_states(plant, from);
  std::vector<bool> seen(plant.num_states(), false);
  std::deque<StateId> queue;
  for (StateId x : from) {
    if (!seen[x]) {
      seen[x] = true;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    const StateId x = queue.front();
    queue.pop_front();
    for (const auto& edge : plant.edges(x)) {
      if (plant.is_observable(edge.event) || seen[edge.to]) continue;
      seen[edge.to] = true;
      queue.push_back(edge.to);
    }
  }
  StateSet out;
  for (StateId x = 0; x < plant.num_states(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  return out;
}

StateSet reach(const PlantNfa& plant, const StateSet& from, std::span<const Symbol> observed) {
  for (Symbol e : observed) {
    if (!plant.alphabet().contains(e) || !plant.is_observable(e)) {
      throw ValidationError("reach: symbol " + std::to_string(e) + " is not observable");
    }
  }
  StateSet current = unobservable_closure(plant, from);
  for (Symbol e : observed) {
    StateSet next;
    for (StateId x : current) {
      auto succ = plant.successors(x, e);
      next.insert(next.end(), succ.begin(), succ.end());
    }
    normalize(next);
    current = unobservable_closure(plant, next);
    if (current.empty()) break;
  }
  return current;
}

std::optional<std::size_t> ObserverDfa::find(const StateSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ObserverDfa::next(std::size_t from, Symbol e) const {
  const auto& row = delta_.at(from);
  auto it = row.find(e);
  if (it == row.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ObserverDfa::run(std::span<const Symbol> observed) const {
  std::size_t q = initial();
  for (Symbol e : observed) {
    auto n = next(q, e);
    if (!n) return std::nullopt;
    q = *n;
  }
  return q;
}

ObserverDfa build_observer(const PlantNfa& plant) {
  ObserverDfa obs;
  const auto observables = plant.alphabet().observables();
  auto intern = [&obs](StateSet s) {
    auto [it, inserted] = obs.index_.emplace(s, obs.states_.size());
    if (inserted) {
      obs.states_.push_back(std::move(s));
      obs.delta_.emplace_back();
    }
    return it->second;
  };
  intern(unobservable_closure(plant, plant.initial()));
  for (std::size_t i = 0; i < obs.states_.size(); ++i) {
    for (Symbol e : observables) {
      const Symbol word[] = {e};
      StateSet target = reach(plant, obs.states_[i], word);
      if (target.empty()) continue;
      const std::size_t j = intern(std::move(target));
      obs.delta_[i].emplace(e, j);
    }
  }
  return obs;
}

UnobservableCycleReport check_no_unobservable_cycles(const PlantNfa& plant) {
  graph::Adjacency adj(plant.num_states());
  for (StateId x = 0; x < plant.num_states(); ++x) {
    for (const auto& e : plant.edges(x)) {
      if (!plant.is_observable(e.event)) adj[x].push_back(e.to);
    }
  }
  const auto cyclic = graph::on_cycle(adj);
  for (StateId x = 0; x < plant.num_states(); ++x) {
    if (!cyclic[x]) continue;
    const auto path = graph::cycle_through(adj, x);
    UnobservableCycleReport report{false, {}};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const auto from = static_cast<StateId>(path[i]);
      const auto to = static_cast<StateId>(path[i + 1]);
      for (const auto& e : plant.edges(from)) {
        if (e.to == to && !plant.is_observable(e.event)) {
          report.cycle.push_back({from, e.event, to});
          break;
        }
      }
    }
    return report;
  }
  return {};
}

std::vector<bool> reachable_states(const PlantNfa& plant) {
  std::vector<bool> seen(plant.num_states(), false);
  std::deque<StateId> queue;
  for (StateId x : plant.initial()) {
    seen[x] = true;
    queue.push_back(x);
  }
  while (!queue.empty()) {
    const StateId x = queue.front();
    queue.pop_front();
    for (const auto& e : plant.edges(x)) {
      if (!seen[e.to]) {
        seen[e.to] = true;
        queue.push_back(e.to);
      }
    }
  }
  return seen;
}

LivenessReport check_liveness(const PlantNfa& plant) {
  const auto reachable = reachable_states(plant);
  for (StateId x = 0; x < plant.num_states(); ++x) {
    if (reachable[x] && plant.edges(x).empty()) return {false, x};
  }
  return {};
}

}  // namespace tamperest
