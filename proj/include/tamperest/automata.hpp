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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tamperest {

using StateId = std::uint32_t;
using Symbol = std::uint32_t;

/// Sorted, duplicate-free set of plant states.
using StateSet = std::vector<StateId>;
/// A finite event sequence.
using Word = std::vector<Symbol>;

/// Reserved spelling of the empty word; never a legal symbol name.
inline constexpr std::string_view kEpsilon = "ε";

/// Interned event names together with the observable/unobservable split.
class Alphabet {
 public:
  Symbol add(std::string name, bool observable);

  std::optional<Symbol> find(std::string_view name) const;
  /// Throws ValidationError for an unknown name.
  Symbol at(std::string_view name) const;

  const std::string& name(Symbol s) const { return names_.at(s); }
  bool observable(Symbol s) const { return observable_.at(s); }
  bool contains(Symbol s) const { return s < names_.size(); }
  std::size_t size() const { return names_.size(); }

  std::vector<Symbol> observables() const;
  std::vector<Symbol> unobservables() const;

  bool operator==(const Alphabet& other) const {
    return names_ == other.names_ && observable_ == other.observable_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<bool> observable_;
  std::unordered_map<std::string, Symbol> index_;
};

class PlantBuilder;

/// Partially observed nondeterministic finite automaton with a distinguished
/// set of (unobservable) fault events. Immutable once built; a missing
/// transition simply means "undefined".
class PlantNfa {
 public:
  struct Edge {
    Symbol event;
    StateId to;
    auto operator<=>(const Edge&) const = default;
  };
  struct Transition {
    StateId from;
    Symbol event;
    StateId to;
    auto operator<=>(const Transition&) const = default;
  };

  std::size_t num_states() const { return state_names_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }

  const std::string& state_name(StateId x) const { return state_names_.at(x); }
  std::optional<StateId> find_state(std::string_view name) const;
  /// Throws ValidationError for an unknown name.
  StateId state(std::string_view name) const;

  const StateSet& initial() const { return initial_; }
  const std::vector<Symbol>& faults() const { return faults_; }
  bool is_fault(Symbol s) const;
  bool is_observable(Symbol s) const { return alphabet_.observable(s); }

  /// δ(x, e); empty when undefined.
  std::span<const StateId> successors(StateId x, Symbol e) const;
  /// All outgoing edges of x ordered by (event, target).
  std::span<const Edge> edges(StateId x) const { return edges_.at(x); }
  std::vector<Transition> transitions() const;
  std::size_t num_transitions() const;

  bool operator==(const PlantNfa& other) const;

 private:
  friend class PlantBuilder;
  PlantNfa() = default;

  Alphabet alphabet_;
  std::vector<std::string> state_names_;
  std::unordered_map<std::string, StateId> state_index_;
  StateSet initial_;
  std::vector<Symbol> faults_;
  std::vector<std::vector<Edge>> edges_;
  // successors_[x * |Σ| + e]
  std::vector<std::vector<StateId>> successors_;
};

/// Incremental construction of a PlantNfa; `build()` validates the result.
class PlantBuilder {
 public:
  StateId add_state(std::string name);
  Symbol add_event(std::string name, bool observable);
  void mark_fault(Symbol e);
  void add_initial(StateId x);
  void add_transition(StateId from, Symbol event, StateId to);

  // Name-based conveniences.
  void add_initial(std::string_view state);
  void add_transition(std::string_view from, std::string_view event, std::string_view to);

  const Alphabet& alphabet() const { return plant_.alphabet_; }
  std::size_t num_states() const { return plant_.state_names_.size(); }

  PlantNfa build() &&;

 private:
  PlantNfa plant_;
  std::vector<PlantNfa::Transition> pending_;
};

/// Parses a whitespace-separated list of symbol names.
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, std::span<const Symbol> word);
std::string format_states(const PlantNfa& plant, const StateSet& states);

/// δ(B, s) under the recursive extension of the transition relation.
StateSet step(const PlantNfa& plant, const StateSet& from, std::span<const Symbol> events);

/// Natural projection onto the observable events.
Word project(const PlantNfa& plant, std::span<const Symbol> events);

/// States reachable from `from` using unobservable events only (including `from`).
StateSet unobservable_closure(const PlantNfa& plant, const StateSet& from);

/// R(B, ω): every state reachable by a run whose projection is ω. Throws
/// ValidationError when ω contains an unobservable or unknown symbol.
StateSet reach(const PlantNfa& plant, const StateSet& from, std::span<const Symbol> observed);

/// Deterministic observer over subsets of plant states, accessible part only.
class ObserverDfa {
 public:
  std::size_t num_states() const { return states_.size(); }
  const StateSet& state(std::size_t i) const { return states_.at(i); }
  std::size_t initial() const { return 0; }
  std::optional<std::size_t> find(const StateSet& s) const;
  std::optional<std::size_t> next(std::size_t from, Symbol e) const;
  std::optional<std::size_t> run(std::span<const Symbol> observed) const;
  /// Outgoing edges of state i ordered by symbol.
  const std::map<Symbol, std::size_t>& edges(std::size_t i) const { return delta_.at(i); }

 private:
  friend ObserverDfa build_observer(const PlantNfa& plant);
  std::vector<StateSet> states_;
  std::vector<std::map<Symbol, std::size_t>> delta_;
  std::map<StateSet, std::size_t> index_;
};

ObserverDfa build_observer(const PlantNfa& plant);

struct UnobservableCycleReport {
  bool acyclic = true;
  /// One offending cycle when `acyclic` is false; first.from == last.to.
  std::vector<PlantNfa::Transition> cycle;
};

UnobservableCycleReport check_no_unobservable_cycles(const PlantNfa& plant);

struct LivenessReport {
  bool live = true;
  /// A reachable state without outgoing transitions when `live` is false.
  std::optional<StateId> dead_state;
};

LivenessReport check_liveness(const PlantNfa& plant);

/// States reachable from the initial set by any event sequence.
std::vector<bool> reachable_states(const PlantNfa& plant);

}  // namespace tamperest
