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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tamperest/attack_model.hpp"
#include "tamperest/automata.hpp"

namespace tamperest {

/// G_mnd(B): the plant with attack effects embedded as extra transitions
/// over cost layers 0..B. Deletions are labelled by fresh unobservable
/// marker events (one per deletable symbol) so that the verifier may move
/// either copy across them independently.
class CostedPlant {
 public:
  /// The layered automaton itself; its states are named "(x,c)".
  const PlantNfa& automaton() const { return automaton_; }
  Cost bound() const { return bound_; }

  StateId plant_state(StateId layered) const { return layers_.at(layered).first; }
  Cost cost(StateId layered) const { return layers_.at(layered).second; }
  std::optional<StateId> find(StateId plant_state, Cost cost) const;

  /// The marker standing for a deletion of `deleted`, if it is deletable.
  std::optional<Symbol> deletion_marker(Symbol deleted) const;
  bool is_deletion_marker(Symbol e) const { return e >= first_marker_; }

 private:
  friend CostedPlant build_modified_unchecked(const PlantNfa&, const AttackModel&, Cost);
  explicit CostedPlant(PlantNfa automaton) : automaton_(std::move(automaton)) {}

  PlantNfa automaton_;
  Cost bound_ = 0;
  std::vector<std::pair<StateId, Cost>> layers_;
  std::map<std::pair<StateId, Cost>, StateId> index_;
  std::map<Symbol, Symbol> markers_;
  Symbol first_marker_ = 0;
};

/// Builds G_mnd(bound) without checking the diagnosability assumptions.
CostedPlant build_modified_unchecked(const PlantNfa& plant, const AttackModel& model, Cost bound);

/// Builds G_mnd(bound) and checks that it is live and free of unobservable
/// cycles; throws PreconditionError with a witness otherwise.
CostedPlant build_modified(const PlantNfa& plant, const AttackModel& model, Cost bound);

enum class Tag : std::uint8_t { kNormal, kFault };

/// (x, l, x', l'): two runs with equal observations and their fault labels.
struct VerifierState {
  StateId left = 0;
  Tag left_tag = Tag::kNormal;
  StateId right = 0;
  Tag right_tag = Tag::kNormal;

  bool mismatched() const { return left_tag != right_tag; }
  auto operator<=>(const VerifierState&) const = default;
};

/// Which copy of the plant a verifier transition advances.
enum class Move : std::uint8_t { kBoth, kLeft, kRight };

struct VerifierEdge {
  Symbol event;
  Move move;
  std::size_t to;
  auto operator<=>(const VerifierEdge&) const = default;
};

/// Twin-plant F-verifier over an arbitrary NFA (normally G_mnd).
class FVerifier {
 public:
  const PlantNfa& plant() const { return plant_; }
  std::size_t num_states() const { return states_.size(); }
  const VerifierState& state(std::size_t i) const { return states_.at(i); }
  std::optional<std::size_t> find(const VerifierState& s) const;
  const std::vector<std::size_t>& initial() const { return initial_; }
  std::span<const VerifierEdge> edges(std::size_t i) const { return edges_.at(i); }
  std::size_t num_transitions() const;
  std::string format_state(std::size_t i) const;

 private:
  friend FVerifier build_verifier(const PlantNfa&, std::span<const Symbol>);
  explicit FVerifier(PlantNfa plant) : plant_(std::move(plant)) {}

  PlantNfa plant_;
  std::vector<VerifierState> states_;
  std::vector<std::vector<VerifierEdge>> edges_;
  std::vector<std::size_t> initial_;
  std::map<VerifierState, std::size_t> index_;
};

/// Observable events move both copies together; unobservable events move
/// either copy or both; fault events additionally set the moved copy's tag
/// to F. Throws ValidationError if a fault is observable or unknown.
FVerifier build_verifier(const PlantNfa& plant, std::span<const Symbol> faults);
FVerifier build_verifier(const CostedPlant& modified, std::span<const Symbol> faults);

struct VerifierCycle {
  /// Verifier state indices s0, s1, ..., s0.
  std::vector<std::size_t> states;
  /// edges[i] leads from states[i] to states[i + 1].
  std::vector<VerifierEdge> edges;
};

/// A cycle all of whose states pair an F-tagged run with an N-tagged one.
std::optional<VerifierCycle> find_f_confused_cycle(const FVerifier& v);

/// Two runs of G_mnd with equal projections, one faulty, both extendable by
/// repeating their cycle part forever.
struct DiagnosabilityWitness {
  std::vector<std::size_t> access_path;  // verifier states, ends at cycle start
  VerifierCycle cycle;
  Word faulty_prefix, faulty_cycle;
  Word normal_prefix, normal_cycle;
};

struct DiagnosabilityVerdict {
  bool diagnosable = true;
  std::optional<DiagnosabilityWitness> witness;
  std::size_t modified_states = 0;
  std::size_t verifier_states = 0;
};

/// Decides C-constrained tamper-tolerant diagnosability of `faults` against
/// attacks of total cost at most `budget`. Throws PreconditionError when the
/// modified plant is not live or has unobservable cycles.
DiagnosabilityVerdict verify_diagnosability(const PlantNfa& plant, const AttackModel& model,
                                            std::span<const Symbol> faults, Cost budget);

/// Replays a verifier path into the event sequences of its two copies.
void split_runs(std::span<const VerifierEdge> edges, Word& left, Word& right);

}  // namespace tamperest
