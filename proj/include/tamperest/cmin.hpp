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
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tamperest/attack_model.hpp"
#include "tamperest/automata.hpp"
#include "tamperest/diagnoser.hpp"

namespace tamperest {

/// Stands for ε in (event, cost) pairs of the corrupted automaton.
inline constexpr Symbol kEpsilonEvent = std::numeric_limits<Symbol>::max();

struct CorruptedEdge {
  Symbol event;  // kEpsilonEvent for an erased observation
  Cost cost;
  StateId to;
  auto operator<=>(const CorruptedEdge&) const = default;
};

/// G_cn: the plant with every attack turned into an (event, cost) edge.
/// (e, 0) edges are the plant's own transitions; (ε, 0) is the implicit
/// identity and is not stored.
class CorruptedAutomaton {
 public:
  const PlantNfa& plant() const { return plant_; }
  std::span<const CorruptedEdge> edges(StateId x) const { return edges_.at(x); }
  /// δ_cn(x, (e, c)), including the identity for (ε, 0).
  StateSet successors(StateId x, Symbol event, Cost cost) const;
  std::string format_event(Symbol event) const;

 private:
  friend CorruptedAutomaton build_corrupted(const PlantNfa&, const AttackModel&);
  explicit CorruptedAutomaton(const PlantNfa& plant) : plant_(plant) {}

  PlantNfa plant_;
  std::vector<std::vector<CorruptedEdge>> edges_;
};

CorruptedAutomaton build_corrupted(const PlantNfa& plant, const AttackModel& model);

/// ((e, c), (e, c')): both copies report e; the left pays c, the right c'.
struct PairedLabel {
  Symbol event;
  Cost left;
  Cost right;
  bool free() const { return left == 0 && right == 0; }
  auto operator<=>(const PairedLabel&) const = default;
};

struct PairedEdge {
  PairedLabel label;
  Move move;
  std::size_t to;
  auto operator<=>(const PairedEdge&) const = default;
};

/// V'_F: twin verifier over G_cn with independent per-copy attack costs.
class ModifiedVerifier {
 public:
  const CorruptedAutomaton& corrupted() const { return corrupted_; }
  std::size_t num_states() const { return states_.size(); }
  const VerifierState& state(std::size_t i) const { return states_.at(i); }
  std::optional<std::size_t> find(const VerifierState& s) const;
  const std::vector<std::size_t>& initial() const { return initial_; }
  std::span<const PairedEdge> edges(std::size_t i) const { return edges_.at(i); }
  std::size_t num_transitions() const;
  std::string format_state(std::size_t i) const;
  std::string format_label(const PairedLabel& label) const;

 private:
  friend ModifiedVerifier build_modified_verifier(const CorruptedAutomaton&, std::span<const Symbol>);
  explicit ModifiedVerifier(const CorruptedAutomaton& gc) : corrupted_(gc) {}

  CorruptedAutomaton corrupted_;
  std::vector<VerifierState> states_;
  std::vector<std::vector<PairedEdge>> edges_;
  std::vector<std::size_t> initial_;
  std::map<VerifierState, std::size_t> index_;
};

/// Observable events and ε synchronise on the reported symbol with any
/// combination of per-copy costs; unobservable and fault events follow the
/// zero-cost three-way interleaving. The pure ((ε,0),(ε,0)) self-loop is
/// omitted.
ModifiedVerifier build_modified_verifier(const CorruptedAutomaton& gc,
                                         std::span<const Symbol> faults);

struct ModifiedCycle {
  std::vector<std::size_t> states;  // s0, ..., s0
  std::vector<PairedEdge> edges;
};

/// X_e: states on some cycle of free transitions between label-mismatched
/// states, plus one witness cycle per such strongly connected component.
struct EndingStates {
  std::vector<std::size_t> states;
  std::vector<ModifiedCycle> cycles;
};

EndingStates find_ending_states(const ModifiedVerifier& v);

struct CostPair {
  Cost left = 0;
  Cost right = 0;

  Cost total() const { return left > right ? left : right; }
  /// Componentwise <= and different.
  bool dominates(const CostPair& other) const {
    return left <= other.left && right <= other.right && *this != other;
  }
  auto operator<=>(const CostPair&) const = default;
};

/// Antichain of cost pairs under componentwise order, kept sorted.
class ParetoSet {
 public:
  /// Inserts `candidate` unless an equal or dominating pair is present,
  /// dropping every pair it dominates. Returns whether the set changed.
  bool update(const CostPair& candidate);

  std::span<const CostPair> pairs() const { return pairs_; }
  bool contains(const CostPair& p) const;
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

 private:
  std::vector<CostPair> pairs_;
};

struct ParetoUpdate {
  ParetoSet labels;
  bool changed = false;
};

ParetoUpdate pareto_update(ParetoSet labels, const CostPair& candidate);

struct CminStats {
  std::size_t labels_processed = 0;
  std::size_t label_insertions = 0;
  /// 4|X|^2 * (4|X|^2 * c_max + 1).
  std::size_t work_bound = 0;
};

struct CminResult {
  std::optional<Cost> cmin;
  EndingStates ending;
  /// Pareto labels per verifier state after the search.
  std::vector<ParetoSet> labels;
  /// One cheapest path from an initial state into X_e.
  std::vector<std::size_t> witness_states;
  std::vector<PairedEdge> witness_edges;
  CminStats stats;
};

/// Label-correcting Pareto search over a built modified verifier.
CminResult compute_cmin(const ModifiedVerifier& v, Cost max_single_cost);

/// Minimum attack budget that keeps some fault undiagnosed forever, or
/// nothing if no modified F-confused cycle exists.
CminResult compute_cmin(const PlantNfa& plant, const AttackModel& model,
                        std::span<const Symbol> faults);

}  // namespace tamperest
