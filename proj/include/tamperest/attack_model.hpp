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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tamperest/automata.hpp"

namespace tamperest {

/// Attack costs are natural numbers; every individual attack costs at least 1.
using Cost = std::uint32_t;

/// The attacker's capabilities over the observable alphabet of a plant:
/// which symbols it can delete or insert, which it can substitute for which,
/// and what each action costs.
class AttackModel {
 public:
  using SymbolPair = std::pair<Symbol, Symbol>;

  /// The model with no capabilities at all.
  explicit AttackModel(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  /// Throws ValidationError on non-observable symbols, zero costs or
  /// identity substitutions.
  AttackModel(Alphabet alphabet, std::map<Symbol, Cost> deletions,
              std::map<Symbol, Cost> insertions, std::map<SymbolPair, Cost> substitutions);

  const Alphabet& alphabet() const { return alphabet_; }

  std::optional<Cost> deletion_cost(Symbol s) const;
  std::optional<Cost> insertion_cost(Symbol s) const;
  /// Cost of the attacker replacing `original` by `received`.
  std::optional<Cost> substitution_cost(Symbol original, Symbol received) const;

  const std::map<Symbol, Cost>& deletions() const { return deletions_; }
  const std::map<Symbol, Cost>& insertions() const { return insertions_; }
  const std::map<SymbolPair, Cost>& substitutions() const { return substitutions_; }

  /// Originals σ with (σ, received) substitutable, paired with the cost.
  std::vector<std::pair<Symbol, Cost>> substitutions_into(Symbol received) const;
  /// Replacements σ' with (original, σ') substitutable, paired with the cost.
  std::vector<std::pair<Symbol, Cost>> substitutions_from(Symbol original) const;

  /// Largest single-action cost, 0 for the empty model.
  Cost max_cost() const;
  bool empty() const { return deletions_.empty() && insertions_.empty() && substitutions_.empty(); }

  bool operator==(const AttackModel& other) const = default;

 private:
  Alphabet alphabet_;
  std::map<Symbol, Cost> deletions_;
  std::map<Symbol, Cost> insertions_;
  std::map<SymbolPair, Cost> substitutions_;
};

enum class LabelKind : std::uint8_t { kPlain, kDelete, kInsert, kSubstitute };

/// A letter of a matching sequence: either a plain observation or a
/// hypothesised attack (d_σ, i_σ, t_σσ').
struct AttackLabel {
  LabelKind kind = LabelKind::kPlain;
  /// Plain: the observed symbol. Delete: the deleted symbol. Insert: the
  /// inserted symbol. Substitute: the original symbol.
  Symbol symbol = 0;
  /// Substitute only: the symbol the attacker put in its place.
  Symbol replacement = 0;

  static AttackLabel plain(Symbol s) { return {LabelKind::kPlain, s, s}; }
  static AttackLabel deletion(Symbol s) { return {LabelKind::kDelete, s, s}; }
  static AttackLabel insertion(Symbol s) { return {LabelKind::kInsert, s, s}; }
  static AttackLabel substitution(Symbol original, Symbol received) {
    return {LabelKind::kSubstitute, original, received};
  }

  auto operator<=>(const AttackLabel&) const = default;
};

using LabelSequence = std::vector<AttackLabel>;

/// Throws ValidationError if `label` is not an action `model` permits.
void validate_label(const AttackLabel& label, const AttackModel& model);

Cost label_cost(const AttackLabel& label, const AttackModel& model);
Cost sequence_cost(std::span<const AttackLabel> labels, const AttackModel& model);

/// P̂: the observation the plant actually produced before tampering.
Word attacker_projection(std::span<const AttackLabel> labels, const AttackModel& model);

/// The observation the estimator receives after the attacks in `labels`
/// are applied: d_σ ↦ ε, i_σ ↦ σ, t_σσ' ↦ σ'.
Word received_projection(std::span<const AttackLabel> labels, const AttackModel& model);

std::string format_label(const AttackLabel& label, const Alphabet& alphabet);
std::string format_labels(std::span<const AttackLabel> labels, const Alphabet& alphabet);
/// Inverse of format_labels; accepts "d_{α}", "i_{β}", "t_{α,β}" and plain names.
LabelSequence parse_labels(std::string_view text, const AttackModel& model);

struct TamperedSequence {
  Word word;
  Cost cost = 0;
  bool operator==(const TamperedSequence&) const = default;
};

struct CostedSequence {
  LabelSequence labels;
  Cost cost = 0;
  bool operator==(const CostedSequence&) const = default;
};

/// A_C(ω): every string the attacker can produce from ω with total cost at
/// most `budget`, each with its cheapest cost. Ordered by (cost, length,
/// rendered text). Exponential; intended for small inputs and tests.
std::vector<TamperedSequence> enumerate_tampered(std::span<const Symbol> observed,
                                                 const AttackModel& model, Cost budget);

/// RA_C(ω_A): every matching label sequence for the received ω_A with cost
/// at most `budget`, in the same canonical order. Exponential.
std::vector<CostedSequence> enumerate_matching(std::span<const Symbol> received,
                                               const AttackModel& model, Cost budget);

}  // namespace tamperest
