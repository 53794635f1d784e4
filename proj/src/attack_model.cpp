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

#include "tamperest/attack_model.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "tamperest/error.hpp"

namespace tamperest {

namespace {

void check_observable(const Alphabet& alphabet, Symbol s, const char* what) {
  if (!alphabet.contains(s)) throw ValidationError(std::string(what) + ": unknown symbol");
  if (!alphabet.observable(s)) {
    throw ValidationError(std::string(what) + ": '" + alphabet.name(s) + "' is not observable");
  }
}

void check_cost(Cost c, const std::string& what) {
  if (c == 0) throw ValidationError(what + ": attack costs must be strictly positive");
}

// Canonical order: cost, then length, then rendered text.
template <typename T>
void canonical_sort(std::vector<T>& items, const std::function<std::string(const T&)>& render,
                    const std::function<std::size_t(const T&)>& length) {
  std::vector<std::tuple<Cost, std::size_t, std::string, std::size_t>> keys;
  keys.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    keys.emplace_back(items[i].cost, length(items[i]), render(items[i]), i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<T> sorted;
  sorted.reserve(items.size());
  for (const auto& k : keys) sorted.push_back(std::move(items[std::get<3>(k)]));
  items = std::move(sorted);
}

}  // namespace

AttackModel::AttackModel(Alphabet alphabet, std::map<Symbol, Cost> deletions,
                         std::map<Symbol, Cost> insertions,
                         std::map<SymbolPair, Cost> substitutions)
    : alphabet_(std::move(alphabet)),
      deletions_(std::move(deletions)),
      insertions_(std::move(insertions)),
      substitutions_(std::move(substitutions)) {
  for (const auto& [s, c] : deletions_) {
    check_observable(alphabet_, s, "deletion");
    check_cost(c, "deletion of '" + alphabet_.name(s) + "'");
  }
  for (const auto& [s, c] : insertions_) {
    check_observable(alphabet_, s, "insertion");
    check_cost(c, "insertion of '" + alphabet_.name(s) + "'");
  }
  for (const auto& [pair, c] : substitutions_) {
    check_observable(alphabet_, pair.first, "substitution");
    check_observable(alphabet_, pair.second, "substitution");
    if (pair.first == pair.second) {
      throw ValidationError("identity substitution of '" + alphabet_.name(pair.first) + "'");
    }
    check_cost(c, "substitution of '" + alphabet_.name(pair.first) + "'");
  }
}

std::optional<Cost> AttackModel::deletion_cost(Symbol s) const {
  auto it = deletions_.find(s);
  if (it == deletions_.end()) return std::nullopt;
  return it->second;
}

std::optional<Cost> AttackModel::insertion_cost(Symbol s) const {
  auto it = insertions_.find(s);
  if (it == insertions_.end()) return std::nullopt;
  return it->second;
}

std::optional<Cost> AttackModel::substitution_cost(Symbol original, Symbol received) const {
  auto it = substitutions_.find({original, received});
  if (it == substitutions_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Symbol, Cost>> AttackModel::substitutions_into(Symbol received) const {
  std::vector<std::pair<Symbol, Cost>> out;
  for (const auto& [pair, c] : substitutions_) {
    if (pair.second == received) out.emplace_back(pair.first, c);
  }
  return out;
}

std::vector<std::pair<Symbol, Cost>> AttackModel::substitutions_from(Symbol original) const {
  std::vector<std::pair<Symbol, Cost>> out;
  for (const auto& [pair, c] : substitutions_) {
    if (pair.first == original) out.emplace_back(pair.second, c);
  }
  return out;
}

Cost AttackModel::max_cost() const {
  Cost m = 0;
  for (const auto& [s, c] : deletions_) m = std::max(m, c);
  for (const auto& [s, c] : insertions_) m = std::max(m, c);
  for (const auto& [p, c] : substitutions_) m = std::max(m, c);
  return m;
}

void validate_label(const AttackLabel& label, const AttackModel& model) {
  (void)label_cost(label, model);
}

Cost label_cost(const AttackLabel& label, const AttackModel& model) {
  const Alphabet& alphabet = model.alphabet();
  auto reject = [&]() -> Cost {
    throw ValidationError("label '" + format_label(label, alphabet) +
                          "' is not permitted by the attack model");
  };
  if (!alphabet.contains(label.symbol) || !alphabet.observable(label.symbol)) {
    throw ValidationError("attack label over a non-observable symbol");
  }
  switch (label.kind) {
    case LabelKind::kPlain:
      return 0;
    case LabelKind::kDelete:
      if (auto c = model.deletion_cost(label.symbol)) return *c;
      return reject();
    case LabelKind::kInsert:
      if (auto c = model.insertion_cost(label.symbol)) return *c;
      return reject();
    case LabelKind::kSubstitute:
      if (auto c = model.substitution_cost(label.symbol, label.replacement)) return *c;
      return reject();
  }
  return reject();
}

Cost sequence_cost(std::span<const AttackLabel> labels, const AttackModel& model) {
  Cost total = 0;
  for (const auto& l : labels) total += label_cost(l, model);
  return total;
}

Word attacker_projection(std::span<const AttackLabel> labels, const AttackModel& model) {
  Word out;
  for (const auto& l : labels) {
    validate_label(l, model);
    if (l.kind != LabelKind::kInsert) out.push_back(l.symbol);
  }
  return out;
}

Word received_projection(std::span<const AttackLabel> labels, const AttackModel& model) {
  Word out;
  for (const auto& l : labels) {
    validate_label(l, model);
    switch (l.kind) {
      case LabelKind::kPlain:
      case LabelKind::kInsert:
        out.push_back(l.symbol);
        break;
      case LabelKind::kSubstitute:
        out.push_back(l.replacement);
        break;
      case LabelKind::kDelete:
        break;
    }
  }
  return out;
}

std::string format_label(const AttackLabel& label, const Alphabet& alphabet) {
  switch (label.kind) {
    case LabelKind::kPlain:
      return alphabet.name(label.symbol);
    case LabelKind::kDelete:
      return "d_{" + alphabet.name(label.symbol) + "}";
    case LabelKind::kInsert:
      return "i_{" + alphabet.name(label.symbol) + "}";
    case LabelKind::kSubstitute:
      return "t_{" + alphabet.name(label.symbol) + "," + alphabet.name(label.replacement) + "}";
  }
  return "?";
}

std::string format_labels(std::span<const AttackLabel> labels, const Alphabet& alphabet) {
  if (labels.empty()) return std::string(kEpsilon);
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i != 0) out += ' ';
    out += format_label(labels[i], alphabet);
  }
  return out;
}

LabelSequence parse_labels(std::string_view text, const AttackModel& model) {
  const Alphabet& alphabet = model.alphabet();
  LabelSequence out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == kEpsilon) continue;
    AttackLabel label;
    const bool braced = token.size() > 4 && token[1] == '_' && token[2] == '{' && token.back() == '}';
    if (braced && (token[0] == 'd' || token[0] == 'i' || token[0] == 't')) {
      const std::string body = token.substr(3, token.size() - 4);
      if (token[0] == 't') {
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw ValidationError("malformed label '" + token + "'");
        label = AttackLabel::substitution(alphabet.at(body.substr(0, comma)),
                                          alphabet.at(body.substr(comma + 1)));
      } else if (token[0] == 'd') {
        label = AttackLabel::deletion(alphabet.at(body));
      } else {
        label = AttackLabel::insertion(alphabet.at(body));
      }
    } else {
      label = AttackLabel::plain(alphabet.at(token));
    }
    validate_label(label, model);
    out.push_back(label);
  }
  return out;
}

std::vector<TamperedSequence> enumerate_tampered(std::span<const Symbol> observed,
                                                 const AttackModel& model, Cost budget) {
  for (Symbol s : observed) check_observable(model.alphabet(), s, "tampered enumeration");
  std::map<Word, Cost> best;
  Word current;

  // Insertions are tried in the gap before `pos`, then symbol `pos` is kept,
  // deleted or substituted.
  std::function<void(std::size_t, Cost)> visit = [&](std::size_t pos, Cost spent) {
    for (const auto& [s, c] : model.insertions()) {
      if (spent + c > budget) continue;
      current.push_back(s);
      visit(pos, spent + c);
      current.pop_back();
    }
    if (pos == observed.size()) {
      auto [it, inserted] = best.emplace(current, spent);
      if (!inserted) it->second = std::min(it->second, spent);
      return;
    }
    const Symbol s = observed[pos];
    current.push_back(s);
    visit(pos + 1, spent);
    current.pop_back();
    if (auto c = model.deletion_cost(s); c && spent + *c <= budget) visit(pos + 1, spent + *c);
    for (const auto& [to, c] : model.substitutions_from(s)) {
      if (spent + c > budget) continue;
      current.push_back(to);
      visit(pos + 1, spent + c);
      current.pop_back();
    }
  };
  // Different attack combinations can yield the same string; `best` keeps
  // the cheapest.
  visit(0, 0);

  std::vector<TamperedSequence> out;
  out.reserve(best.size());
  for (auto& [w, c] : best) out.push_back({w, c});
  canonical_sort<TamperedSequence>(
      out, [&](const TamperedSequence& t) { return format_word(model.alphabet(), t.word); },
      [](const TamperedSequence& t) { return t.word.size(); });
  return out;
}

std::vector<CostedSequence> enumerate_matching(std::span<const Symbol> received,
                                               const AttackModel& model, Cost budget) {
  for (Symbol s : received) check_observable(model.alphabet(), s, "matching enumeration");
  std::set<LabelSequence> seen;
  std::vector<CostedSequence> out;
  LabelSequence current;

  std::function<void(std::size_t, Cost)> visit = [&](std::size_t pos, Cost spent) {
    for (const auto& [s, c] : model.deletions()) {
      if (spent + c > budget) continue;
      current.push_back(AttackLabel::deletion(s));
      visit(pos, spent + c);
      current.pop_back();
    }
    if (pos == received.size()) {
      if (seen.insert(current).second) out.push_back({current, spent});
      return;
    }
    const Symbol s = received[pos];
    current.push_back(AttackLabel::plain(s));
    visit(pos + 1, spent);
    current.pop_back();
    if (auto c = model.insertion_cost(s); c && spent + *c <= budget) {
      current.push_back(AttackLabel::insertion(s));
      visit(pos + 1, spent + *c);
      current.pop_back();
    }
    for (const auto& [from, c] : model.substitutions_into(s)) {
      if (spent + c > budget) continue;
      current.push_back(AttackLabel::substitution(from, s));
      visit(pos + 1, spent + c);
      current.pop_back();
    }
  };
  visit(0, 0);

  canonical_sort<CostedSequence>(
      out, [&](const CostedSequence& c) { return format_labels(c.labels, model.alphabet()); },
      [](const CostedSequence& c) { return c.labels.size(); });
  return out;
}

}  // namespace tamperest
