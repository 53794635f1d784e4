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

#include "tamperest/cmin.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "tamperest/error.hpp"
#include "tamperest/graph.hpp"

namespace tamperest {

namespace {

struct Option {
  Cost cost;
  StateId to;
};

// Every (c, y) with y ∈ δ_cn(x, (event, c)).
std::vector<Option> options(const CorruptedAutomaton& gc, StateId x, Symbol event) {
  std::vector<Option> out;
  if (event == kEpsilonEvent) out.push_back({0, x});
  for (const auto& e : gc.edges(x)) {
    if (e.event == event) out.push_back({e.cost, e.to});
  }
  return out;
}

}  // namespace

StateSet CorruptedAutomaton::successors(StateId x, Symbol event, Cost cost) const {
  StateSet out;
  if (event == kEpsilonEvent && cost == 0) out.push_back(x);
  for (const auto& e : edges(x)) {
    if (e.event == event && e.cost == cost) out.push_back(e.to);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string CorruptedAutomaton::format_event(Symbol event) const {
  return event == kEpsilonEvent ? std::string(kEpsilon) : plant_.alphabet().name(event);
}

CorruptedAutomaton build_corrupted(const PlantNfa& plant, const AttackModel& model) {
  if (!(plant.alphabet() == model.alphabet())) {
    throw ConfigurationError("attack model and plant use different alphabets");
  }
  CorruptedAutomaton gc(plant);
  gc.edges_.resize(plant.num_states());
  for (StateId x = 0; x < plant.num_states(); ++x) {
    auto& out = gc.edges_[x];
    for (const auto& e : plant.edges(x)) out.push_back({e.event, 0, e.to});
    for (const auto& [deleted, cost] : model.deletions()) {
      for (StateId y : plant.successors(x, deleted)) out.push_back({kEpsilonEvent, cost, y});
    }
    for (const auto& [inserted, cost] : model.insertions()) out.push_back({inserted, cost, x});
    for (const auto& [pair, cost] : model.substitutions()) {
      for (StateId y : plant.successors(x, pair.first)) out.push_back({pair.second, cost, y});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return gc;
}

std::optional<std::size_t> ModifiedVerifier::find(const VerifierState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ModifiedVerifier::num_transitions() const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

std::string ModifiedVerifier::format_state(std::size_t i) const {
  const auto& s = states_.at(i);
  const PlantNfa& plant = corrupted_.plant();
  auto tag = [](Tag t) { return t == Tag::kFault ? "F" : "N"; };
  return "(" + plant.state_name(s.left) + "," + tag(s.left_tag) + "," + plant.state_name(s.right) +
         "," + tag(s.right_tag) + ")";
}

std::string ModifiedVerifier::format_label(const PairedLabel& label) const {
  const std::string e = corrupted_.format_event(label.event);
  return "((" + e + "," + std::to_string(label.left) + "),(" + e + "," +
         std::to_string(label.right) + "))";
}

ModifiedVerifier build_modified_verifier(const CorruptedAutomaton& gc, std::span<const Symbol> faults) {
  const PlantNfa& plant = gc.plant();
  std::vector<bool> is_fault(plant.alphabet().size(), false);
  for (Symbol f : faults) {
    if (!plant.alphabet().contains(f)) throw ValidationError("unknown fault event");
    if (plant.is_observable(f)) {
      throw ValidationError("fault event '" + plant.alphabet().name(f) + "' is observable");
    }
    is_fault[f] = true;
  }

  ModifiedVerifier v(gc);
  auto intern = [&v](const VerifierState& s) {
    auto [it, inserted] = v.index_.emplace(s, v.states_.size());
    if (inserted) {
      v.states_.push_back(s);
      v.edges_.emplace_back();
    }
    return it->second;
  };
  for (StateId x : plant.initial()) {
    for (StateId y : plant.initial()) v.initial_.push_back(intern({x, Tag::kNormal, y, Tag::kNormal}));
  }

  std::vector<Symbol> reported = plant.alphabet().observables();
  reported.push_back(kEpsilonEvent);
  const auto unobservables = plant.alphabet().unobservables();

  for (std::size_t i = 0; i < v.states_.size(); ++i) {
    const VerifierState s = v.states_[i];
    std::vector<PairedEdge> out;
    for (Symbol e : reported) {
      const auto left = options(gc, s.left, e);
      const auto right = options(gc, s.right, e);
      for (const auto& a : left) {
        for (const auto& b : right) {
          if (e == kEpsilonEvent && a.cost == 0 && b.cost == 0) continue;
          out.push_back({{e, a.cost, b.cost}, Move::kBoth, intern({a.to, s.left_tag, b.to, s.right_tag})});
        }
      }
    }
    for (Symbol e : unobservables) {
      const auto left = plant.successors(s.left, e);
      const auto right = plant.successors(s.right, e);
      const Tag lt = is_fault[e] ? Tag::kFault : s.left_tag;
      const Tag rt = is_fault[e] ? Tag::kFault : s.right_tag;
      const PairedLabel label{e, 0, 0};
      for (StateId a : left) out.push_back({label, Move::kLeft, intern({a, lt, s.right, s.right_tag})});
      for (StateId b : right) out.push_back({label, Move::kRight, intern({s.left, s.left_tag, b, rt})});
      for (StateId a : left) {
        for (StateId b : right) out.push_back({label, Move::kBoth, intern({a, lt, b, rt})});
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    v.edges_[i] = std::move(out);
  }
  return v;
}

EndingStates find_ending_states(const ModifiedVerifier& v) {
  graph::Adjacency adj(v.num_states());
  for (std::size_t i = 0; i < v.num_states(); ++i) {
    if (!v.state(i).mismatched()) continue;
    for (const auto& e : v.edges(i)) {
      if (e.label.free() && v.state(e.to).mismatched()) adj[i].push_back(e.to);
    }
  }
  const auto sccs = graph::strongly_connected_components(adj);
  const auto cyclic = graph::on_cycle(adj);

  EndingStates out;
  std::vector<bool> covered(sccs.count, false);
  for (std::size_t i = 0; i < v.num_states(); ++i) {
    if (!cyclic[i]) continue;
    out.states.push_back(i);
    if (covered[sccs.component_of[i]]) continue;
    covered[sccs.component_of[i]] = true;
    ModifiedCycle cycle;
    cycle.states = graph::cycle_through(adj, i);
    for (std::size_t k = 0; k + 1 < cycle.states.size(); ++k) {
      for (const auto& e : v.edges(cycle.states[k])) {
        if (e.label.free() && e.to == cycle.states[k + 1]) {
          cycle.edges.push_back(e);
          break;
        }
      }
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

bool ParetoSet::update(const CostPair& candidate) {
  for (const auto& p : pairs_) {
    if (p == candidate || p.dominates(candidate)) return false;
  }
  std::erase_if(pairs_, [&](const CostPair& p) { return candidate.dominates(p); });
  pairs_.insert(std::lower_bound(pairs_.begin(), pairs_.end(), candidate), candidate);
  return true;
}

bool ParetoSet::contains(const CostPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

ParetoUpdate pareto_update(ParetoSet labels, const CostPair& candidate) {
  ParetoUpdate out;
  out.changed = labels.update(candidate);
  out.labels = std::move(labels);
  return out;
}

CminResult compute_cmin(const ModifiedVerifier& v, Cost max_single_cost) {
  CminResult result;
  result.ending = find_ending_states(v);
  result.labels.resize(v.num_states());
  const std::size_t n = v.corrupted().plant().num_states();
  const std::size_t vs = 4 * n * n;
  result.stats.work_bound = vs * (vs * max_single_cost + 1);

  struct Record {
    std::size_t state;
    CostPair cost;
    std::size_t parent;
    PairedEdge via;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Record> records;
  std::map<std::pair<std::size_t, CostPair>, std::size_t> current;
  std::deque<std::size_t> work;

  auto offer = [&](std::size_t state, CostPair cost, std::size_t parent, PairedEdge via) {
    if (!result.labels[state].update(cost)) return;
    ++result.stats.label_insertions;
    current[{state, cost}] = records.size();
    records.push_back({state, cost, parent, via});
    work.push_back(records.size() - 1);
  };
  for (std::size_t i : v.initial()) offer(i, {0, 0}, kNone, {});

  while (!work.empty()) {
    const std::size_t r = work.front();
    work.pop_front();
    const Record rec = records[r];
    // Skip labels that were dominated after being queued.
    auto it = current.find({rec.state, rec.cost});
    if (it == current.end() || it->second != r || !result.labels[rec.state].contains(rec.cost)) continue;
    ++result.stats.labels_processed;
    for (const auto& e : v.edges(rec.state)) {
      offer(e.to, {rec.cost.left + e.label.left, rec.cost.right + e.label.right}, r, e);
    }
  }

  std::size_t best = kNone;
  for (std::size_t s : result.ending.states) {
    for (const auto& p : result.labels[s].pairs()) {
      if (best == kNone || p.total() < records[best].cost.total()) best = current.at({s, p});
    }
  }
  if (best == kNone) return result;
  result.cmin = records[best].cost.total();
  for (std::size_t r = best; r != kNone; r = records[r].parent) {
    result.witness_states.push_back(records[r].state);
    if (records[r].parent != kNone) result.witness_edges.push_back(records[r].via);
  }
  std::reverse(result.witness_states.begin(), result.witness_states.end());
  std::reverse(result.witness_edges.begin(), result.witness_edges.end());
  return result;
}

CminResult compute_cmin(const PlantNfa& plant, const AttackModel& model, std::span<const Symbol> faults) {
  const CorruptedAutomaton gc = build_corrupted(plant, model);
  const ModifiedVerifier v = build_modified_verifier(gc, faults);
  return compute_cmin(v, model.max_cost());
}

}  // namespace tamperest
