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

#include "tamperest/estimator.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

#include "tamperest/error.hpp"

namespace tamperest {

namespace {

constexpr Cost kUnreached = std::numeric_limits<Cost>::max();

// R({x}, P̂(label)) for one label.
class PlantMoves {
 public:
  explicit PlantMoves(const PlantNfa& plant) : plant_(plant) {
    const std::size_t n = plant.num_states();
    closure_.resize(n);
    observed_.assign(n * plant.alphabet().size(), {});
    for (StateId x = 0; x < n; ++x) {
      closure_[x] = unobservable_closure(plant, {x});
      for (Symbol e : plant.alphabet().observables()) {
        const Symbol w[] = {e};
        observed_[x * plant.alphabet().size() + e] = reach(plant, {x}, w);
      }
    }
  }

  const StateSet& after(StateId x, const AttackLabel& label) const {
    if (label.kind == LabelKind::kInsert) return closure_[x];
    return observed_[x * plant_.alphabet().size() + label.symbol];
  }

 private:
  const PlantNfa& plant_;
  std::vector<StateSet> closure_;
  std::vector<StateSet> observed_;
};

void check_same_alphabet(const PlantNfa& plant, const AttackModel& model) {
  if (!(plant.alphabet() == model.alphabet())) {
    throw ConfigurationError("attack model and plant use different alphabets");
  }
}

}  // namespace

std::optional<std::size_t> ProductAutomaton::find(const ProductState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ProductAutomaton::num_transitions() const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

std::size_t ProductAutomaton::intern(const ProductState& s) {
  auto [it, inserted] = index_.emplace(s, states_.size());
  if (inserted) {
    states_.push_back(s);
    edges_.emplace_back();
  }
  return it->second;
}

ProductAutomaton build_product(const PlantNfa& plant, const CostedObservationDfa& gsc) {
  check_same_alphabet(plant, gsc.model());
  const PlantMoves moves(plant);
  ProductAutomaton h;
  h.bound_ = gsc.bound();
  h.final_stage_ = gsc.final_stage();

  // Product state index -> G_sc state index.
  std::vector<std::size_t> machine_of;
  auto add = [&](StateId x, std::size_t q) {
    const StageCost& sc = gsc.state(q);
    const std::size_t before = h.num_states();
    const std::size_t i = h.intern({x, sc.stage, sc.cost});
    if (i == before) machine_of.push_back(q);
    return i;
  };

  for (StateId x : unobservable_closure(plant, plant.initial())) {
    h.initial_.push_back(add(x, gsc.initial()));
  }
  for (std::size_t i = 0; i < h.num_states(); ++i) {
    const StateId x = h.states_[i].plant;
    const std::size_t q = machine_of[i];
    for (const auto& e : gsc.edges(q)) {
      for (StateId y : moves.after(x, e.label)) {
        const std::size_t j = add(y, e.to);
        h.edges_[i].push_back({e.label, j});
      }
    }
  }

  const std::size_t limit = plant.num_states() * (h.final_stage_ + 1) * (std::size_t{h.bound_} + 1);
  if (h.num_states() > limit) {
    throw std::logic_error("product exceeds |X|(|ω|+1)(B+1) states");
  }
  return h;
}

ProductAutomaton reduce_product(const ProductAutomaton& h) {
  std::map<std::pair<StateId, std::size_t>, Cost> cheapest;
  for (const auto& s : h.states_) {
    auto [it, inserted] = cheapest.emplace(std::make_pair(s.plant, s.stage), s.cost);
    if (!inserted) it->second = std::min(it->second, s.cost);
  }
  auto kept = [&](std::size_t i) {
    const auto& s = h.states_[i];
    return cheapest.at({s.plant, s.stage}) == s.cost;
  };

  ProductAutomaton rh;
  rh.bound_ = h.bound_;
  rh.final_stage_ = h.final_stage_;
  std::vector<std::size_t> old_of;
  auto add = [&](std::size_t old) {
    const std::size_t before = rh.num_states();
    const std::size_t i = rh.intern(h.states_[old]);
    if (i == before) old_of.push_back(old);
    return i;
  };
  for (std::size_t i : h.initial_) {
    if (kept(i)) rh.initial_.push_back(add(i));
  }
  for (std::size_t i = 0; i < rh.num_states(); ++i) {
    for (const auto& e : h.edges_[old_of[i]]) {
      if (!kept(e.to)) continue;
      const std::size_t j = add(e.to);
      rh.edges_[i].push_back({e.label, j});
    }
  }
  return rh;
}

std::optional<Cost> Estimate::cost_of(StateId x) const {
  for (const auto& e : entries) {
    if (e.state == x) return e.cost;
  }
  return std::nullopt;
}

StateSet Estimate::states() const {
  StateSet out;
  for (const auto& e : entries) out.push_back(e.state);
  return out;
}

Estimate ending_estimates(const ProductAutomaton& rh, std::size_t final_stage, Cost budget) {
  std::map<StateId, Cost> best;
  for (std::size_t i = 0; i < rh.num_states(); ++i) {
    const auto& s = rh.state(i);
    if (s.stage != final_stage) continue;
    auto [it, inserted] = best.emplace(s.plant, s.cost);
    if (!inserted) it->second = std::min(it->second, s.cost);
  }
  Estimate out;
  out.budget = budget;
  for (const auto& [x, c] : best) {
    (c <= budget ? out.entries : out.over_budget).push_back({x, c, std::nullopt});
  }
  return out;
}

Estimate estimate_least_cost(const PlantNfa& plant, const AttackModel& model,
                             std::span<const Symbol> received, Cost budget,
                             const EstimateOptions& options) {
  check_same_alphabet(plant, model);
  const ObservationAutomaton gs = build_gs(received, model);
  const PlantMoves moves(plant);
  const Cost bound = budget + 1;
  const std::size_t n = plant.num_states();
  const std::size_t stages = gs.num_stages();

  struct Parent {
    std::size_t stage;
    StateId state;
    AttackLabel label;
  };
  std::vector<std::vector<Cost>> dist(stages, std::vector<Cost>(n, kUnreached));
  std::vector<std::vector<std::optional<Parent>>> parent(
      options.witness ? stages : 0, std::vector<std::optional<Parent>>(n));

  auto relax = [&](std::size_t stage, StateId y, Cost c, const std::optional<Parent>& from) {
    if (c >= dist[stage][y]) return false;
    dist[stage][y] = c;
    if (options.witness) parent[stage][y] = from;
    return true;
  };

  // Deletion labels loop on a stage; every one costs at least 1, so a
  // Dijkstra pass over the stage settles them.
  auto settle_stage = [&](std::size_t stage) {
    using Item = std::pair<Cost, StateId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (StateId x = 0; x < n; ++x) {
      if (dist[stage][x] != kUnreached) queue.emplace(dist[stage][x], x);
    }
    while (!queue.empty()) {
      const auto [c, x] = queue.top();
      queue.pop();
      if (c != dist[stage][x]) continue;
      for (const auto& e : gs.edges(stage)) {
        if (e.label.kind != LabelKind::kDelete) continue;
        const Cost next = std::min<Cost>(c + label_cost(e.label, model), bound);
        for (StateId y : moves.after(x, e.label)) {
          if (relax(stage, y, next, Parent{stage, x, e.label})) queue.emplace(next, y);
        }
      }
    }
  };

  for (StateId x : unobservable_closure(plant, plant.initial())) {
    relax(0, x, 0, std::nullopt);
  }
  settle_stage(0);
  for (std::size_t stage = 0; stage + 1 < stages; ++stage) {
    for (StateId x = 0; x < n; ++x) {
      const Cost c = dist[stage][x];
      if (c == kUnreached) continue;
      for (const auto& e : gs.edges(stage)) {
        if (e.label.kind == LabelKind::kDelete) continue;
        const Cost next = std::min<Cost>(c + label_cost(e.label, model), bound);
        for (StateId y : moves.after(x, e.label)) relax(stage + 1, y, next, Parent{stage, x, e.label});
      }
    }
    settle_stage(stage + 1);
  }

  Estimate out;
  out.received.assign(received.begin(), received.end());
  out.budget = budget;
  const std::size_t last = stages - 1;
  for (StateId x = 0; x < n; ++x) {
    const Cost c = dist[last][x];
    if (c == kUnreached) continue;
    EstimateEntry entry{x, c, std::nullopt};
    if (options.witness) {
      LabelSequence labels;
      std::size_t stage = last;
      StateId at = x;
      while (const auto& p = parent[stage][at]) {
        labels.push_back(p->label);
        stage = p->stage;
        at = p->state;
      }
      std::reverse(labels.begin(), labels.end());
      entry.witness = std::move(labels);
    }
    (c <= budget ? out.entries : out.over_budget).push_back(std::move(entry));
  }
  return out;
}

}  // namespace tamperest
