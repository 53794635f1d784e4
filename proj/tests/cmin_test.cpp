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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "random_instances.hpp"

namespace tamperest {
namespace {

using testing::PersistentFixture;
using testing::TransientFixture;

std::set<std::string> ending_names(const ModifiedVerifier& v, const EndingStates& e) {
  std::set<std::string> out;
  for (std::size_t s : e.states) out.insert(v.format_state(s));
  return out;
}

TEST(Corrupted, PersistentFixtureEdges) {
  PersistentFixture f;
  const CorruptedAutomaton gc = build_corrupted(f.plant, f.model);
  const Symbol gamma = f.plant.alphabet().at("γ");
  EXPECT_EQ(gc.successors(1, gamma, 1), StateSet{2});
  EXPECT_EQ(gc.successors(0, gamma, 0), StateSet{4});
  EXPECT_EQ(gc.successors(3, kEpsilonEvent, 0), StateSet{3});
  EXPECT_TRUE(gc.successors(0, gamma, 1).empty());
}

TEST(Corrupted, EmptyModelKeepsOnlyPlantEdges) {
  PersistentFixture f;
  const CorruptedAutomaton gc = build_corrupted(f.plant, AttackModel(f.plant.alphabet()));
  std::size_t n = 0;
  for (StateId x = 0; x < f.plant.num_states(); ++x) {
    for (const auto& e : gc.edges(x)) {
      EXPECT_EQ(e.cost, 0u);
      EXPECT_NE(e.event, kEpsilonEvent);
      ++n;
    }
  }
  EXPECT_EQ(n, f.plant.num_transitions());
}

TEST(Corrupted, DeletionsAndInsertions) {
  testing::EstimationFixture f;
  const CorruptedAutomaton gc = build_corrupted(f.plant, f.model);
  const Symbol beta = f.plant.alphabet().at("β");
  EXPECT_EQ(gc.successors(1, kEpsilonEvent, 3), (StateSet{2, 3}));
  EXPECT_EQ(gc.successors(0, beta, 2), StateSet{0});
}

TEST(ModifiedVerifierTest, FaultAndSubstitutionMoves) {
  PersistentFixture f;
  const ModifiedVerifier v = build_modified_verifier(build_corrupted(f.plant, f.model), f.plant.faults());
  const auto init = v.find({0, Tag::kNormal, 0, Tag::kNormal});
  ASSERT_TRUE(init);
  const Symbol fault = f.plant.alphabet().at("σf");
  std::set<std::string> after_fault;
  for (const auto& e : v.edges(*init)) {
    if (e.label == PairedLabel{fault, 0, 0}) after_fault.insert(v.format_state(e.to));
  }
  EXPECT_EQ(after_fault, (std::set<std::string>{"(1,F,0,N)", "(0,N,1,F)", "(1,F,1,F)"}));

  const auto from = v.find({1, Tag::kFault, 0, Tag::kNormal});
  ASSERT_TRUE(from);
  const Symbol gamma = f.plant.alphabet().at("γ");
  std::set<std::string> targets;
  for (const auto& e : v.edges(*from)) {
    if (e.label == PairedLabel{gamma, 1, 0}) targets.insert(v.format_state(e.to));
  }
  EXPECT_EQ(targets, std::set<std::string>{"(2,F,4,N)"});
}

TEST(ModifiedVerifierTest, NoPureEpsilonPairs) {
  testing::EstimationFixture f;
  const ModifiedVerifier v = build_modified_verifier(build_corrupted(f.plant, f.model), {});
  for (std::size_t i = 0; i < v.num_states(); ++i) {
    for (const auto& e : v.edges(i)) EXPECT_FALSE(e.label.event == kEpsilonEvent && e.label.free());
  }
}

TEST(ModifiedVerifierTest, SizeBounds) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const PlantNfa p = testing::random_plant(rng, {.max_states = 5, .fault = true, .diagnosable_shape = true});
    const AttackModel m = testing::random_attack_model(rng, p.alphabet(), 3);
    const ModifiedVerifier v = build_modified_verifier(build_corrupted(p, m), p.faults());
    EXPECT_LE(v.num_states(), 4 * p.num_states() * p.num_states());
    const std::size_t c = m.max_cost();
    const std::size_t per_state =
        (c + 1) * (c + 1) * (p.alphabet().observables().size() + 1) + 3 * p.alphabet().unobservables().size();
    for (std::size_t i = 0; i < v.num_states(); ++i) {
      std::set<std::pair<PairedLabel, Move>> kinds;
      for (const auto& e : v.edges(i)) kinds.insert({e.label, e.move});
      EXPECT_LE(kinds.size(), per_state);
    }
  }
}

TEST(EndingStates, PersistentFixture) {
  PersistentFixture f;
  const ModifiedVerifier v = build_modified_verifier(build_corrupted(f.plant, f.model), f.plant.faults());
  const EndingStates e = find_ending_states(v);
  EXPECT_EQ(ending_names(v, e), (std::set<std::string>{"(3,F,5,N)", "(5,N,3,F)"}));
  for (const auto& cycle : e.cycles) {
    ASSERT_EQ(cycle.states.front(), cycle.states.back());
    ASSERT_EQ(cycle.edges.size() + 1, cycle.states.size());
    for (const auto& edge : cycle.edges) EXPECT_TRUE(edge.label.free());
  }
}

TEST(EndingStates, TransientFixtureHasNone) {
  TransientFixture f;
  const ModifiedVerifier v = build_modified_verifier(build_corrupted(f.plant, f.model), f.plant.faults());
  EXPECT_TRUE(find_ending_states(v).states.empty());
}

TEST(EndingStates, NoFaultsNoEndings) {
  PersistentFixture f;
  const ModifiedVerifier v = build_modified_verifier(build_corrupted(f.plant, f.model), {});
  EXPECT_TRUE(find_ending_states(v).states.empty());
}

TEST(Pareto, UpdateExamples) {
  ParetoSet s;
  EXPECT_TRUE(s.update({2, 0}));
  auto r = pareto_update(s, {0, 2});
  EXPECT_TRUE(r.changed);
  EXPECT_EQ(std::vector<CostPair>(r.labels.pairs().begin(), r.labels.pairs().end()),
            (std::vector<CostPair>{{0, 2}, {2, 0}}));

  ParetoSet t;
  t.update({2, 3});
  r = pareto_update(t, {2, 1});
  EXPECT_TRUE(r.changed);
  EXPECT_EQ(std::vector<CostPair>(r.labels.pairs().begin(), r.labels.pairs().end()),
            (std::vector<CostPair>{{2, 1}}));

  ParetoSet u;
  u.update({1, 1});
  r = pareto_update(u, {1, 1});
  EXPECT_FALSE(r.changed);
  EXPECT_EQ(r.labels.size(), 1u);
  r = pareto_update(u, {1, 2});
  EXPECT_FALSE(r.changed);
}

TEST(Pareto, RandomSequencesStayAntichains) {
  std::mt19937 rng(52);
  std::uniform_int_distribution<Cost> value(0, 8);
  for (int trial = 0; trial < 500; ++trial) {
    ParetoSet s;
    std::vector<CostPair> offered;
    for (int k = 0; k < 30; ++k) {
      const CostPair p{value(rng), value(rng)};
      offered.push_back(p);
      s.update(p);
      for (const auto& a : s.pairs()) {
        for (const auto& b : s.pairs()) EXPECT_FALSE(a.dominates(b));
      }
    }
    // The set is exactly the minimal elements of everything offered.
    std::set<CostPair> minimal;
    for (const auto& p : offered) {
      if (std::none_of(offered.begin(), offered.end(), [&](const CostPair& q) { return q.dominates(p); })) {
        minimal.insert(p);
      }
    }
    EXPECT_EQ(std::set<CostPair>(s.pairs().begin(), s.pairs().end()), minimal);
  }
}

TEST(Cmin, PersistentFixtureIsTwo) {
  PersistentFixture f;
  const CminResult r = compute_cmin(f.plant, f.model, f.plant.faults());
  ASSERT_TRUE(r.cmin);
  EXPECT_EQ(*r.cmin, 2u);
  EXPECT_LE(r.stats.labels_processed, r.stats.work_bound);
  // The witness path ends in X_e and costs what it claims.
  ASSERT_FALSE(r.witness_states.empty());
  EXPECT_TRUE(std::binary_search(r.ending.states.begin(), r.ending.states.end(), r.witness_states.back()));
  CostPair total;
  for (const auto& e : r.witness_edges) {
    total.left += e.label.left;
    total.right += e.label.right;
  }
  EXPECT_EQ(total.total(), 2u);
  // Both (2,0) and (0,2) reach the ending states.
  const ModifiedVerifier v = build_modified_verifier(build_corrupted(f.plant, f.model), f.plant.faults());
  const auto fn = v.find({3, Tag::kFault, 5, Tag::kNormal});
  const auto nf = v.find({5, Tag::kNormal, 3, Tag::kFault});
  ASSERT_TRUE(fn && nf);
  EXPECT_TRUE(r.labels[*fn].contains({2, 0}));
  EXPECT_TRUE(r.labels[*nf].contains({0, 2}));
}

TEST(Cmin, TransientFixtureHasNone) {
  TransientFixture f;
  EXPECT_FALSE(compute_cmin(f.plant, f.model, f.plant.faults()).cmin);
}

TEST(Cmin, ConfusableToyNeedsNoAttack) {
  const PlantNfa p = testing::load_plant("confusable_toy.json");
  const CminResult r = compute_cmin(p, AttackModel(p.alphabet()), p.faults());
  ASSERT_TRUE(r.cmin);
  EXPECT_EQ(*r.cmin, 0u);
}

TEST(Cmin, ValueIffEndingStates) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const PlantNfa p = testing::random_plant(rng, {.max_states = 5, .fault = true, .diagnosable_shape = true});
    const AttackModel m = testing::random_attack_model(rng, p.alphabet(), 3);
    const CminResult r = compute_cmin(p, m, p.faults());
    EXPECT_EQ(r.cmin.has_value(), !r.ending.states.empty());
    EXPECT_LE(r.stats.labels_processed, r.stats.work_bound);
  }
}

TEST(Cmin, LabelsMatchPathEnumeration) {
  std::mt19937 rng(54);
  int compared = 0;
  for (int trial = 0; compared < 40 && trial < 400; ++trial) {
    const PlantNfa p = testing::random_plant(
        rng, {.max_states = 3, .observables = 2, .silent = 0, .fault = true, .density = 0.2,
              .diagnosable_shape = true});
    const AttackModel m = testing::random_attack_model(rng, p.alphabet(), 3, 0.2);
    std::map<std::tuple<StateId, bool, StateId, bool>, std::set<std::pair<Cost, Cost>>> expected;
    try {
      expected = oracle::oracle_pareto_labels(p, m, p.faults(), {.max_paths = 2'000'000});
    } catch (const oracle::Refusal&) {
      continue;
    }
    ++compared;
    const ModifiedVerifier v = build_modified_verifier(build_corrupted(p, m), p.faults());
    const CminResult r = compute_cmin(v, m.max_cost());
    ASSERT_EQ(expected.size(), v.num_states());
    for (std::size_t i = 0; i < v.num_states(); ++i) {
      const auto& s = v.state(i);
      std::set<std::pair<Cost, Cost>> got;
      for (const auto& c : r.labels[i].pairs()) got.insert({c.left, c.right});
      EXPECT_EQ(got, expected.at({s.left, s.left_tag == Tag::kFault, s.right, s.right_tag == Tag::kFault}));
    }
  }
  EXPECT_GE(compared, 40);
}

}  // namespace
}  // namespace tamperest
