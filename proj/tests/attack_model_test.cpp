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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "random_instances.hpp"
#include "tamperest/error.hpp"

namespace tamperest {
namespace {

using testing::EstimationFixture;

std::vector<std::string> render(const std::vector<TamperedSequence>& seqs, const Alphabet& a) {
  std::vector<std::string> out;
  for (const auto& s : seqs) out.push_back("(" + format_word(a, s.word) + "," + std::to_string(s.cost) + ")");
  return out;
}

std::vector<std::string> render(const std::vector<CostedSequence>& seqs, const Alphabet& a) {
  std::vector<std::string> out;
  for (const auto& s : seqs) out.push_back("(" + format_labels(s.labels, a) + "," + std::to_string(s.cost) + ")");
  return out;
}

TEST(AttackModel, Validation) {
  EstimationFixture f;
  const Alphabet& a = f.plant.alphabet();
  const Symbol alpha = a.at("α"), zeta = a.at("ζ");
  EXPECT_THROW(AttackModel(a, {{alpha, 0}}, {}, {}), ValidationError);
  EXPECT_THROW(AttackModel(a, {{zeta, 1}}, {}, {}), ValidationError);
  EXPECT_THROW(AttackModel(a, {}, {}, {{{alpha, alpha}, 1}}), ValidationError);
}

TEST(AttackModel, LabelCosts) {
  EstimationFixture f;
  const Alphabet& a = f.plant.alphabet();
  const Symbol alpha = a.at("α"), beta = a.at("β"), gamma = a.at("γ");
  EXPECT_EQ(label_cost(AttackLabel::substitution(alpha, beta), f.model), 2u);
  EXPECT_EQ(label_cost(AttackLabel::deletion(alpha), f.model), 3u);
  EXPECT_EQ(label_cost(AttackLabel::plain(beta), f.model), 0u);
  EXPECT_THROW(label_cost(AttackLabel::insertion(gamma), f.model), ValidationError);
  EXPECT_THROW(label_cost(AttackLabel::deletion(beta), f.model), ValidationError);
  EXPECT_EQ(f.model.max_cost(), 3u);
}

TEST(AttackModel, SequenceCost) {
  EstimationFixture f;
  EXPECT_EQ(sequence_cost(parse_labels("β t_{γ,α} t_{γ,α}", f.model), f.model), 2u);
  EXPECT_EQ(sequence_cost(LabelSequence{}, f.model), 0u);
  EXPECT_EQ(sequence_cost(parse_labels("i_{β} α α", f.model), f.model), 2u);
}

TEST(AttackModel, Projections) {
  EstimationFixture f;
  const Alphabet& a = f.plant.alphabet();
  EXPECT_EQ(format_word(a, attacker_projection(parse_labels("β t_{γ,α} α", f.model), f.model)), "β γ α");
  EXPECT_EQ(format_word(a, attacker_projection(parse_labels("i_{β} α α", f.model), f.model)), "α α");
  EXPECT_EQ(format_word(a, attacker_projection(parse_labels("β α", f.model), f.model)), "β α");
  EXPECT_EQ(format_word(a, received_projection(parse_labels("d_{α} t_{α,β} i_{β} γ", f.model), f.model)),
            "β β γ");
}

TEST(AttackModel, LabelTextRoundTrip) {
  EstimationFixture f;
  const std::string text = "d_{α} t_{α,β} i_{β} γ";
  EXPECT_EQ(format_labels(parse_labels(text, f.model), f.plant.alphabet()), text);
  EXPECT_THROW(parse_labels("i_{γ}", f.model), ValidationError);
  EXPECT_THROW(parse_labels("t_{α,γ}", f.model), ValidationError);
}

TEST(EnumerateTampered, CostBoundTwo) {
  EstimationFixture f;
  const auto got = render(enumerate_tampered(f.word("α α α"), f.model, 2), f.plant.alphabet());
  EXPECT_EQ(got, (std::vector<std::string>{"(α α α,0)", "(α α β,2)", "(α β α,2)", "(β α α,2)",
                                           "(α α α β,2)", "(α α β α,2)", "(α β α α,2)", "(β α α α,2)"}));
}

TEST(EnumerateTampered, SingleSymbol) {
  EstimationFixture f;
  EXPECT_EQ(render(enumerate_tampered(f.word("γ"), f.model, 1), f.plant.alphabet()),
            (std::vector<std::string>{"(γ,0)", "(α,1)"}));
}

TEST(EnumerateTampered, EmptyModel) {
  EstimationFixture f;
  const AttackModel none(f.plant.alphabet());
  EXPECT_EQ(render(enumerate_tampered(f.word("α β"), none, 5), f.plant.alphabet()),
            (std::vector<std::string>{"(α β,0)"}));
}

TEST(EnumerateMatching, CostBoundTwo) {
  EstimationFixture f;
  const auto ra = enumerate_matching(f.word("β α α"), f.model, 2);
  EXPECT_EQ(render(ra, f.plant.alphabet()),
            (std::vector<std::string>{"(β α α,0)", "(β t_{γ,α} α,1)", "(β α t_{γ,α},1)",
                                      "(i_{β} α α,2)", "(t_{α,β} α α,2)", "(β t_{γ,α} t_{γ,α},2)"}));
  std::vector<std::string> projected;
  for (const auto& m : ra) {
    projected.push_back(format_word(f.plant.alphabet(), attacker_projection(m.labels, f.model)));
  }
  EXPECT_EQ(projected, (std::vector<std::string>{"β α α", "β γ α", "β α γ", "α α", "α α α", "β γ γ"}));
}

TEST(EnumerateMatching, EmptyModel) {
  EstimationFixture f;
  const AttackModel none(f.plant.alphabet());
  EXPECT_EQ(render(enumerate_matching(f.word("β α"), none, 4), f.plant.alphabet()),
            (std::vector<std::string>{"(β α,0)"}));
}

TEST(EnumerateMatching, Properties) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const PlantNfa p = testing::random_plant(rng, {.max_states = 2, .observables = 3});
    const AttackModel m = testing::random_attack_model(rng, p.alphabet(), 3, 0.4);
    const Cost budget = trial % 5;
    const Word omega = testing::random_observation(rng, p.alphabet(), trial % 4);

    const auto tampered = enumerate_tampered(omega, m, budget);
    for (const auto& t : tampered) {
      // Every tampering has an explanation recovering ω at the same cost.
      const auto ra = enumerate_matching(t.word, m, budget);
      EXPECT_TRUE(std::any_of(ra.begin(), ra.end(), [&](const CostedSequence& r) {
        return attacker_projection(r.labels, m) == omega && r.cost == t.cost;
      }));
    }

    const auto ra = enumerate_matching(omega, m, budget);
    ASSERT_FALSE(ra.empty());
    EXPECT_EQ(ra.front().labels.size(), omega.size());
    EXPECT_EQ(ra.front().cost, 0u);
    for (const auto& r : ra) {
      EXPECT_EQ(sequence_cost(r.labels, m), r.cost);
      EXPECT_EQ(received_projection(r.labels, m), omega);
      const auto ins = std::count_if(r.labels.begin(), r.labels.end(),
                                     [](const AttackLabel& l) { return l.kind == LabelKind::kInsert; });
      EXPECT_EQ(attacker_projection(r.labels, m).size(), r.labels.size() - static_cast<std::size_t>(ins));
    }
    // Monotone in the budget.
    const auto more = enumerate_matching(omega, m, budget + 1);
    for (const auto& r : ra) EXPECT_NE(std::find(more.begin(), more.end(), r), more.end());
    const auto more_t = enumerate_tampered(omega, m, budget + 1);
    for (const auto& t : tampered) EXPECT_NE(std::find(more_t.begin(), more_t.end(), t), more_t.end());
  }
}

}  // namespace
}  // namespace tamperest
