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

#include "tamperest/graph.hpp"

#include <gtest/gtest.h>

namespace tamperest::graph {
namespace {

TEST(Graph, ComponentsOfTwoCyclesJoinedByBridge) {
  // 0 <-> 1 -> 2 <-> 3, 4 isolated
  Adjacency adj{{1}, {0, 2}, {3}, {2}, {}};
  const auto c = strongly_connected_components(adj);
  EXPECT_EQ(c.count, 3u);
  EXPECT_EQ(c.component_of[0], c.component_of[1]);
  EXPECT_EQ(c.component_of[2], c.component_of[3]);
  EXPECT_NE(c.component_of[1], c.component_of[2]);
  // Reverse topological numbering: the sink component comes first.
  EXPECT_LT(c.component_of[2], c.component_of[0]);
}

TEST(Graph, OnCycleCountsSelfLoopsOnly) {
  Adjacency adj{{0}, {2}, {}};
  EXPECT_EQ(on_cycle(adj), (std::vector<bool>{true, false, false}));
}

TEST(Graph, CycleThrough) {
  Adjacency adj{{1}, {2}, {0, 1}};
  EXPECT_EQ(cycle_through(adj, 0), (std::vector<std::size_t>{0, 1, 2, 0}));
  EXPECT_EQ(cycle_through(adj, 1), (std::vector<std::size_t>{1, 2, 1}));
  Adjacency loop{{0}};
  EXPECT_EQ(cycle_through(loop, 0), (std::vector<std::size_t>{0, 0}));
  Adjacency dag{{1}, {}};
  EXPECT_TRUE(cycle_through(dag, 0).empty());
}

TEST(Graph, ShortestPath) {
  Adjacency adj{{1, 2}, {3}, {3}, {}, {3}};
  EXPECT_EQ(shortest_path(adj, {0}, 3).size(), 3u);
  EXPECT_EQ(shortest_path(adj, {4, 0}, 3), (std::vector<std::size_t>{4, 3}));
  EXPECT_EQ(shortest_path(adj, {3}, 3), (std::vector<std::size_t>{3}));
  EXPECT_TRUE(shortest_path(adj, {3}, 0).empty());
}

TEST(Graph, DeepChainDoesNotOverflowStack) {
  const std::size_t n = 200000;
  Adjacency adj(n);
  for (std::size_t i = 0; i + 1 < n; ++i) adj[i].push_back(i + 1);
  adj[n - 1].push_back(0);
  const auto c = strongly_connected_components(adj);
  EXPECT_EQ(c.count, 1u);
}

}  // namespace
}  // namespace tamperest::graph
