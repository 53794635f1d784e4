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

#include <cstddef>
#include <vector>

// Small directed-graph helpers shared by the cycle searches.
namespace tamperest::graph {

using Adjacency = std::vector<std::vector<std::size_t>>;

struct Components {
  std::vector<std::size_t> component_of;
  std::size_t count = 0;
};

/// Tarjan's algorithm, iterative. Components are numbered in reverse
/// topological order of the condensation.
Components strongly_connected_components(const Adjacency& adj);

/// Marks every vertex that lies on some cycle, i.e. belongs to a strongly
/// connected component containing at least one edge (self-loops count).
std::vector<bool> on_cycle(const Adjacency& adj);

/// Shortest cycle through `v` as a vertex sequence v, ..., v; empty if none.
std::vector<std::size_t> cycle_through(const Adjacency& adj, std::size_t v);

/// Shortest path from any of `sources` to `target` (inclusive); empty if
/// `target` is unreachable.
std::vector<std::size_t> shortest_path(const Adjacency& adj,
                                       const std::vector<std::size_t>& sources,
                                       std::size_t target);

}  // namespace tamperest::graph
