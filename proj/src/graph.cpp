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

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

namespace tamperest::graph {

namespace {
constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
}  // namespace

Components strongly_connected_components(const Adjacency& adj) {
  const std::size_t n = adj.size();
  Components out;
  out.component_of.assign(n, kUnset);
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0;

  // (vertex, next child position)
  std::vector<std::pair<std::size_t, std::size_t>> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (pos < adj[v].size()) {
        const std::size_t w = adj[v][pos++];
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component_of[w] = out.count;
        } while (w != v);
        ++out.count;
      }
      const std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return out;
}

std::vector<bool> on_cycle(const Adjacency& adj) {
  const auto comps = strongly_connected_components(adj);
  std::vector<bool> has_edge(comps.count, false);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (std::size_t w : adj[v]) {
      if (comps.component_of[v] == comps.component_of[w]) has_edge[comps.component_of[v]] = true;
    }
  }
  std::vector<bool> out(adj.size(), false);
  for (std::size_t v = 0; v < adj.size(); ++v) out[v] = has_edge[comps.component_of[v]];
  return out;
}

std::vector<std::size_t> shortest_path(const Adjacency& adj,
                                       const std::vector<std::size_t>& sources,
                                       std::size_t target) {
  std::vector<std::size_t> parent(adj.size(), kUnset);
  std::vector<bool> seen(adj.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (v == target) {
      std::vector<std::size_t> path{v};
      for (std::size_t u = parent[v]; u != kUnset; u = parent[u]) path.push_back(u);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return {};
}

std::vector<std::size_t> cycle_through(const Adjacency& adj, std::size_t v) {
  std::vector<std::size_t> best;
  for (std::size_t w : adj[v]) {
    if (w == v) return {v, v};
    auto back = shortest_path(adj, {w}, v);
    if (!back.empty() && (best.empty() || back.size() + 1 < best.size())) {
      best.clear();
      best.push_back(v);
      best.insert(best.end(), back.begin(), back.end());
    }
  }
  return best;
}

}  // namespace tamperest::graph
