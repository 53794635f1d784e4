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

#include "tamperest/dot.hpp"

#include <algorithm>
#include <sstream>

namespace tamperest {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void header(std::ostringstream& os, const char* name) {
  os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
}

// Invisible source nodes with arrows into the initial states.
void initial_arrows(std::ostringstream& os, const std::vector<std::size_t>& initial) {
  for (std::size_t k = 0; k < initial.size(); ++k) {
    os << "  __init" << k << " [shape=point];\n  __init" << k << " -> n" << initial[k] << ";\n";
  }
}

}  // namespace

std::string to_dot(const PlantNfa& plant) {
  std::ostringstream os;
  header(os, "plant");
  const auto& sigma = plant.alphabet();
  for (StateId x = 0; x < plant.num_states(); ++x) {
    os << "  n" << x << " [label=" << quote(plant.state_name(x)) << "];\n";
  }
  initial_arrows(os, {plant.initial().begin(), plant.initial().end()});
  for (const auto& t : plant.transitions()) {
    os << "  n" << t.from << " -> n" << t.to << " [label=" << quote(sigma.name(t.event));
    if (!sigma.observable(t.event)) os << ", style=dashed";
    if (plant.is_fault(t.event)) os << ", color=red";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const PlantNfa& plant, const ObserverDfa& observer) {
  std::ostringstream os;
  header(os, "observer");
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < observer.num_states(); ++i) {
    os << "  n" << i << " [label=" << quote(format_states(plant, observer.state(i))) << "];\n";
  }
  initial_arrows(os, {observer.initial()});
  for (std::size_t i = 0; i < observer.num_states(); ++i) {
    for (const auto& [e, to] : observer.edges(i)) {
      os << "  n" << i << " -> n" << to << " [label=" << quote(plant.alphabet().name(e)) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const CostedObservationDfa& gsc) {
  std::ostringstream os;
  header(os, "gsc");
  const auto& sigma = gsc.model().alphabet();
  for (std::size_t stage = 0; stage <= gsc.final_stage(); ++stage) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < gsc.num_states(); ++i) {
      if (gsc.state(i).stage == stage) os << " n" << i << ";";
    }
    os << " }\n";
  }
  for (std::size_t i = 0; i < gsc.num_states(); ++i) {
    const auto& s = gsc.state(i);
    os << "  n" << i << " [label=" << quote("(" + std::to_string(s.stage) + "," + std::to_string(s.cost) + ")");
    if (s.stage == gsc.final_stage()) os << ", shape=doublecircle";
    os << "];\n";
  }
  initial_arrows(os, {gsc.initial()});
  for (std::size_t i = 0; i < gsc.num_states(); ++i) {
    for (const auto& e : gsc.edges(i)) {
      os << "  n" << i << " -> n" << e.to << " [label=" << quote(format_label(e.label, sigma)) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const PlantNfa& plant, const ProductAutomaton& product) {
  std::ostringstream os;
  header(os, "product");
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < product.num_states(); ++i) {
    const auto& s = product.state(i);
    os << "  n" << i << " [label="
       << quote("(" + plant.state_name(s.plant) + "," + std::to_string(s.stage) + "," + std::to_string(s.cost) + ")");
    if (s.stage == product.final_stage()) os << ", peripheries=2";
    os << "];\n";
  }
  initial_arrows(os, product.initial());
  for (std::size_t i = 0; i < product.num_states(); ++i) {
    for (const auto& e : product.edges(i)) {
      os << "  n" << i << " -> n" << e.to << " [label=" << quote(format_label(e.label, plant.alphabet()))
         << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const FVerifier& verifier) {
  std::ostringstream os;
  header(os, "verifier");
  os << "  node [shape=box];\n";
  const auto& sigma = verifier.plant().alphabet();
  for (std::size_t i = 0; i < verifier.num_states(); ++i) {
    os << "  n" << i << " [label=" << quote(verifier.format_state(i));
    if (verifier.state(i).mismatched()) os << ", color=red";
    os << "];\n";
  }
  initial_arrows(os, verifier.initial());
  for (std::size_t i = 0; i < verifier.num_states(); ++i) {
    for (const auto& e : verifier.edges(i)) {
      std::string label = sigma.name(e.event);
      if (e.move == Move::kLeft) label += " (L)";
      if (e.move == Move::kRight) label += " (R)";
      os << "  n" << i << " -> n" << e.to << " [label=" << quote(label) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const ModifiedVerifier& verifier, const EndingStates* ending) {
  std::ostringstream os;
  header(os, "modified_verifier");
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < verifier.num_states(); ++i) {
    os << "  n" << i << " [label=" << quote(verifier.format_state(i));
    if (ending && std::binary_search(ending->states.begin(), ending->states.end(), i)) {
      os << ", peripheries=2";
    }
    if (verifier.state(i).mismatched()) os << ", color=red";
    os << "];\n";
  }
  initial_arrows(os, verifier.initial());
  for (std::size_t i = 0; i < verifier.num_states(); ++i) {
    for (const auto& e : verifier.edges(i)) {
      std::string label = verifier.format_label(e.label);
      if (e.move == Move::kLeft) label += " (L)";
      if (e.move == Move::kRight) label += " (R)";
      os << "  n" << i << " -> n" << e.to << " [label=" << quote(label) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tamperest
