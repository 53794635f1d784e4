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

#include "tamperest/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tamperest/error.hpp"

namespace tamperest {

namespace {

using nlohmann::json;

// Large enough for any desk-scale model, small enough that sums of a few
// thousand costs stay far from overflow.
constexpr std::uint64_t kMaxCost = 1'000'000;

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

const json& member(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(std::string(where) + ": missing key '" + key + "'");
  return *it;
}

const json& array_member(const json& obj, const char* key, const char* where) {
  const json& v = member(obj, key, where);
  if (!v.is_array()) throw ValidationError(std::string(where) + ": '" + key + "' must be an array");
  return v;
}

std::string state_key(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  throw ValidationError(where + ": state must be a string or a non-negative integer");
}

std::string symbol_key(const json& v, const std::string& where) {
  if (!v.is_string()) throw ValidationError(where + ": event must be a string");
  return v.get<std::string>();
}

Symbol observable_symbol(const Alphabet& alphabet, const std::string& name, const std::string& where) {
  auto s = alphabet.find(name);
  if (!s) throw ValidationError(where + ": unknown event '" + name + "'");
  if (!alphabet.observable(*s)) throw ValidationError(where + ": event '" + name + "' is unobservable");
  return *s;
}

Cost cost_value(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 || v.get<std::uint64_t>() > kMaxCost) {
    throw ValidationError(where + ": cost must be an integer in 1.." + std::to_string(kMaxCost));
  }
  return static_cast<Cost>(v.get<std::uint64_t>());
}

json state_json(const std::string& name) {
  if (is_canonical_index(name)) return std::stoul(name);
  return name;
}

}  // namespace

bool is_canonical_index(std::string_view s) {
  if (s.empty() || s.size() > 9) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PlantNfa parse_plant(std::string_view text) {
  const json doc = parse_json(text, "plant");
  if (!doc.is_object()) throw ValidationError("plant: top level must be an object");
  PlantBuilder b;
  try {
    const json& states = array_member(doc, "states", "plant");
    for (std::size_t i = 0; i < states.size(); ++i) {
      b.add_state(state_key(states[i], "plant.states[" + std::to_string(i) + "]"));
    }
    for (const char* key : {"observable", "unobservable"}) {
      const bool observable = std::string_view(key) == "observable";
      if (!doc.contains(key)) continue;
      const json& events = array_member(doc, key, "plant");
      for (std::size_t i = 0; i < events.size(); ++i) {
        b.add_event(symbol_key(events[i], std::string("plant.") + key + "[" + std::to_string(i) + "]"),
                    observable);
      }
    }
    if (doc.contains("faults")) {
      const json& faults = array_member(doc, "faults", "plant");
      for (std::size_t i = 0; i < faults.size(); ++i) {
        const std::string where = "plant.faults[" + std::to_string(i) + "]";
        const std::string name = symbol_key(faults[i], where);
        auto s = b.alphabet().find(name);
        if (!s) throw ValidationError(where + ": fault '" + name + "' is not a declared event");
        b.mark_fault(*s);
      }
    }
    const json& initial = array_member(doc, "initial", "plant");
    for (std::size_t i = 0; i < initial.size(); ++i) {
      b.add_initial(state_key(initial[i], "plant.initial[" + std::to_string(i) + "]"));
    }
    const json& transitions = array_member(doc, "transitions", "plant");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
      const std::string where = "plant.transitions[" + std::to_string(i) + "]";
      const json& t = transitions[i];
      if (!t.is_object()) throw ValidationError(where + ": must be an object");
      b.add_transition(state_key(member(t, "from", where.c_str()), where),
                       symbol_key(member(t, "event", where.c_str()), where),
                       state_key(member(t, "to", where.c_str()), where));
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("plant: ") + e.what());
  }
  return std::move(b).build();
}

std::string serialize_plant(const PlantNfa& plant) {
  const Alphabet& sigma = plant.alphabet();
  json doc = json::object();
  json states = json::array();
  for (StateId x = 0; x < plant.num_states(); ++x) states.push_back(state_json(plant.state_name(x)));
  json obs = json::array(), unobs = json::array(), faults = json::array(), initial = json::array();
  for (Symbol e : sigma.observables()) obs.push_back(sigma.name(e));
  for (Symbol e : sigma.unobservables()) unobs.push_back(sigma.name(e));
  for (Symbol f : plant.faults()) faults.push_back(sigma.name(f));
  for (StateId x : plant.initial()) initial.push_back(state_json(plant.state_name(x)));
  json transitions = json::array();
  for (const auto& t : plant.transitions()) {
    transitions.push_back({{"from", state_json(plant.state_name(t.from))},
                           {"event", sigma.name(t.event)},
                           {"to", state_json(plant.state_name(t.to))}});
  }
  doc["states"] = std::move(states);
  doc["observable"] = std::move(obs);
  doc["unobservable"] = std::move(unobs);
  doc["faults"] = std::move(faults);
  doc["initial"] = std::move(initial);
  doc["transitions"] = std::move(transitions);
  return doc.dump(2) + "\n";
}

AttackModel parse_attack_model(std::string_view text, const Alphabet& alphabet) {
  const json doc = parse_json(text, "attack model");
  if (!doc.is_object()) throw ValidationError("attacks: top level must be an object");
  std::map<Symbol, Cost> deletions, insertions;
  std::map<AttackModel::SymbolPair, Cost> substitutions;
  for (auto [key, target] : {std::pair{"deletions", &deletions}, std::pair{"insertions", &insertions}}) {
    if (!doc.contains(key)) continue;
    const json& table = doc.at(key);
    const std::string where = std::string("attacks.") + key;
    if (!table.is_object()) throw ValidationError(where + ": must be an object");
    for (const auto& [name, cost] : table.items()) {
      const std::string at = where + "." + name;
      target->emplace(observable_symbol(alphabet, name, at), cost_value(cost, at));
    }
  }
  if (doc.contains("substitutions")) {
    const json& subs = doc.at("substitutions");
    if (!subs.is_array()) throw ValidationError("attacks.substitutions: must be an array");
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const std::string where = "attacks.substitutions[" + std::to_string(i) + "]";
      const json& s = subs[i];
      if (!s.is_object()) throw ValidationError(where + ": must be an object");
      const Symbol from = observable_symbol(alphabet, symbol_key(member(s, "from", where.c_str()), where), where);
      const Symbol to = observable_symbol(alphabet, symbol_key(member(s, "to", where.c_str()), where), where);
      const Cost cost = cost_value(member(s, "cost", where.c_str()), where);
      if (!substitutions.emplace(std::make_pair(from, to), cost).second) {
        throw ValidationError(where + ": duplicate substitution");
      }
    }
  }
  return AttackModel(alphabet, std::move(deletions), std::move(insertions), std::move(substitutions));
}

std::string serialize_attack_model(const AttackModel& model) {
  const Alphabet& sigma = model.alphabet();
  json doc = json::object();
  json del = json::object(), ins = json::object(), subs = json::array();
  for (const auto& [s, c] : model.deletions()) del[sigma.name(s)] = c;
  for (const auto& [s, c] : model.insertions()) ins[sigma.name(s)] = c;
  for (const auto& [p, c] : model.substitutions()) {
    subs.push_back({{"from", sigma.name(p.first)}, {"to", sigma.name(p.second)}, {"cost", c}});
  }
  doc["deletions"] = std::move(del);
  doc["insertions"] = std::move(ins);
  doc["substitutions"] = std::move(subs);
  return doc.dump(2) + "\n";
}

}  // namespace tamperest
