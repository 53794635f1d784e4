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

// Command-line front end: observer, estimate, diagnose, cmin, export-dot.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tamperest/attack_model.hpp"
#include "tamperest/automata.hpp"
#include "tamperest/cmin.hpp"
#include "tamperest/diagnoser.hpp"
#include "tamperest/dot.hpp"
#include "tamperest/error.hpp"
#include "tamperest/estimator.hpp"
#include "tamperest/io.hpp"
#include "tamperest/matching_machine.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tamperest;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

struct Globals {
  std::string plant_path;
  std::string attacks_path;
  std::vector<std::string> faults;
  std::string format = "json";
};

struct Workspace {
  PlantNfa plant;
  AttackModel model;
  std::vector<Symbol> faults;
};

Workspace load(const Globals& g) {
  if (g.plant_path.empty()) throw ValidationError("--plant is required");
  PlantNfa plant = parse_plant(read_text_file(g.plant_path));
  AttackModel model = g.attacks_path.empty()
                          ? AttackModel(plant.alphabet())
                          : parse_attack_model(read_text_file(g.attacks_path), plant.alphabet());
  std::vector<Symbol> faults;
  if (g.faults.empty()) {
    faults = plant.faults();
  } else {
    for (const auto& name : g.faults) faults.push_back(plant.alphabet().at(name));
    std::sort(faults.begin(), faults.end());
    faults.erase(std::unique(faults.begin(), faults.end()), faults.end());
  }
  return {std::move(plant), std::move(model), std::move(faults)};
}

ordered_json state_json(const PlantNfa& plant, StateId x) {
  const std::string& name = plant.state_name(x);
  if (is_canonical_index(name)) return std::stoul(name);
  return name;
}

ordered_json state_set_json(const PlantNfa& plant, const StateSet& set) {
  ordered_json out = ordered_json::array();
  for (StateId x : set) out.push_back(state_json(plant, x));
  return out;
}

Word observation(const PlantNfa& plant, const std::string& text) {
  Word w = parse_word(plant.alphabet(), text);
  for (Symbol e : w) {
    if (!plant.is_observable(e)) {
      throw ValidationError("observation contains unobservable event '" + plant.alphabet().name(e) + "'");
    }
  }
  return w;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << content;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_observer(const Globals& g) {
  const Workspace ws = load(g);
  const ObserverDfa obs = build_observer(ws.plant);
  if (g.format == "dot") {
    std::cout << to_dot(ws.plant, obs);
    return kExitOk;
  }
  if (g.format == "text") {
    for (std::size_t i = 0; i < obs.num_states(); ++i) {
      for (const auto& [e, to] : obs.edges(i)) {
        std::cout << format_states(ws.plant, obs.state(i)) << " -" << ws.plant.alphabet().name(e) << "-> "
                  << format_states(ws.plant, obs.state(to)) << "\n";
      }
    }
    return kExitOk;
  }
  ordered_json doc;
  ordered_json states = ordered_json::array();
  for (std::size_t i = 0; i < obs.num_states(); ++i) states.push_back(state_set_json(ws.plant, obs.state(i)));
  ordered_json transitions = ordered_json::array();
  for (std::size_t i = 0; i < obs.num_states(); ++i) {
    for (const auto& [e, to] : obs.edges(i)) {
      transitions.push_back({{"from", i}, {"event", ws.plant.alphabet().name(e)}, {"to", to}});
    }
  }
  doc["states"] = std::move(states);
  doc["initial"] = obs.initial();
  doc["transitions"] = std::move(transitions);
  emit(doc);
  return kExitOk;
}

struct EstimateArgs {
  std::string obs;
  Cost budget = 0;
  bool witness = false;
  std::string dot;
};

ordered_json entries_json(const PlantNfa& plant, const std::vector<EstimateEntry>& entries) {
  ordered_json out = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json item = {{"state", state_json(plant, e.state)}, {"cost", e.cost}};
    if (e.witness) item["witness"] = format_labels(*e.witness, plant.alphabet());
    out.push_back(std::move(item));
  }
  return out;
}

int cmd_estimate(const Globals& g, const EstimateArgs& a) {
  const Workspace ws = load(g);
  const Word received = observation(ws.plant, a.obs);
  const Estimate est = estimate_least_cost(ws.plant, ws.model, received, a.budget, {a.witness});
  std::string product_dot;
  if (!a.dot.empty() || g.format == "dot") {
    const auto gsc = build_gsc(received, ws.model, a.budget + 1);
    product_dot = to_dot(ws.plant, reduce_product(build_product(ws.plant, gsc)));
  }
  if (!a.dot.empty()) write_file(a.dot, product_dot);
  if (g.format == "dot") {
    std::cout << product_dot;
    return kExitOk;
  }
  if (g.format == "text") {
    for (const auto& e : est.entries) {
      std::cout << ws.plant.state_name(e.state) << " " << e.cost;
      if (e.witness) std::cout << " " << format_labels(*e.witness, ws.plant.alphabet());
      std::cout << "\n";
    }
    return kExitOk;
  }
  ordered_json doc;
  doc["observation"] = format_word(ws.plant.alphabet(), received);
  doc["budget"] = a.budget;
  doc["estimates"] = entries_json(ws.plant, est.entries);
  doc["over_budget"] = entries_json(ws.plant, est.over_budget);
  emit(doc);
  return kExitOk;
}

struct DiagnoseArgs {
  Cost budget = 0;
  bool witness = false;
  std::string dot;
};

int cmd_diagnose(const Globals& g, const DiagnoseArgs& a) {
  const Workspace ws = load(g);
  const DiagnosabilityVerdict verdict = verify_diagnosability(ws.plant, ws.model, ws.faults, a.budget);
  std::optional<CostedPlant> modified;
  std::optional<FVerifier> verifier;
  if (a.witness || !a.dot.empty() || g.format == "dot") {
    modified.emplace(build_modified(ws.plant, ws.model, a.budget));
    verifier.emplace(build_verifier(*modified, ws.faults));
  }
  if (!a.dot.empty()) write_file(a.dot, to_dot(*verifier));
  if (g.format == "dot") {
    std::cout << to_dot(*verifier);
    return kExitOk;
  }
  if (g.format == "text") {
    std::cout << (verdict.diagnosable ? "diagnosable" : "not diagnosable") << "\n";
    return kExitOk;
  }
  ordered_json doc;
  doc["diagnosable"] = verdict.diagnosable;
  doc["budget"] = a.budget;
  doc["modified_states"] = verdict.modified_states;
  doc["verifier_states"] = verdict.verifier_states;
  if (a.witness && verdict.witness) {
    const auto& w = *verdict.witness;
    const Alphabet& sigma = modified->automaton().alphabet();
    ordered_json cycle = ordered_json::array();
    for (std::size_t s : w.cycle.states) cycle.push_back(verifier->format_state(s));
    doc["witness"] = {{"faulty_prefix", format_word(sigma, w.faulty_prefix)},
                      {"faulty_cycle", format_word(sigma, w.faulty_cycle)},
                      {"normal_prefix", format_word(sigma, w.normal_prefix)},
                      {"normal_cycle", format_word(sigma, w.normal_cycle)},
                      {"cycle", std::move(cycle)}};
  }
  emit(doc);
  return kExitOk;
}

struct CminArgs {
  bool witness = false;
  std::string dot;
};

int cmd_cmin(const Globals& g, const CminArgs& a) {
  const Workspace ws = load(g);
  const CorruptedAutomaton gc = build_corrupted(ws.plant, ws.model);
  const ModifiedVerifier v = build_modified_verifier(gc, ws.faults);
  const CminResult r = compute_cmin(v, ws.model.max_cost());
  if (!a.dot.empty()) write_file(a.dot, to_dot(v, &r.ending));
  if (g.format == "dot") {
    std::cout << to_dot(v, &r.ending);
    return kExitOk;
  }
  if (g.format == "text") {
    std::cout << (r.cmin ? std::to_string(*r.cmin) : "none") << "\n";
    return kExitOk;
  }
  ordered_json doc;
  if (r.cmin) {
    doc["cmin"] = *r.cmin;
  } else {
    doc["cmin"] = nullptr;
    doc["reason"] = "no modified F-confused cycle";
  }
  ordered_json ending = ordered_json::array();
  for (std::size_t s : r.ending.states) ending.push_back(v.format_state(s));
  doc["ending_states"] = std::move(ending);
  if (a.witness && r.cmin) {
    ordered_json path = ordered_json::array();
    for (std::size_t s : r.witness_states) path.push_back(v.format_state(s));
    ordered_json labels = ordered_json::array();
    for (const auto& e : r.witness_edges) labels.push_back(v.format_label(e.label));
    doc["witness"] = {{"states", std::move(path)}, {"labels", std::move(labels)}};
  }
  emit(doc);
  return kExitOk;
}

struct ExportArgs {
  std::string what = "plant";
  std::string obs;
  Cost budget = 0;
  std::string output;
};

int cmd_export_dot(const Globals& g, const ExportArgs& a) {
  const Workspace ws = load(g);
  std::string dot;
  if (a.what == "plant") {
    dot = to_dot(ws.plant);
  } else if (a.what == "observer") {
    dot = to_dot(ws.plant, build_observer(ws.plant));
  } else if (a.what == "gsc" || a.what == "product" || a.what == "reduced-product") {
    const Word received = observation(ws.plant, a.obs);
    const auto gsc = build_gsc(received, ws.model, a.budget + 1);
    if (a.what == "gsc") {
      dot = to_dot(gsc);
    } else {
      const auto h = build_product(ws.plant, gsc);
      dot = to_dot(ws.plant, a.what == "product" ? h : reduce_product(h));
    }
  } else if (a.what == "modified-plant") {
    dot = to_dot(build_modified_unchecked(ws.plant, ws.model, a.budget).automaton());
  } else if (a.what == "verifier") {
    dot = to_dot(build_verifier(build_modified(ws.plant, ws.model, a.budget), ws.faults));
  } else if (a.what == "modified-verifier") {
    const ModifiedVerifier v = build_modified_verifier(build_corrupted(ws.plant, ws.model), ws.faults);
    const EndingStates ending = find_ending_states(v);
    dot = to_dot(v, &ending);
  }
  if (a.output.empty()) {
    std::cout << dot;
  } else {
    write_file(a.output, dot);
  }
  return kExitOk;
}

void report_error(const char* kind, const std::string& message, const std::vector<std::string>& witness = {}) {
  ordered_json doc = {{"error", kind}, {"message", message}};
  if (!witness.empty()) doc["witness"] = witness;
  std::cerr << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least-cost state estimation and diagnosability under observation tampering"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--plant", g.plant_path, "plant JSON file");
  app.add_option("--attacks", g.attacks_path, "attack cost table JSON file (default: no attacks)");
  app.add_option("--faults", g.faults, "fault events (default: the plant's faults)")->delimiter(',');
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));

  auto* observer = app.add_subcommand("observer", "build the observer");

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "least-cost state estimate for a received observation");
  estimate->add_option("--obs", est.obs, "received observation, whitespace separated")->required();
  estimate->add_option("--budget", est.budget, "attack budget")->required();
  estimate->add_flag("--witness", est.witness, "include one cheapest explanation per state");
  estimate->add_option("--dot", est.dot, "write the reduced product as DOT");

  DiagnoseArgs diag;
  auto* diagnose = app.add_subcommand("diagnose", "decide diagnosability against a budgeted attacker");
  diagnose->add_option("--budget", diag.budget, "attack budget")->required();
  diagnose->add_flag("--witness", diag.witness, "include a confusing pair of runs");
  diagnose->add_option("--dot", diag.dot, "write the verifier as DOT");

  CminArgs cm;
  auto* cmin = app.add_subcommand("cmin", "minimum budget that defeats diagnosis");
  cmin->add_flag("--witness", cm.witness, "include a cheapest access path");
  cmin->add_option("--dot", cm.dot, "write the modified verifier as DOT");

  ExportArgs ex;
  auto* export_dot = app.add_subcommand("export-dot", "render an intermediate automaton");
  export_dot->add_option("--what", ex.what, "automaton to render")
      ->check(CLI::IsMember({"plant", "observer", "gsc", "product", "reduced-product", "modified-plant",
                             "verifier", "modified-verifier"}));
  export_dot->add_option("--obs", ex.obs, "received observation (gsc, product)");
  export_dot->add_option("--budget", ex.budget, "attack budget");
  export_dot->add_option("-o,--output", ex.output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (observer->parsed()) return cmd_observer(g);
    if (estimate->parsed()) return cmd_estimate(g, est);
    if (diagnose->parsed()) return cmd_diagnose(g, diag);
    if (cmin->parsed()) return cmd_cmin(g, cm);
    if (export_dot->parsed()) return cmd_export_dot(g, ex);
  } catch (const PreconditionError& e) {
    report_error("precondition", e.what(), e.witness());
    return kExitPrecondition;
  } catch (const ValidationError& e) {
    report_error("input", e.what());
    return kExitInput;
  } catch (const ConfigurationError& e) {
    report_error("input", e.what());
    return kExitInput;
  }
  return kExitInput;
}
