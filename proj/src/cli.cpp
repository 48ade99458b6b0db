// Copyright 2026 The zkgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zkg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zkg/alternation.hpp"
#include "zkg/epistemic.hpp"
#include "zkg/equilibrium.hpp"
#include "zkg/error.hpp"
#include "zkg/fuzzy.hpp"
#include "zkg/io/report.hpp"
#include "zkg/io/spec.hpp"
#include "zkg/io/walkthrough.hpp"
#include "zkg/signaling.hpp"

namespace zkg::cli {

namespace {

using io::Report;
using io::Table;

struct Options {
  std::string format = "table";
  std::uint64_t seed = 0;
  double epsilon = signaling::kDefaultEpsilon;

  std::string model_path;
  std::string game_path;
  std::string config_path;
  std::string agent;
  std::string agents;
  std::string event;
  std::string given;
  std::string perm;
  std::string interpretation = "strict";

  int k_max = 8;
  std::int64_t trials = 100000;
  std::string bluff = "2/3";
  std::string p_informed = "0";
  unsigned threads = 0;
  int rounds = 20;
};

// Input files read so far, concatenated for the report digest.
class Inputs {
 public:
  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    bytes_ += os.str();
    any_ = true;
    return os.str();
  }
  std::string digest() const { return any_ ? "fnv1a64:" + io::fnv1a64(bytes_) : "none"; }

 private:
  std::string bytes_;
  bool any_ = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string tf(bool b) { return b ? "T" : "F"; }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

double parse_probability(const std::string& text, const char* flag) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const SpecError&) {
    throw SpecError(std::string(flag) + ": expected a probability, got '" + text + "'");
  }
  return to_double(r);
}

std::string fixed(double x, int digits) {
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

// ---------------------------------------------------------------------------
// Model commands

struct LoadedModel {
  io::ModelSpec spec;
  epistemic::EpistemicModel model;
};

LoadedModel load_model(const Options& o, Inputs& inputs) {
  if (o.model_path.empty()) throw SpecError("--model is required");
  auto doc = io::parse_spec(inputs.read(o.model_path), io::SpecKind::kModel);
  auto spec = std::get<io::ModelSpec>(doc.body);
  auto model = io::build_model(spec);
  return {std::move(spec), std::move(model)};
}

std::vector<std::string> agent_group(const Options& o, const epistemic::EpistemicModel& m) {
  if (o.agents.empty()) return m.agents();
  auto group = split_list(o.agents);
  for (const auto& a : group) m.agent_index(a);
  return group;
}

const std::string& require_flag(const std::string& value, const char* flag) {
  if (value.empty()) throw SpecError(std::string(flag) + " is required");
  return value;
}

int check_model(const Options& o, Inputs& inputs, Report& report) {
  if (o.model_path.empty()) throw SpecError("--model is required");
  auto doc = io::parse_spec(inputs.read(o.model_path), io::SpecKind::kModel);
  const auto& spec = std::get<io::ModelSpec>(doc.body);
  const epistemic::StateSpace space(spec.states);

  Table t;
  t.header = {"agent", "cells", "p1", "p2", "serial", "transitive", "euclidean"};
  bool all_partitions = true;
  for (const auto& a : spec.agents) {
    std::vector<epistemic::Event> cells;
    for (const auto& c : a.partition) cells.push_back(space.event(c));
    const auto pr = epistemic::check_partition_properties(space.size(), cells);
    all_partitions = all_partitions && pr.p1 && pr.p2;
    std::vector<std::string> row = {a.id, std::to_string(cells.size()), tf(pr.p1), tf(pr.p2)};
    if (a.frame) {
      std::vector<epistemic::DoxasticFrame::Pair> pairs;
      for (const auto& [from, to] : *a.frame) pairs.emplace_back(space.index(from), space.index(to));
      const auto fr = epistemic::check_frame_properties(epistemic::DoxasticFrame(space.size(), pairs));
      row.insert(row.end(), {tf(fr.serial), tf(fr.transitive), tf(fr.euclidean)});
    } else {
      row.insert(row.end(), {"-", "-", "-"});
    }
    t.rows.push_back(std::move(row));
  }
  report.notes.push_back("states: " + std::to_string(space.size()) +
                         ", agents: " + std::to_string(spec.agents.size()) +
                         ", events: " + std::to_string(spec.events.size()));
  report.notes.push_back(std::string("partitions valid: ") + yes_no(all_partitions));
  report.table = std::move(t);
  return all_partitions ? 0 : 1;
}

int knows_cmd(const Options& o, Inputs& inputs, Report& report) {
  auto [spec, model] = load_model(o, inputs);
  const auto& e = model.event(require_flag(o.event, "--event"));
  const auto& agent = require_flag(o.agent, "--agent");
  report.table = Table{{"agent", "event", "knows"},
                       {{agent, o.event, model.space().format(epistemic::knows(model, agent, e))}}};
  return 0;
}

int believes_cmd(const Options& o, Inputs& inputs, Report& report) {
  auto [spec, model] = load_model(o, inputs);
  const auto& agent = require_flag(o.agent, "--agent");
  const auto& e = model.event(require_flag(o.event, "--event"));
  const auto& f = o.given.empty() ? model.space().full_event() : model.event(o.given);
  const auto b = epistemic::believes(model, agent, f, e);
  const auto vacuous = epistemic::vacuous_belief_states(model, agent, f);
  if (!vacuous.empty()) {
    report.notes.push_back("vacuous membership (cell misses F): " + model.space().format(vacuous));
  }
  report.table = Table{{"agent", "given", "event", "believes"},
                       {{agent, o.given.empty() ? "Omega" : o.given, o.event,
                         model.space().format(b)}}};
  return 0;
}

int common_cmd(const Options& o, Inputs& inputs, Report& report) {
  auto [spec, model] = load_model(o, inputs);
  const auto group = agent_group(o, model);
  const auto& e = model.event(require_flag(o.event, "--event"));
  const auto everyone = epistemic::group_knows(model, group, e);
  const auto common = epistemic::common_knowledge(model, group, e);
  report.table = Table{{"agents", "event", "group_knows", "common_knowledge"},
                       {{join(group, "+"), o.event, model.space().format(everyone),
                         model.space().format(common)}}};
  return 0;
}

int public_cmd(const Options& o, Inputs& inputs, Report& report) {
  auto [spec, model] = load_model(o, inputs);
  const auto group = agent_group(o, model);
  std::vector<std::string> components;
  for (const auto& c : epistemic::public_components(model, group)) {
    components.push_back(model.space().format(c));
  }
  report.notes.push_back("minimal public events: " + join(components, " "));
  Table t{{"event", "members", "public"}, {}};
  auto add = [&](const std::string& name, const epistemic::Event& e) {
    t.rows.push_back({name, model.space().format(e), yes_no(epistemic::is_public_event(model, group, e))});
  };
  if (!o.event.empty()) {
    add(o.event, model.event(o.event));
  } else {
    for (const auto& [name, e] : model.named_events()) add(name, e);
  }
  report.table = std::move(t);
  return 0;
}

// ---------------------------------------------------------------------------

int alternation_cmd(const Options&, Inputs&, Report& report) {
  Table t{{"sx", "ex", "fx", "antecedent", "lhs", "rhs", "whole", "stage"}, {}};
  for (const auto& row : alternation::boundary_table()) {
    const auto& a = row.assignment;
    const auto& v = row.verdict;
    t.rows.push_back({tf(a.sx), tf(a.ex), tf(a.fx), tf(v.antecedent), tf(v.lhs), tf(v.rhs),
                      tf(v.whole),
                      row.stage ? std::string(alternation::to_string(*row.stage)) : "-"});
  }
  report.table = std::move(t);
  return 0;
}

int simulate_cmd(const Options& o, Inputs& inputs, Report& report, const CLI::App& sub) {
  signaling::SimulationConfig config;
  if (!o.config_path.empty()) {
    auto doc = io::parse_spec(inputs.read(o.config_path), io::SpecKind::kSimulation);
    config = std::get<io::SimulationSpec>(doc.body).config;
  }
  // Explicit flags override the config document.
  if (o.config_path.empty() || sub.count("--k-max")) config.k_max = o.k_max;
  if (o.config_path.empty() || sub.count("--trials")) config.trials = o.trials;
  if (o.config_path.empty() || sub.count("--seed")) config.seed = o.seed;
  if (o.config_path.empty() || sub.count("--bluff")) config.bluff_success = parse_probability(o.bluff, "--bluff");
  if (o.config_path.empty() || sub.count("--p-informed")) {
    config.p_informed = parse_probability(o.p_informed, "--p-informed");
  }
  if (sub.count("--threads")) config.threads = o.threads;

  const auto rows = signaling::simulate(config);
  const int required = signaling::rounds_required(o.epsilon);
  report.notes.push_back("bluff_success = " + fixed(config.bluff_success, 10) +
                         ", p_informed = " + fixed(config.p_informed, 10));
  report.notes.push_back("h_k >= 1 - " + fixed(o.epsilon, 6) + " from k = " +
                         std::to_string(required));
  Table t{{"k", "theoretical_hk", "analytic_residual", "empirical_undetected", "trials", "seed"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.k), fixed(to_double(r.theoretical_hk), 10),
                      fixed(r.analytic_residual, 10), fixed(r.empirical_undetected, 10),
                      std::to_string(r.trials), std::to_string(r.seed)});
  }
  report.table = std::move(t);
  return 0;
}

// ---------------------------------------------------------------------------
// Game commands

equilibrium::NormalFormGame load_game(const Options& o, Inputs& inputs) {
  if (o.game_path.empty()) throw SpecError("--game is required");
  auto doc = io::parse_spec(inputs.read(o.game_path), io::SpecKind::kGame);
  return io::build_game(std::get<io::GameSpec>(doc.body));
}

std::vector<std::string> profile_header(const equilibrium::NormalFormGame& g) {
  std::vector<std::string> h = g.players();
  for (const auto& p : g.players()) h.push_back("payoff_" + p);
  return h;
}

std::vector<std::string> profile_row(const equilibrium::NormalFormGame& g,
                                     const equilibrium::Profile& s) {
  std::vector<std::string> row;
  for (std::size_t i = 0; i < s.size(); ++i) row.push_back(g.strategies()[i][s[i]]);
  for (const auto& p : g.payoffs(s)) row.push_back(to_string(p));
  return row;
}

int equilibria_cmd(const Options& o, Inputs& inputs, Report& report) {
  const auto game = load_game(o, inputs);
  const auto eq = equilibrium::pure_equilibria(game);
  report.notes.push_back("pure equilibria: " + std::to_string(eq.size()) + " of " +
                         std::to_string(game.profile_count()) + " profiles");
  Table t{profile_header(game), {}};
  for (const auto& s : eq) t.rows.push_back(profile_row(game, s));
  report.table = std::move(t);
  return 0;
}

int solvable_cmd(const Options& o, Inputs& inputs, Report& report) {
  const auto game = load_game(o, inputs);
  const auto result = equilibrium::is_solvable(game);
  report.notes.push_back("solvable: " + yes_no(result.solvable));
  if (result.solvable) {
    report.notes.push_back("strong solution: " +
                           yes_no(equilibrium::is_strong_solution(game, result.solution)));
  }
  Table t{profile_header(game), {}};
  for (const auto& s : result.solution) t.rows.push_back(profile_row(game, s));
  report.table = std::move(t);
  return 0;
}

std::string factor_text(const equilibrium::NormalFormGame& game,
                        const equilibrium::SubSolution& sub) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < sub.factor_sets.size(); ++i) {
    std::vector<std::string> names;
    for (auto a : sub.factor_sets[i]) names.push_back(game.strategies()[i][a]);
    parts.push_back(game.players()[i] + "={" + join(names, ",") + "}");
  }
  return join(parts, " ");
}

int subsolutions_cmd(const Options& o, Inputs& inputs, Report& report) {
  const auto game = load_game(o, inputs);
  const auto subs = equilibrium::sub_solutions(game);
  report.notes.push_back("sub-solutions: " + std::to_string(subs.size()));
  std::vector<std::string> header = {"subsolution"};
  for (const auto& h : profile_header(game)) header.push_back(h);
  Table t{header, {}};
  for (std::size_t k = 0; k < subs.size(); ++k) {
    report.notes.push_back("  " + std::to_string(k + 1) + ": " + factor_text(game, subs[k]) +
                           " strong=" + yes_no(equilibrium::is_strong_solution(game, subs[k].profiles)));
    for (const auto& s : subs[k].profiles) {
      auto row = profile_row(game, s);
      row.insert(row.begin(), std::to_string(k + 1));
      t.rows.push_back(std::move(row));
    }
  }
  report.table = std::move(t);
  return 0;
}

equilibrium::GamePermutation parse_perm(const std::string& text,
                                        const equilibrium::NormalFormGame& game) {
  auto perm = equilibrium::identity_permutation(game);
  if (text.empty()) return perm;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("--perm: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("--perm: expected {\"players\": [...], \"strategies\": [[...]]}");
  for (const auto& [key, value] : j.items()) {
    if (key != "players" && key != "strategies") throw SpecError("--perm." + key + ": unknown key");
  }
  try {
    if (j.contains("players")) perm.player_map = j["players"].get<std::vector<std::size_t>>();
    if (j.contains("strategies")) {
      perm.strategy_maps = j["strategies"].get<std::vector<std::vector<std::size_t>>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("--perm: ") + e.what());
  }
  return perm;
}

int symmetry_cmd(const Options& o, Inputs& inputs, Report& report) {
  const auto game = load_game(o, inputs);
  const auto perm = parse_perm(o.perm, game);
  const bool symmetric = equilibrium::check_symmetry(game, perm);
  report.notes.push_back("payoff symmetry under permutation: " + yes_no(symmetric));
  const auto fixed_points = equilibrium::symmetric_profiles(game, perm);
  std::vector<std::string> header = game.players();
  header.push_back("equilibrium");
  Table t{header, {}};
  bool symmetric_eq = false;
  for (const auto& s : fixed_points) {
    std::vector<std::string> row;
    for (std::size_t i = 0; i < s.size(); ++i) row.push_back(game.strategies()[i][s[i]]);
    const bool eq = equilibrium::is_equilibrium(game, s);
    symmetric_eq = symmetric_eq || eq;
    row.push_back(yes_no(eq));
    t.rows.push_back(std::move(row));
  }
  report.notes.push_back("symmetric pure equilibrium: " + yes_no(symmetric_eq));
  report.table = std::move(t);
  return 0;
}

int fuzzy_cmd(const Options& o, Inputs& inputs, Report& report) {
  if (o.game_path.empty()) throw SpecError("--game is required");
  auto doc = io::parse_spec(inputs.read(o.game_path), io::SpecKind::kFuzzy);
  const auto game = io::build_fuzzy(std::get<io::FuzzySpec>(doc.body));
  const auto interp = o.interpretation == "literal" ? fuzzy::Interpretation::kLiteral
                                                    : fuzzy::Interpretation::kStrict;
  report.notes.push_back("interpretation: " + std::string(fuzzy::to_string(interp)));
  report.notes.push_back("scale: " + join(game.scale().labels(), " < "));
  Table t{{"form", "row", "col", "row_strategy", "col_strategy", "v", "phi"}, {}};
  auto add = [&](const char* form, const std::vector<fuzzy::CellIndex>& cells) {
    for (const auto& c : cells) {
      const auto& cell = game.at(c.row, c.col);
      t.rows.push_back({form, std::to_string(c.row + 1), std::to_string(c.col + 1),
                        game.strategy_labels(0)[c.row], game.strategy_labels(1)[c.col],
                        game.scale().label(cell.v), game.scale().label(cell.phi)});
    }
  };
  add("NNE", fuzzy::find_nne(game, interp));
  add("FNE", fuzzy::find_fne(game, interp));
  add("FNNE", fuzzy::find_fnne(game, interp));
  report.table = std::move(t);
  return 0;
}

int walkthrough_cmd(const Options& o, Inputs&, Report& report) {
  io::WalkthroughConfig config;
  config.seed = o.seed;
  config.rounds = o.rounds;
  config.epsilon = o.epsilon;
  const auto result = io::run_walkthrough(config);
  auto body = io::walkthrough_report(result);
  report.notes = std::move(body.notes);
  report.table = std::move(body.table);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-knowledge games: epistemic operators, signaling, equilibria", "zkgame"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "table"}));
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--epsilon", o.epsilon, "Tolerance for h_k ~ 1")
        ->check(CLI::Range(0.0, 0.5));
    return sub;
  };
  auto model_opts = [&](CLI::App* sub) {
    sub->add_option("--model", o.model_path, "Model document (JSON)")->required();
    return sub;
  };

  using Handler = std::function<int(Inputs&, Report&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* check = model_opts(common(app.add_subcommand("check-model", "Validate partitions and frames")));
  commands.emplace_back(check, [&](Inputs& in, Report& r) { return check_model(o, in, r); });

  auto* knows = model_opts(common(app.add_subcommand("knows", "K_i(E)")));
  knows->add_option("--agent", o.agent)->required();
  knows->add_option("--event", o.event)->required();
  commands.emplace_back(knows, [&](Inputs& in, Report& r) { return knows_cmd(o, in, r); });

  auto* believes = model_opts(common(app.add_subcommand("believes", "B_i^F(E)")));
  believes->add_option("--agent", o.agent)->required();
  believes->add_option("--event", o.event)->required();
  believes->add_option("--given", o.given, "Conditioning event F (default Omega)");
  commands.emplace_back(believes, [&](Inputs& in, Report& r) { return believes_cmd(o, in, r); });

  auto* ck = model_opts(common(app.add_subcommand("common", "Common knowledge of E")));
  ck->add_option("--agents", o.agents, "Comma-separated group (default all)");
  ck->add_option("--event", o.event)->required();
  commands.emplace_back(ck, [&](Inputs& in, Report& r) { return common_cmd(o, in, r); });

  auto* pub = model_opts(common(app.add_subcommand("public", "Public events")));
  pub->add_option("--agents", o.agents, "Comma-separated group (default all)");
  pub->add_option("--event", o.event, "Event to test (default: every named event)");
  commands.emplace_back(pub, [&](Inputs& in, Report& r) { return public_cmd(o, in, r); });

  auto* alt = common(app.add_subcommand("alternation-table", "Synthetic alternation truth table"));
  commands.emplace_back(alt, [&](Inputs& in, Report& r) { return alternation_cmd(o, in, r); });

  auto* sim = common(app.add_subcommand("simulate", "Monte Carlo of bluffing provers"));
  sim->add_option("--k-max", o.k_max)->check(CLI::Range(2, 1 << 20));
  sim->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  sim->add_option("--bluff", o.bluff, "Per-round bluff success (default 2/3)");
  sim->add_option("--p-informed", o.p_informed, "Probability the prover is informed");
  sim->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  sim->add_option("--config", o.config_path, "Simulation document (JSON)");
  commands.emplace_back(sim, [&](Inputs& in, Report& r) { return simulate_cmd(o, in, r, *sim); });

  auto game_opts = [&](CLI::App* sub) {
    sub->add_option("--game", o.game_path, "Game document (JSON)")->required();
    return common(sub);
  };
  auto* eqs = game_opts(app.add_subcommand("equilibria", "Pure Nash equilibria"));
  commands.emplace_back(eqs, [&](Inputs& in, Report& r) { return equilibria_cmd(o, in, r); });
  auto* solv = game_opts(app.add_subcommand("solvable", "Solvability via interchangeability"));
  commands.emplace_back(solv, [&](Inputs& in, Report& r) { return solvable_cmd(o, in, r); });
  auto* subs = game_opts(app.add_subcommand("subsolutions", "Maximal interchangeable subsets"));
  commands.emplace_back(subs, [&](Inputs& in, Report& r) { return subsolutions_cmd(o, in, r); });
  auto* sym = game_opts(app.add_subcommand("symmetry", "Permutation symmetry"));
  sym->add_option("--perm", o.perm,
                  R"(Permutation as JSON, e.g. {"players":[1,0],"strategies":[[0,1],[0,1]]})");
  commands.emplace_back(sym, [&](Inputs& in, Report& r) { return symmetry_cmd(o, in, r); });
  auto* fz = game_opts(app.add_subcommand("fuzzy", "Linguistic fuzzy equilibria"));
  fz->add_option("--interpretation", o.interpretation)
      ->check(CLI::IsMember({"literal", "strict"}));
  commands.emplace_back(fz, [&](Inputs& in, Report& r) { return fuzzy_cmd(o, in, r); });

  auto* walk = common(app.add_subcommand("walkthrough", "Worked Alice/Bob session"));
  walk->add_option("--rounds", o.rounds)->check(CLI::Range(2, 1000));
  commands.emplace_back(walk, [&](Inputs& in, Report& r) { return walkthrough_cmd(o, in, r); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      Inputs inputs;
      Report report;
      std::string echo = "zkgame";
      for (const auto& a : args) echo += " " + a;
      report.command = echo;
      const int code = handler(inputs, report);
      report.input_digest = inputs.digest();
      out << io::render(report, o.format == "csv" ? io::Format::kCsv : io::Format::kTable);
      return code;
    }
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace zkg::cli
