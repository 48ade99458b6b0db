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

#include "zkg/io/spec.hpp"

#include <cstdint>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

#include "zkg/error.hpp"

namespace zkg::io {

using nlohmann::json;

std::string_view to_string(SpecKind kind) {
  switch (kind) {
    case SpecKind::kModel: return "model";
    case SpecKind::kGame: return "game";
    case SpecKind::kFuzzy: return "fuzzy";
    case SpecKind::kSimulation: return "simulation";
  }
  return "?";
}

namespace {

class Diagnostics {
 public:
  void add(const std::string& path, const std::string& message) {
    messages_.push_back(path + ": " + message);
  }
  bool empty() const { return messages_.empty(); }
  [[noreturn]] void raise(SpecKind kind) const {
    std::ostringstream os;
    os << "invalid " << to_string(kind) << " document";
    for (const auto& m : messages_) os << "\n  " << m;
    throw SpecError(os.str());
  }

 private:
  std::vector<std::string> messages_;
};

std::string at(const std::string& path, std::string_view key) {
  return path + "." + std::string(key);
}
std::string at(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<std::string_view> allowed, Diagnostics& diag) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) diag.add(at(path, key), "unknown key");
  }
}

// Looks up a required member; records a diagnostic and returns null if absent.
const json* require(const json& obj, std::string_view key, const std::string& path,
                    Diagnostics& diag) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) {
    diag.add(at(path, key), "required key missing");
    return nullptr;
  }
  return &*it;
}

std::optional<std::string> read_string(const json& j, const std::string& path,
                                       Diagnostics& diag) {
  if (!j.is_string()) {
    diag.add(path, "expected a string");
    return std::nullopt;
  }
  return j.get<std::string>();
}

std::vector<std::string> read_string_list(const json& j, const std::string& path,
                                          Diagnostics& diag) {
  std::vector<std::string> out;
  if (!j.is_array()) {
    diag.add(path, "expected an array of strings");
    return out;
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (auto s = read_string(j[i], at(path, i), diag)) out.push_back(*s);
  }
  return out;
}

std::vector<std::vector<std::string>> read_string_grid(const json& j, const std::string& path,
                                                       Diagnostics& diag) {
  std::vector<std::vector<std::string>> out;
  if (!j.is_array()) {
    diag.add(path, "expected an array of arrays");
    return out;
  }
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_string_list(j[i], at(path, i), diag));
  return out;
}

// A JSON number or a "p/q" / decimal string, read exactly.
std::optional<Rational> read_rational(const json& j, const std::string& path, Diagnostics& diag) {
  try {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_number_float()) return parse_rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    diag.add(path, e.what());
    return std::nullopt;
  }
  diag.add(path, "expected a number or a rational string");
  return std::nullopt;
}

void check_unique(const std::vector<std::string>& names, const std::string& path,
                  const char* what, Diagnostics& diag) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!seen.insert(names[i]).second) {
      diag.add(at(path, i), std::string("duplicate ") + what + " '" + names[i] + "'");
    }
  }
}

// ---------------------------------------------------------------------------

ModelSpec parse_model(const json& root, Diagnostics& diag) {
  ModelSpec spec;
  const std::string path = "$";
  reject_unknown_keys(root, path, {"states", "agents", "events", "outcomes"}, diag);

  if (const json* states = require(root, "states", path, diag)) {
    spec.states = read_string_list(*states, at(path, "states"), diag);
    if (states->is_array() && states->empty()) diag.add(at(path, "states"), "non-empty Ω required");
    check_unique(spec.states, at(path, "states"), "state", diag);
  }
  const std::set<std::string> known(spec.states.begin(), spec.states.end());
  auto check_state = [&](const std::string& s, const std::string& where) {
    if (!known.contains(s)) diag.add(where, "unknown state '" + s + "'");
  };

  if (const json* agents = require(root, "agents", path, diag)) {
    const std::string apath = at(path, "agents");
    if (!agents->is_array() || agents->empty()) {
      diag.add(apath, "expected a non-empty array of agents");
    } else {
      for (std::size_t i = 0; i < agents->size(); ++i) {
        const json& a = (*agents)[i];
        const std::string p = at(apath, i);
        if (!a.is_object()) {
          diag.add(p, "expected an object");
          continue;
        }
        reject_unknown_keys(a, p, {"id", "partition", "frame"}, diag);
        AgentSpec agent;
        if (const json* id = require(a, "id", p, diag)) {
          if (id->is_number_integer()) {
            agent.id = id->dump();
          } else if (auto s = read_string(*id, at(p, "id"), diag)) {
            agent.id = *s;
          }
        }
        if (const json* part = require(a, "partition", p, diag)) {
          agent.partition = read_string_grid(*part, at(p, "partition"), diag);
          for (std::size_t c = 0; c < agent.partition.size(); ++c) {
            for (std::size_t k = 0; k < agent.partition[c].size(); ++k) {
              check_state(agent.partition[c][k], at(at(at(p, "partition"), c), k));
            }
          }
        }
        if (auto it = a.find("frame"); it != a.end()) {
          const std::string fp = at(p, "frame");
          if (!it->is_object()) {
            diag.add(fp, "expected an object");
          } else {
            reject_unknown_keys(*it, fp, {"pairs"}, diag);
            std::vector<std::pair<std::string, std::string>> pairs;
            if (const json* pj = require(*it, "pairs", fp, diag)) {
              const auto grid = read_string_grid(*pj, at(fp, "pairs"), diag);
              for (std::size_t k = 0; k < grid.size(); ++k) {
                if (grid[k].size() != 2) {
                  diag.add(at(at(fp, "pairs"), k), "expected a [from, to] pair");
                  continue;
                }
                check_state(grid[k][0], at(at(at(fp, "pairs"), k), 0));
                check_state(grid[k][1], at(at(at(fp, "pairs"), k), 1));
                pairs.emplace_back(grid[k][0], grid[k][1]);
              }
            }
            agent.frame = std::move(pairs);
          }
        }
        spec.agents.push_back(std::move(agent));
      }
      std::vector<std::string> ids;
      for (const auto& a : spec.agents) ids.push_back(a.id);
      check_unique(ids, apath, "agent", diag);
    }
  }

  if (auto it = root.find("events"); it != root.end()) {
    const std::string epath = at(path, "events");
    if (!it->is_object()) {
      diag.add(epath, "expected an object of named events");
    } else {
      for (const auto& [name, members] : it->items()) {
        auto list = read_string_list(members, at(epath, name), diag);
        for (std::size_t k = 0; k < list.size(); ++k) check_state(list[k], at(at(epath, name), k));
        spec.events.emplace(name, std::move(list));
      }
    }
  }

  if (auto it = root.find("outcomes"); it != root.end()) {
    const std::string opath = at(path, "outcomes");
    if (!it->is_object()) {
      diag.add(opath, "expected an object mapping states to labels");
    } else {
      std::map<std::string, std::string> outcomes;
      for (const auto& [state, label] : it->items()) {
        check_state(state, at(opath, state));
        if (auto s = read_string(label, at(opath, state), diag)) outcomes.emplace(state, *s);
      }
      spec.outcomes = std::move(outcomes);
    }
  }
  return spec;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

GameSpec parse_game(const json& root, Diagnostics& diag) {
  GameSpec spec;
  const std::string path = "$";
  reject_unknown_keys(root, path, {"players", "strategies", "payoffs"}, diag);
  if (const json* players = require(root, "players", path, diag)) {
    spec.players = read_string_list(*players, at(path, "players"), diag);
    if (players->is_array() && players->empty()) diag.add(at(path, "players"), "at least one player required");
    check_unique(spec.players, at(path, "players"), "player", diag);
  }
  if (const json* strategies = require(root, "strategies", path, diag)) {
    spec.strategies = read_string_grid(*strategies, at(path, "strategies"), diag);
    if (spec.strategies.size() != spec.players.size()) {
      diag.add(at(path, "strategies"), "expected one strategy list per player");
    }
    for (std::size_t i = 0; i < spec.strategies.size(); ++i) {
      if (spec.strategies[i].empty()) diag.add(at(at(path, "strategies"), i), "empty strategy set");
      check_unique(spec.strategies[i], at(at(path, "strategies"), i), "strategy", diag);
    }
  }
  if (const json* payoffs = require(root, "payoffs", path, diag)) {
    const std::string ppath = at(path, "payoffs");
    if (!payoffs->is_object()) {
      diag.add(ppath, "expected an object keyed by profiles");
    } else {
      for (const auto& [key, value] : payoffs->items()) {
        const std::string kp = at(ppath, key);
        const auto labels = split(key, ',');
        if (labels.size() != spec.players.size() || spec.strategies.size() != spec.players.size()) {
          diag.add(kp, "profile key '" + key + "' does not name one strategy per player");
          continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < labels.size(); ++i) {
          const auto& s = spec.strategies[i];
          if (std::find(s.begin(), s.end(), labels[i]) == s.end()) {
            diag.add(kp, "profile key '" + key + "' names unknown strategy '" + labels[i] +
                             "' for player '" + spec.players[i] + "'");
            ok = false;
          }
        }
        if (!value.is_array() || value.size() != spec.players.size()) {
          diag.add(kp, "expected one payoff per player");
          continue;
        }
        std::vector<Rational> row;
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (auto r = read_rational(value[i], at(kp, i), diag)) {
            row.push_back(*r);
          } else {
            ok = false;
          }
        }
        if (ok) spec.payoffs.emplace(key, std::move(row));
      }
      // Every profile must be present.
      if (diag.empty()) {
        std::size_t expected = 1;
        for (const auto& s : spec.strategies) expected *= s.size();
        if (expected > equilibrium::kMaxProfiles) {
          diag.add(at(path, "strategies"), "more than 10^6 profiles");
        } else if (spec.payoffs.size() != expected) {
          std::vector<std::size_t> cursor(spec.strategies.size(), 0);
          for (std::size_t n = 0; n < expected; ++n) {
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < cursor.size(); ++i) labels.push_back(spec.strategies[i][cursor[i]]);
            const std::string key = join(labels, ',');
            if (!spec.payoffs.contains(key)) diag.add(at(ppath, key), "missing payoff for profile");
            for (std::size_t i = cursor.size(); i-- > 0;) {
              if (++cursor[i] < spec.strategies[i].size()) break;
              cursor[i] = 0;
            }
          }
        }
      }
    }
  }
  return spec;
}

FuzzySpec parse_fuzzy(const json& root, Diagnostics& diag) {
  FuzzySpec spec;
  const std::string path = "$";
  reject_unknown_keys(root, path, {"scale", "v", "phi", "strategies"}, diag);
  if (const json* scale = require(root, "scale", path, diag)) {
    spec.scale = read_string_list(*scale, at(path, "scale"), diag);
    if (scale->is_array() && spec.scale.size() < 2) diag.add(at(path, "scale"), "at least two labels required");
    check_unique(spec.scale, at(path, "scale"), "label", diag);
  }
  const std::set<std::string> known(spec.scale.begin(), spec.scale.end());
  auto read_grid = [&](std::string_view key, std::vector<std::vector<std::string>>& grid) {
    const json* g = require(root, key, path, diag);
    if (!g) return;
    const std::string gp = at(path, key);
    grid = read_string_grid(*g, gp, diag);
    if (grid.empty() || grid.front().empty()) diag.add(gp, "grid must be non-empty");
    for (std::size_t r = 0; r < grid.size(); ++r) {
      if (!grid.empty() && grid[r].size() != grid.front().size()) diag.add(at(gp, r), "ragged row");
      for (std::size_t c = 0; c < grid[r].size(); ++c) {
        if (!known.contains(grid[r][c])) {
          diag.add(at(at(gp, r), c), "unknown label '" + grid[r][c] + "'");
        }
      }
    }
  };
  read_grid("v", spec.v);
  read_grid("phi", spec.phi);
  if (spec.v.size() != spec.phi.size() ||
      (!spec.v.empty() && spec.v.front().size() != spec.phi.front().size())) {
    diag.add(at(path, "phi"), "shape differs from v");
  }
  if (auto it = root.find("strategies"); it != root.end()) {
    const std::string sp = at(path, "strategies");
    auto labels = read_string_grid(*it, sp, diag);
    if (labels.size() != 2) {
      diag.add(sp, "expected two label lists");
    } else if (labels[0].size() != spec.v.size() ||
               (!spec.v.empty() && labels[1].size() != spec.v.front().size())) {
      diag.add(sp, "label counts must match the grid shape");
    }
    spec.strategies = std::move(labels);
  }
  return spec;
}

SimulationSpec parse_simulation(const json& root, Diagnostics& diag) {
  SimulationSpec spec;
  const std::string path = "$";
  reject_unknown_keys(root, path, {"p_informed", "bluff_success", "k_max", "trials", "seed", "threads"},
                      diag);
  auto& c = spec.config;
  auto read_probability = [&](std::string_view key, double& out) {
    auto it = root.find(std::string(key));
    if (it == root.end()) return;
    if (auto r = read_rational(*it, at(path, key), diag)) {
      if (*r < 0 || *r > 1) {
        diag.add(at(path, key), "probability outside [0,1]");
      } else {
        out = to_double(*r);
      }
    }
  };
  read_probability("p_informed", c.p_informed);
  read_probability("bluff_success", c.bluff_success);
  auto read_int = [&](std::string_view key, auto& out, long long min) {
    auto it = root.find(std::string(key));
    if (it == root.end()) return;
    if (!it->is_number_integer() || it->get<long long>() < min) {
      diag.add(at(path, key), "expected an integer >= " + std::to_string(min));
      return;
    }
    out = static_cast<std::remove_reference_t<decltype(out)>>(it->get<long long>());
  };
  read_int("k_max", c.k_max, 2);
  read_int("trials", c.trials, 1);
  read_int("threads", c.threads, 0);
  if (auto it = root.find("seed"); it != root.end()) {
    if (!it->is_number_unsigned()) {
      diag.add(at(path, "seed"), "expected a non-negative integer");
    } else {
      c.seed = it->get<std::uint64_t>();
    }
  }
  return spec;
}

json rational_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const Integer n = boost::multiprecision::numerator(r);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
      return json(n.convert_to<std::int64_t>());
    }
  }
  return json(zkg::to_string(r));
}

}  // namespace

SpecDocument parse_spec(std::string_view bytes, SpecKind kind) {
  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  Diagnostics diag;
  if (!root.is_object()) {
    diag.add("$", "expected a JSON object");
    diag.raise(kind);
  }
  SpecDocument doc{kind, {}};
  switch (kind) {
    case SpecKind::kModel: doc.body = parse_model(root, diag); break;
    case SpecKind::kGame: doc.body = parse_game(root, diag); break;
    case SpecKind::kFuzzy: doc.body = parse_fuzzy(root, diag); break;
    case SpecKind::kSimulation: doc.body = parse_simulation(root, diag); break;
  }
  if (!diag.empty()) diag.raise(kind);
  return doc;
}

std::string emit_spec(const SpecDocument& doc) {
  json out = json::object();
  if (const auto* m = std::get_if<ModelSpec>(&doc.body)) {
    out["states"] = m->states;
    json agents = json::array();
    for (const auto& a : m->agents) {
      json aj = {{"id", a.id}, {"partition", a.partition}};
      if (a.frame) {
        json pairs = json::array();
        for (const auto& [from, to] : *a.frame) pairs.push_back({from, to});
        aj["frame"] = {{"pairs", pairs}};
      }
      agents.push_back(std::move(aj));
    }
    out["agents"] = std::move(agents);
    out["events"] = m->events;
    if (m->outcomes) out["outcomes"] = *m->outcomes;
  } else if (const auto* g = std::get_if<GameSpec>(&doc.body)) {
    out["players"] = g->players;
    out["strategies"] = g->strategies;
    json payoffs = json::object();
    for (const auto& [key, row] : g->payoffs) {
      json values = json::array();
      for (const auto& r : row) values.push_back(rational_json(r));
      payoffs[key] = std::move(values);
    }
    out["payoffs"] = std::move(payoffs);
  } else if (const auto* f = std::get_if<FuzzySpec>(&doc.body)) {
    out["scale"] = f->scale;
    out["v"] = f->v;
    out["phi"] = f->phi;
    if (f->strategies) out["strategies"] = *f->strategies;
  } else {
    const auto& c = std::get<SimulationSpec>(doc.body).config;
    out["p_informed"] = c.p_informed;
    out["bluff_success"] = c.bluff_success;
    out["k_max"] = c.k_max;
    out["trials"] = c.trials;
    out["seed"] = c.seed;
    out["threads"] = c.threads;
  }
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

epistemic::EpistemicModel build_model(const ModelSpec& spec) {
  epistemic::StateSpace space(spec.states);
  const std::size_t n = space.size();
  std::vector<std::string> agents;
  std::vector<epistemic::Partition> partitions;
  std::vector<std::optional<epistemic::DoxasticFrame>> frames;
  for (const auto& a : spec.agents) {
    agents.push_back(a.id);
    std::vector<epistemic::Event> cells;
    for (const auto& c : a.partition) cells.push_back(space.event(c));
    try {
      partitions.emplace_back(n, std::move(cells));
    } catch (const DomainError& e) {
      throw DomainError("agent '" + a.id + "': " + e.what());
    }
    if (a.frame) {
      std::vector<epistemic::DoxasticFrame::Pair> pairs;
      for (const auto& [from, to] : *a.frame) pairs.emplace_back(space.index(from), space.index(to));
      frames.emplace_back(epistemic::DoxasticFrame(n, std::move(pairs)));
    } else {
      frames.emplace_back(std::nullopt);
    }
  }
  std::map<std::string, epistemic::Event> events;
  for (const auto& [name, members] : spec.events) events.emplace(name, space.event(members));
  std::optional<std::map<std::size_t, std::string>> outcomes;
  if (spec.outcomes) {
    outcomes.emplace();
    for (const auto& [state, label] : *spec.outcomes) outcomes->emplace(space.index(state), label);
  }
  return epistemic::EpistemicModel(std::move(space), std::move(agents), std::move(partitions),
                                   std::move(frames), std::move(events), std::move(outcomes));
}

equilibrium::NormalFormGame build_game(const GameSpec& spec) {
  return equilibrium::NormalFormGame::from_function(
      spec.players, spec.strategies, [&](const equilibrium::Profile& s) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < s.size(); ++i) labels.push_back(spec.strategies[i][s[i]]);
        const auto key = join(labels, ',');
        auto it = spec.payoffs.find(key);
        if (it == spec.payoffs.end()) throw DomainError("missing payoff for profile '" + key + "'");
        return it->second;
      });
}

fuzzy::FuzzyGame build_fuzzy(const FuzzySpec& spec) {
  fuzzy::FuzzyGame game(fuzzy::LinguisticScale(spec.scale), spec.v, spec.phi);
  if (spec.strategies) game.set_strategy_labels((*spec.strategies)[0], (*spec.strategies)[1]);
  return game;
}

}  // namespace zkg::io
