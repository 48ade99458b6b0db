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

#ifndef ZKG_IO_SPEC_HPP_
#define ZKG_IO_SPEC_HPP_

// JSON input documents: epistemic models, normal-form games, fuzzy games and
// simulation configs. Parsing validates structure and references and reports
// every problem with its JSON path; building the domain value is a separate
// step so malformed partitions can still be inspected.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zkg/epistemic.hpp"
#include "zkg/equilibrium.hpp"
#include "zkg/fuzzy.hpp"
#include "zkg/rational.hpp"
#include "zkg/signaling.hpp"

namespace zkg::io {

enum class SpecKind { kModel, kGame, kFuzzy, kSimulation };

std::string_view to_string(SpecKind kind);

struct AgentSpec {
  std::string id;
  std::vector<std::vector<std::string>> partition;
  std::optional<std::vector<std::pair<std::string, std::string>>> frame;
  friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

struct ModelSpec {
  std::vector<std::string> states;
  std::vector<AgentSpec> agents;
  std::map<std::string, std::vector<std::string>> events;
  std::optional<std::map<std::string, std::string>> outcomes;
  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

struct GameSpec {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;
  // Keyed by the comma-joined strategy labels, e.g. "C,D".
  std::map<std::string, std::vector<Rational>> payoffs;
  friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

struct FuzzySpec {
  std::vector<std::string> scale;
  std::vector<std::vector<std::string>> v;
  std::vector<std::vector<std::string>> phi;
  std::optional<std::vector<std::vector<std::string>>> strategies;
  friend bool operator==(const FuzzySpec&, const FuzzySpec&) = default;
};

struct SimulationSpec {
  signaling::SimulationConfig config;
  friend bool operator==(const SimulationSpec& a, const SimulationSpec& b) {
    return a.config.p_informed == b.config.p_informed &&
           a.config.bluff_success == b.config.bluff_success &&
           a.config.k_max == b.config.k_max && a.config.trials == b.config.trials &&
           a.config.seed == b.config.seed && a.config.threads == b.config.threads;
  }
};

using SpecBody = std::variant<ModelSpec, GameSpec, FuzzySpec, SimulationSpec>;

struct SpecDocument {
  SpecKind kind = SpecKind::kModel;
  SpecBody body;
  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

// Throws SpecError listing every diagnostic as "<json path>: <message>".
SpecDocument parse_spec(std::string_view bytes, SpecKind kind);

// Canonical JSON for a document; parse_spec(emit_spec(d), d.kind) == d.
std::string emit_spec(const SpecDocument& doc);

// Domain values. These throw DomainError for semantic problems such as a
// candidate partition that violates P1/P2.
epistemic::EpistemicModel build_model(const ModelSpec& spec);
equilibrium::NormalFormGame build_game(const GameSpec& spec);
fuzzy::FuzzyGame build_fuzzy(const FuzzySpec& spec);

}  // namespace zkg::io

#endif  // ZKG_IO_SPEC_HPP_
