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

#ifndef ZKG_TESTS_FIXTURES_HPP_
#define ZKG_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "zkg/epistemic.hpp"
#include "zkg/equilibrium.hpp"
#include "zkg/rational.hpp"

namespace zkg::testing {

inline equilibrium::NormalFormGame bimatrix(std::vector<std::string> rows,
                                            std::vector<std::string> cols,
                                            const std::vector<std::vector<std::pair<int, int>>>& cells) {
  std::vector<std::vector<Rational>> payoffs;
  for (const auto& row : cells) {
    for (const auto& [a, b] : row) payoffs.push_back({Rational(a), Rational(b)});
  }
  return equilibrium::NormalFormGame({"A", "B"}, {std::move(rows), std::move(cols)},
                                     std::move(payoffs));
}

inline equilibrium::NormalFormGame prisoners_dilemma() {
  return bimatrix({"C", "D"}, {"C", "D"}, {{{3, 3}, {0, 5}}, {{5, 0}, {1, 1}}});
}

inline equilibrium::NormalFormGame matching_pennies() {
  return bimatrix({"H", "T"}, {"H", "T"}, {{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}});
}

inline equilibrium::NormalFormGame coordination() {
  return bimatrix({"a", "b"}, {"a", "b"}, {{{1, 1}, {0, 0}}, {{0, 0}, {1, 1}}});
}

// Row player is indifferent between a and b against x.
inline equilibrium::NormalFormGame tied_rows() {
  return bimatrix({"a", "b"}, {"x", "y"}, {{{1, 1}, {0, 0}}, {{1, 0}, {0, 1}}});
}

// States 1..n named "1".."n".
inline epistemic::StateSpace numbered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return epistemic::StateSpace(names);
}

inline epistemic::Partition partition(const epistemic::StateSpace& space,
                                      const std::vector<std::vector<std::string>>& cells) {
  std::vector<epistemic::Event> events;
  for (const auto& c : cells) events.push_back(space.event(c));
  return epistemic::Partition(space.size(), events);
}

// Agent 1: {{1,2},{3},{4}}; agent 2: {{1},{2,3},{4}}.
inline epistemic::EpistemicModel four_state_model() {
  auto space = numbered(4);
  auto p1 = partition(space, {{"1", "2"}, {"3"}, {"4"}});
  auto p2 = partition(space, {{"1"}, {"2", "3"}, {"4"}});
  return epistemic::EpistemicModel(space, {"1", "2"}, {p1, p2});
}

}  // namespace zkg::testing

#endif  // ZKG_TESTS_FIXTURES_HPP_
