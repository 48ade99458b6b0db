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

#include "zkg/alternation.hpp"

namespace zkg::alternation {

namespace {

constexpr bool implies(bool p, bool q) { return !p || q; }

}  // namespace

std::string_view to_string(StageState s) {
  switch (s) {
    case StageState::kS0: return "S0";
    case StageState::kP0: return "P0";
    case StageState::kV0: return "V0";
  }
  return "?";
}

AlternationVerdict eval_alternation(const PredicateAssignment& a) {
  const bool e_to_s = implies(a.ex, a.sx);
  const bool s_to_e = implies(a.sx, a.ex);
  AlternationVerdict v;
  v.antecedent = e_to_s || s_to_e;
  v.lhs = implies(e_to_s, a.fx);
  v.rhs = implies(a.fx, s_to_e);
  v.whole = implies(v.antecedent, v.lhs || v.rhs);
  return v;
}

std::optional<StageState> classify_state(const PredicateAssignment& a) {
  if (!a.sx) return std::nullopt;
  if (!a.ex && !a.fx) return StageState::kS0;
  if (a.ex && !a.fx) return StageState::kP0;
  if (!a.ex && a.fx) return StageState::kV0;
  return std::nullopt;
}

PredicateAssignment stage_assignment(StageState s) {
  switch (s) {
    case StageState::kS0: return {true, false, false};
    case StageState::kP0: return {true, true, false};
    case StageState::kV0: return {true, false, true};
  }
  return {};
}

std::array<BoundaryRow, 8> boundary_table() {
  std::array<BoundaryRow, 8> rows;
  std::size_t i = 0;
  for (bool sx : {true, false}) {
    for (bool ex : {true, false}) {
      for (bool fx : {true, false}) {
        const PredicateAssignment a{sx, ex, fx};
        rows[i++] = BoundaryRow{a, eval_alternation(a), classify_state(a)};
      }
    }
  }
  return rows;
}

}  // namespace zkg::alternation
