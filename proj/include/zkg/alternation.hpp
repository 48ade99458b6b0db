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

#ifndef ZKG_ALTERNATION_HPP_
#define ZKG_ALTERNATION_HPP_

// Synthetic alternation over (Sx, Ex, Fx):
//
//   [(Ex→Sx) ∨ (Sx→Ex)] → [(Ex→Sx)→Fx] ∨ [Fx→(Sx→Ex)]
//
// "lhs"/"rhs" name the two disjuncts of the consequent.

#include <array>
#include <optional>
#include <string_view>

namespace zkg::alternation {

struct PredicateAssignment {
  bool sx = false;  // subject's knowledge of x
  bool ex = false;  // encoded evidence of x
  bool fx = false;  // feasibility of x
  friend bool operator==(const PredicateAssignment&, const PredicateAssignment&) = default;
};

enum class StageState { kS0, kP0, kV0 };

std::string_view to_string(StageState s);

struct AlternationVerdict {
  bool antecedent = false;
  bool lhs = false;
  bool rhs = false;
  bool whole = false;
  friend bool operator==(const AlternationVerdict&, const AlternationVerdict&) = default;
};

AlternationVerdict eval_alternation(const PredicateAssignment& a);

// (T,F,F) → S0, (T,T,F) → P0, (T,F,T) → V0; nothing otherwise.
std::optional<StageState> classify_state(const PredicateAssignment& a);

// The assignment each stage is defined by.
PredicateAssignment stage_assignment(StageState s);

struct BoundaryRow {
  PredicateAssignment assignment;
  AlternationVerdict verdict;
  std::optional<StageState> stage;
};

// All eight assignments, Sx major, in T-before-F order.
std::array<BoundaryRow, 8> boundary_table();

}  // namespace zkg::alternation

#endif  // ZKG_ALTERNATION_HPP_
