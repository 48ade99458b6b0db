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

#ifndef ZKG_SIGNALING_HPP_
#define ZKG_SIGNALING_HPP_

// Zero-knowledge signaling between a prover (Bob) and a verifier (Alice):
// the round threshold h_k = 1 - 2^(k+1) 3^(-k), the λ transition between
// knowledge and belief modes, the stage case functions, the ordered
// (P0, V0) λ matrices, and a seeded Monte Carlo of bluffing provers.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zkg/alternation.hpp"
#include "zkg/epistemic.hpp"
#include "zkg/rational.hpp"

namespace zkg::signaling {

using alternation::PredicateAssignment;
using alternation::StageState;

inline constexpr double kDefaultEpsilon = 1e-3;

// Exact h_k. Throws DomainError for k < 2, where the expression is negative.
Rational zk_threshold(int k);

// h_k >= 1 - epsilon, compared exactly. epsilon must lie in (0, 1).
bool zk_limit_satisfied(int k, double epsilon);

// Smallest k >= 2 with zk_limit_satisfied(k, epsilon).
int rounds_required(double epsilon);

struct RoundRecord {
  int round_index = 1;
  bool prover_passed = false;
  StageState stage_emitted = StageState::kS0;
  PredicateAssignment assignment;
};

// Verifier-side record of one signaling exchange. Probabilities are checked
// on assignment; history indices must strictly increase.
class SignalingSession {
 public:
  explicit SignalingSession(double epsilon = kDefaultEpsilon);

  double epsilon() const { return epsilon_; }
  const std::vector<RoundRecord>& history() const { return history_; }
  void append(const RoundRecord& round);

  double q_i0() const { return q_i0_; }  // Alice's belief that Bob is uninformed
  double q_u0() const { return q_u0_; }  // probability that Bob is uninformed
  double p_u0() const { return p_u0_; }
  double p_i0() const { return p_i0_; }
  double doxastic_value() const { return doxastic_value_; }

  void set_q_i0(double p);
  void set_q_u0(double p);
  void set_p_u0(double p);
  void set_p_i0(double p);
  void set_doxastic_value(double p);

  // Names of the evidence event E and conditioning event F the modes refer to.
  const std::string& evidence_event() const { return evidence_event_; }
  const std::string& conditioning_event() const { return conditioning_event_; }
  void set_events(std::string evidence, std::string conditioning);

  // Θ until a knowledge-mode transition promotes the proposition to Φ.
  epistemic::Validity validity() const { return validity_; }
  int promotions() const { return promotions_; }
  void promote();

 private:
  double epsilon_;
  std::vector<RoundRecord> history_;
  double q_i0_ = 0.0;
  double q_u0_ = 0.0;
  double p_u0_ = 0.0;
  double p_i0_ = 0.0;
  double doxastic_value_ = 0.0;
  std::string evidence_event_ = "E";
  std::string conditioning_event_ = "F";
  epistemic::Validity validity_ = epistemic::Validity::kUniversal;
  int promotions_ = 0;
};

struct KnowledgeMode {
  std::string event;
  friend bool operator==(const KnowledgeMode&, const KnowledgeMode&) = default;
};
struct BeliefMode {
  std::string given;
  std::string event;
  friend bool operator==(const BeliefMode&, const BeliefMode&) = default;
};
using Mode = std::variant<KnowledgeMode, BeliefMode>;

std::string describe(const Mode& mode);

// K(E) when h >= 1 - epsilon (recording the Θ→Φ promotion on the session),
// B^F(E) otherwise. Throws DomainError for h outside [0, 1].
Mode lambda_transition(double h, SignalingSession& session);

// q_U: the session's doxastic weight when the belief meets the agent's cell,
// 0 when Bob is taken to be perfectly informed.
double q_u_probability(const SignalingSession& session, bool belief_holds);

// h_k(P0): 1 when Fx is congruent to recall, else the current doxastic value.
// Throws DomainError on an empty history.
double h_k_at_P0(const SignalingSession& session, bool fx_matches_recall);

struct Rejection {
  std::string reason = "¬Fx";
  friend bool operator==(const Rejection&, const Rejection&) = default;
};
using Verification = std::variant<Rational, Rejection>;

// B^F(E, V0): h_k when q_U0 = 0, otherwise Fx is regarded as likely false.
Verification verify_at_V0(const SignalingSession& session, int k);

enum class Orientation { kRow, kColumn };

// A λ strategy: both stage symbols, as a row or a column.
struct LambdaVector {
  Orientation orientation = Orientation::kRow;
  std::array<StageState, 2> entries{StageState::kP0, StageState::kV0};
  friend bool operator==(const LambdaVector&, const LambdaVector&) = default;
};

LambdaVector lambda_p();  // [P0 V0]
LambdaVector lambda_v();  // [V0; P0]

using StagePair = std::pair<StageState, StageState>;

struct LambdaMatrix {
  std::array<std::array<StagePair, 2>, 2> entries;
  const StagePair& operator()(std::size_t row, std::size_t col) const {
    return entries[row][col];
  }
  friend bool operator==(const LambdaMatrix&, const LambdaMatrix&) = default;
};

// Outer product of ordered pairs: entry (i, j) = (first[i], second[j]).
// One operand must be a row and the other a column.
LambdaMatrix lambda_product(const LambdaVector& first, const LambdaVector& second);

LambdaMatrix d1d2();  // λ^P λ^V
LambdaMatrix d2d1();  // λ^V λ^P

// Maps d1d2 <-> d2d1 by exchanging P0 and V0 in every entry. Throws
// DomainError for any other matrix.
LambdaMatrix complement(const LambdaMatrix& m);

// Row <-> column with the entry order reversed: [P0 V0] <-> [V0; P0].
LambdaVector invert_strategy(const LambdaVector& s);

enum class EvidenceOrder { kEvidenceFirst, kProofFirst };

// P_U0 for an ordered stage pair: 0 for matched pairs, 0.5 for (V0, P0) when
// proof precedes evidence and for (P0, V0) when evidence precedes proof.
// Other combinations have no value and throw DomainError.
double stage_probability(const StagePair& pair, EvidenceOrder order);

enum class Decision { kD1, kD2 };

std::string_view to_string(Decision d);

struct StageInference {
  Decision decision = Decision::kD1;
  std::string strategy;   // f(P0): s ∈ σ  or  f(V0): t ∈ τ
  std::string rationale;  // which inequality fired and the final h_k check
};

// d1 when P_U0 < P_I0, d2 when P_I0 < P_U0. Ties and empty histories throw
// DomainError.
StageInference infer_stage(const SignalingSession& session);

struct SimulationConfig {
  double p_informed = 0.0;
  double bluff_success = 2.0 / 3.0;
  int k_max = 8;
  std::int64_t trials = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Throws DomainError describing the first invalid field.
void validate(const SimulationConfig& config);

struct SimulationRow {
  int k = 2;
  Rational theoretical_hk;
  double analytic_residual = 0.0;    // bluff_success^k
  double empirical_undetected = 0.0; // NaN when no uninformed prover was drawn
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t uninformed = 0;
  std::int64_t undetected = 0;
  friend bool operator==(const SimulationRow&, const SimulationRow&) = default;
};

// One row per k in [2, k_max]. Trial t draws from a generator seeded only by
// (seed, t), so the report does not depend on the thread count.
std::vector<SimulationRow> simulate(const SimulationConfig& config);

}  // namespace zkg::signaling

#endif  // ZKG_SIGNALING_HPP_
