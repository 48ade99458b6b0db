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

#include "zkg/io/walkthrough.hpp"

#include <random>
#include <sstream>

#include "zkg/alternation.hpp"
#include "zkg/error.hpp"

namespace zkg::io {

using alternation::StageState;
using signaling::EvidenceOrder;

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string tf(bool b) { return b ? "T" : "F"; }

std::string assignment_text(const alternation::PredicateAssignment& a) {
  return "(Sx=" + tf(a.sx) + ", Ex=" + tf(a.ex) + ", Fx=" + tf(a.fx) + ")";
}

StageState expected_stage(int round) {
  if (round == 1) return StageState::kS0;
  return round % 2 == 0 ? StageState::kP0 : StageState::kV0;
}

}  // namespace

WalkthroughResult run_walkthrough(const WalkthroughConfig& config) {
  if (config.rounds < 2) throw DomainError("walkthrough needs at least 2 rounds");
  if (!(config.bluff_success >= 0.0 && config.bluff_success <= 1.0)) {
    throw DomainError("bluff_success must lie in [0,1]");
  }
  WalkthroughResult result{.session = signaling::SignalingSession(config.epsilon)};
  auto& session = result.session;
  auto& log = result.log;

  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32), 0x77616c6bU};
  std::mt19937_64 engine(seq);
  auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

  result.bob_informed = uniform() < 0.5;
  session.set_q_i0(0.5);
  log.push_back("Bob moves first; Bob is " +
                std::string(result.bob_informed ? "informed" : "uninformed") +
                " (hidden from Alice). Alice's prior q_I0 = 0.5.");

  bool knowledge = false;
  std::optional<StageState> previous;
  for (int r = 1; r <= config.rounds; ++r) {
    const bool passed = result.bob_informed || uniform() < config.bluff_success;
    const StageState stage = passed ? expected_stage(r) : StageState::kS0;
    const auto assignment = alternation::stage_assignment(stage);
    const auto verdict = alternation::eval_alternation(assignment);
    session.append({r, passed, stage, assignment});

    WalkthroughRound round{session.history().back(), std::nullopt, std::nullopt};
    std::ostringstream line;
    line << "round " << r << ": Bob " << (passed ? "passes" : "fails") << ", "
         << assignment_text(assignment) << " -> " << alternation::to_string(stage)
         << " [lhs=" << tf(verdict.lhs) << " rhs=" << tf(verdict.rhs) << "]";
    log.push_back(line.str());

    if (!passed) {
      result.detected = true;
      session.set_q_u0(1.0);
      log.push_back("  REJECT: the move is not zero-knowledge signaling; Alice returns to S0 "
                    "and knows Bob is uninformed (q_U0 = 1).");
      result.rounds.push_back(std::move(round));
      break;
    }

    if (r >= 2) {
      const Rational h = signaling::zk_threshold(r);
      const double hd = to_double(h);
      session.set_doxastic_value(1.0 - hd);
      const auto mode = signaling::lambda_transition(hd, session);
      knowledge = std::holds_alternative<signaling::KnowledgeMode>(mode);
      round.h_k = h;
      round.mode = mode;
      log.push_back("  h_" + std::to_string(r) + " = " + to_string(h) + " ~ " + fmt(hd) +
                    "; lambda -> " + signaling::describe(mode) +
                    (knowledge ? " (Theta(x) -> Phi(x))" : ""));

      if (stage == StageState::kP0) {
        const double hp = signaling::h_k_at_P0(session, assignment.fx);
        log.push_back("  h_k(P0) = " + fmt(hp) + " (Fx " +
                      (assignment.fx ? "congruent to recall" : "not yet established") + ")");
      } else if (stage == StageState::kV0) {
        const double qu = knowledge ? 0.0 : signaling::q_u_probability(session, true);
        session.set_q_u0(qu);
        const auto v = signaling::verify_at_V0(session, r);
        log.push_back("  q_U = " + fmt(qu) + "; B^F(E, V0) = " +
                      (std::holds_alternative<Rational>(v)
                           ? to_string(std::get<Rational>(v))
                           : std::get<signaling::Rejection>(v).reason + " (Fx likely false)"));
      }
      if (previous && *previous != StageState::kS0) {
        const signaling::StagePair pair{*previous, stage};
        const auto order = pair.first == StageState::kV0 ? EvidenceOrder::kProofFirst
                                                          : EvidenceOrder::kEvidenceFirst;
        const double pu = signaling::stage_probability(pair, order);
        log.push_back("  P_U0(" + std::string(alternation::to_string(pair.first)) + "," +
                      std::string(alternation::to_string(pair.second)) + ", " +
                      (order == EvidenceOrder::kProofFirst ? "proof first" : "evidence first") +
                      ") = " + fmt(pu));
      }
    }
    previous = stage;
    result.rounds.push_back(std::move(round));
  }

  double qu = 1.0;
  if (!result.detected) qu = knowledge ? 0.0 : session.doxastic_value();
  session.set_q_u0(qu);
  session.set_p_u0(qu);
  session.set_p_i0(1.0 - qu);
  log.push_back("final: q_U0 = " + fmt(qu) + ", P_U0 = " + fmt(session.p_u0()) +
                ", P_I0 = " + fmt(session.p_i0()));
  try {
    result.inference = signaling::infer_stage(session);
    log.push_back("verdict: " + std::string(signaling::to_string(result.inference->decision)) +
                  " via " + result.inference->strategy + "; " + result.inference->rationale);
  } catch (const DomainError& e) {
    result.ambiguity = e.what();
    log.push_back(std::string("verdict: undecided; ") + e.what());
  }
  return result;
}

Report walkthrough_report(const WalkthroughResult& result) {
  Report report;
  report.notes = result.log;
  Table table;
  table.header = {"round", "passed", "sx", "ex", "fx", "stage", "h_k", "mode"};
  for (const auto& r : result.rounds) {
    const auto& a = r.record.assignment;
    table.rows.push_back({std::to_string(r.record.round_index), tf(r.record.prover_passed),
                          tf(a.sx), tf(a.ex), tf(a.fx),
                          std::string(alternation::to_string(r.record.stage_emitted)),
                          r.h_k ? to_string(*r.h_k) : "-",
                          r.mode ? signaling::describe(*r.mode) : "-"});
  }
  report.table = std::move(table);
  return report;
}

}  // namespace zkg::io
