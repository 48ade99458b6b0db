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

#include "zkg/signaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "zkg/error.hpp"

namespace zkg::signaling {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << what << " must lie in [0,1], got " << p;
    throw DomainError(os.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Threshold

Rational zk_threshold(int k) {
  if (k < 2) {
    throw DomainError("threshold not a probability below k=2 (got k=" + std::to_string(k) +
                      ")");
  }
  const auto uk = static_cast<unsigned>(k);
  const Integer two = boost::multiprecision::pow(Integer(2), uk + 1);
  const Integer three = boost::multiprecision::pow(Integer(3), uk);
  return Rational(1) - Rational(two, three);
}

bool zk_limit_satisfied(int k, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0,1)");
  return zk_threshold(k) >= Rational(1) - rational_from_double(epsilon);
}

int rounds_required(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0,1)");
  int k = 2;
  while (!zk_limit_satisfied(k, epsilon)) ++k;
  return k;
}

// ---------------------------------------------------------------------------
// Session

SignalingSession::SignalingSession(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw DomainError("epsilon must lie in (0,0.5)");
}

void SignalingSession::append(const RoundRecord& round) {
  if (round.round_index < 1) throw DomainError("round indices start at 1");
  if (!history_.empty() && round.round_index <= history_.back().round_index) {
    throw DomainError("round indices must strictly increase");
  }
  history_.push_back(round);
}

void SignalingSession::set_q_i0(double p) { require_probability(p, "q_I0"); q_i0_ = p; }
void SignalingSession::set_q_u0(double p) { require_probability(p, "q_U0"); q_u0_ = p; }
void SignalingSession::set_p_u0(double p) { require_probability(p, "P_U0"); p_u0_ = p; }
void SignalingSession::set_p_i0(double p) { require_probability(p, "P_I0"); p_i0_ = p; }
void SignalingSession::set_doxastic_value(double p) {
  require_probability(p, "doxastic value");
  doxastic_value_ = p;
}

void SignalingSession::set_events(std::string evidence, std::string conditioning) {
  evidence_event_ = std::move(evidence);
  conditioning_event_ = std::move(conditioning);
}

void SignalingSession::promote() {
  validity_ = epistemic::Validity::kEpistemic;
  ++promotions_;
}

// ---------------------------------------------------------------------------
// Case functions

std::string describe(const Mode& mode) {
  if (const auto* k = std::get_if<KnowledgeMode>(&mode)) return "K(" + k->event + ")";
  const auto& b = std::get<BeliefMode>(mode);
  return "B^" + b.given + "(" + b.event + ")";
}

Mode lambda_transition(double h, SignalingSession& session) {
  if (!(h >= 0.0 && h <= 1.0)) {
    std::ostringstream os;
    os << "h must lie in [0,1], got " << h;
    throw DomainError(os.str());
  }
  if (h >= 1.0 - session.epsilon()) {
    session.promote();
    return KnowledgeMode{session.evidence_event()};
  }
  return BeliefMode{session.conditioning_event(), session.evidence_event()};
}

double q_u_probability(const SignalingSession& session, bool belief_holds) {
  return belief_holds ? session.doxastic_value() : 0.0;
}

double h_k_at_P0(const SignalingSession& session, bool fx_matches_recall) {
  if (session.history().empty()) throw DomainError("h_k(P0) needs at least one round");
  return fx_matches_recall ? 1.0 : session.doxastic_value();
}

Verification verify_at_V0(const SignalingSession& session, int k) {
  Rational threshold = zk_threshold(k);
  if (session.q_u0() == 0.0) return threshold;
  return Rejection{};
}

// ---------------------------------------------------------------------------
// λ matrices

LambdaVector lambda_p() { return {Orientation::kRow, {StageState::kP0, StageState::kV0}}; }
LambdaVector lambda_v() { return {Orientation::kColumn, {StageState::kV0, StageState::kP0}}; }

namespace {

void require_well_formed(const LambdaVector& v) {
  const auto& [a, b] = v.entries;
  const bool both = (a == StageState::kP0 && b == StageState::kV0) ||
                    (a == StageState::kV0 && b == StageState::kP0);
  if (!both) throw DomainError("λ vector must hold P0 and V0 exactly once");
}

StageState opposite(StageState s) {
  switch (s) {
    case StageState::kP0: return StageState::kV0;
    case StageState::kV0: return StageState::kP0;
    case StageState::kS0: break;
  }
  throw DomainError("S0 has no λ complement");
}

}  // namespace

LambdaMatrix lambda_product(const LambdaVector& first, const LambdaVector& second) {
  require_well_formed(first);
  require_well_formed(second);
  if (first.orientation == second.orientation) {
    throw DomainError("λ product needs one row form and one column form");
  }
  LambdaMatrix m;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m.entries[i][j] = {first.entries[i], second.entries[j]};
    }
  }
  return m;
}

LambdaMatrix d1d2() { return lambda_product(lambda_p(), lambda_v()); }
LambdaMatrix d2d1() { return lambda_product(lambda_v(), lambda_p()); }

LambdaMatrix complement(const LambdaMatrix& m) {
  if (m != d1d2() && m != d2d1()) {
    throw DomainError("complement is defined only for the λ^Pλ^V and λ^Vλ^P products");
  }
  LambdaMatrix out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      out.entries[i][j] = {opposite(m.entries[i][j].first), opposite(m.entries[i][j].second)};
    }
  }
  return out;
}

LambdaVector invert_strategy(const LambdaVector& s) {
  require_well_formed(s);
  return {s.orientation == Orientation::kRow ? Orientation::kColumn : Orientation::kRow,
          {s.entries[1], s.entries[0]}};
}

double stage_probability(const StagePair& pair, EvidenceOrder order) {
  const auto [first, second] = pair;
  if (first == StageState::kS0 || second == StageState::kS0) {
    throw DomainError("stage pairs are drawn from {P0, V0}");
  }
  if (first == second) return 0.0;
  if (first == StageState::kV0 && order == EvidenceOrder::kProofFirst) return 0.5;
  if (first == StageState::kP0 && order == EvidenceOrder::kEvidenceFirst) return 0.5;
  throw DomainError("no P_U0 value for this pair under the given order");
}

// ---------------------------------------------------------------------------
// Stage inference

std::string_view to_string(Decision d) { return d == Decision::kD1 ? "d1" : "d2"; }

StageInference infer_stage(const SignalingSession& session) {
  if (session.history().empty()) throw DomainError("stage inference needs at least one round");
  const double pu = session.p_u0();
  const double pi = session.p_i0();
  if (pu == pi) {
    throw DomainError("ambiguous stage: P_U0 == P_I0, neither strict inequality holds");
  }
  StageInference out;
  std::ostringstream why;
  if (pu < pi) {
    out.decision = Decision::kD1;
    out.strategy = "f(P0): s in sigma";
    why << "P_U0 < P_I0 (" << pu << " < " << pi << ") given h_{k-1}|P0";
  } else {
    out.decision = Decision::kD2;
    out.strategy = "f(V0): t in tau";
    why << "P_I0 < P_U0 (" << pi << " < " << pu << ") given V0 and Theta(x)";
  }
  const int k = static_cast<int>(session.history().size());
  if (k >= 2) {
    const Rational h = zk_threshold(k);
    why << "; h_" << k << " = " << zkg::to_string(h) << " ~ " << to_double(h)
        << (zk_limit_satisfied(k, session.epsilon()) ? " (~1: knowledge)" : " (<1-eps: belief)");
  } else {
    why << "; h_" << k << " undefined below k=2";
  }
  out.rationale = why.str();
  return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo

void validate(const SimulationConfig& config) {
  require_probability(config.p_informed, "p_informed");
  require_probability(config.bluff_success, "bluff_success");
  if (config.k_max < 2) throw DomainError("k_max must be at least 2");
  if (config.trials < 1) throw DomainError("trials must be at least 1");
}

namespace {

struct TrialOutcome {
  bool informed = false;
  int survived = 0;  // consecutive rounds passed, capped at k_max
};

TrialOutcome run_trial(const SimulationConfig& config, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 engine(seq);
  auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

  TrialOutcome out;
  out.informed = uniform() < config.p_informed;
  if (out.informed) {
    out.survived = config.k_max;
    return out;
  }
  while (out.survived < config.k_max && uniform() < config.bluff_success) ++out.survived;
  return out;
}

}  // namespace

std::vector<SimulationRow> simulate(const SimulationConfig& config) {
  validate(config);
  const auto trials = static_cast<std::uint64_t>(config.trials);
  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(threads, trials)));

  // survivors[t][k]: uninformed provers in chunk t that passed at least k rounds.
  const auto width = static_cast<std::size_t>(config.k_max) + 1;
  std::vector<std::vector<std::int64_t>> survivors(threads, std::vector<std::int64_t>(width, 0));
  auto work = [&](unsigned chunk) {
    const std::uint64_t begin = trials * chunk / threads;
    const std::uint64_t end = trials * (chunk + 1) / threads;
    auto& counts = survivors[chunk];
    for (std::uint64_t t = begin; t < end; ++t) {
      const TrialOutcome o = run_trial(config, t);
      if (o.informed) continue;
      for (int k = 0; k <= o.survived; ++k) ++counts[static_cast<std::size_t>(k)];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned c = 0; c < threads; ++c) pool.emplace_back(work, c);
  }

  std::vector<std::int64_t> total(width, 0);
  for (const auto& counts : survivors) {
    for (std::size_t k = 0; k < width; ++k) total[k] += counts[k];
  }

  std::vector<SimulationRow> rows;
  for (int k = 2; k <= config.k_max; ++k) {
    SimulationRow row;
    row.k = k;
    row.theoretical_hk = zk_threshold(k);
    row.analytic_residual = std::pow(config.bluff_success, k);
    row.trials = config.trials;
    row.seed = config.seed;
    row.uninformed = total[0];
    row.undetected = total[static_cast<std::size_t>(k)];
    row.empirical_undetected =
        row.uninformed == 0 ? std::numeric_limits<double>::quiet_NaN()
                            : static_cast<double>(row.undetected) /
                                  static_cast<double>(row.uninformed);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace zkg::signaling
