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

#ifndef ZKG_IO_WALKTHROUGH_HPP_
#define ZKG_IO_WALKTHROUGH_HPP_

// The canonical Alice/Bob session: Bob (the prover) moves first, Alice
// classifies each of his moves into a stage, runs the λ transition on the
// round threshold, evaluates the stage case functions, and finally infers
// whether she is deciding from d1 or d2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zkg/io/report.hpp"
#include "zkg/signaling.hpp"

namespace zkg::io {

struct WalkthroughConfig {
  std::uint64_t seed = 0;
  int rounds = 20;
  double epsilon = signaling::kDefaultEpsilon;
  double bluff_success = 2.0 / 3.0;
};

struct WalkthroughRound {
  signaling::RoundRecord record;
  std::optional<Rational> h_k;
  std::optional<signaling::Mode> mode;
};

struct WalkthroughResult {
  bool bob_informed = false;
  bool detected = false;
  signaling::SignalingSession session;
  std::vector<WalkthroughRound> rounds{};
  std::optional<signaling::StageInference> inference{};
  std::string ambiguity{};  // set when infer_stage reported a tie
  std::vector<std::string> log{};
};

// Throws DomainError for rounds < 2 or an epsilon outside (0, 0.5).
WalkthroughResult run_walkthrough(const WalkthroughConfig& config);

Report walkthrough_report(const WalkthroughResult& result);

}  // namespace zkg::io

#endif  // ZKG_IO_WALKTHROUGH_HPP_
