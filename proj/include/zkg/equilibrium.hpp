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

#ifndef ZKG_EQUILIBRIUM_HPP_
#define ZKG_EQUILIBRIUM_HPP_

// Finite normal-form games with exact rational payoffs: Nash's pure
// equilibrium condition, interchangeability and solvability, sub-solutions
// with their factor sets, strong solutions, player/strategy permutations, and
// the epistemic (knowledge-of-actions) route to equilibrium.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zkg/epistemic.hpp"
#include "zkg/rational.hpp"

namespace zkg::equilibrium {

// One strategy index per player.
using Profile = std::vector<std::size_t>;

inline constexpr std::size_t kMaxProfiles = 1'000'000;
inline constexpr std::size_t kMaxSubSolutionSearch = 20;

class NormalFormGame {
 public:
  using PayoffFn = std::function<std::vector<Rational>(const Profile&)>;

  // payoffs[profile_index(s)][i] is player i's payoff at s. Throws DomainError
  // on empty strategy sets, ragged payoff rows or more than kMaxProfiles
  // profiles.
  NormalFormGame(std::vector<std::string> players,
                 std::vector<std::vector<std::string>> strategies,
                 std::vector<std::vector<Rational>> payoffs);

  static NormalFormGame from_function(std::vector<std::string> players,
                                      std::vector<std::vector<std::string>> strategies,
                                      const PayoffFn& payoff);

  std::size_t player_count() const { return players_.size(); }
  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::vector<std::string>>& strategies() const { return strategies_; }
  std::size_t strategy_count(std::size_t player) const { return strategies_.at(player).size(); }
  std::size_t profile_count() const { return payoffs_.size(); }

  // Mixed-radix index, last player fastest. Throws DomainError when out of range.
  std::size_t profile_index(const Profile& s) const;
  Profile profile_at(std::size_t index) const;
  std::vector<Profile> profiles() const;

  const std::vector<Rational>& payoffs(const Profile& s) const {
    return payoffs_[profile_index(s)];
  }

  // "(D,D)"
  std::string format(const Profile& s) const;

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<std::vector<Rational>> payoffs_;
};

Rational payoff(const NormalFormGame& game, const Profile& s, std::size_t player);

// (s; r_i): s with player i's strategy replaced by r.
Profile substitute(Profile s, std::size_t player, std::size_t strategy);

// Per player, a probability vector over that player's pure strategies.
using MixedProfile = std::vector<std::vector<Rational>>;

// Throws DomainError unless every vector is non-negative, sums to exactly 1
// and matches the player's strategy count.
void validate_mixed(const NormalFormGame& game, const MixedProfile& mixed);

MixedProfile point_mass(const NormalFormGame& game, const Profile& s);

// Multilinear extension of the payoff to the product distribution.
Rational expected_payoff(const NormalFormGame& game, const MixedProfile& mixed,
                         std::size_t player);

// No player gains from a unilateral pure deviation.
bool is_equilibrium(const NormalFormGame& game, const Profile& s);

// Same condition for a supplied mixed candidate: no pure deviation beats the
// candidate's expected payoff.
bool is_mixed_equilibrium(const NormalFormGame& game, const MixedProfile& mixed);

// All pure equilibria, in profile-index order.
std::vector<Profile> pure_equilibria(const NormalFormGame& game);

// Closed under swapping one player's component between any two members.
// Throws DomainError if a member is not an equilibrium.
bool is_interchangeable(const NormalFormGame& game, const std::vector<Profile>& set);

struct Solvability {
  bool solvable = false;
  std::vector<Profile> solution;  // the equilibrium set when solvable
};

Solvability is_solvable(const NormalFormGame& game);

struct SubSolution {
  std::vector<Profile> profiles;                      // profile-index order
  std::vector<std::vector<std::size_t>> factor_sets;  // per player, ascending
};

// Cartesian product of per-player factor sets, in profile-index order.
std::vector<Profile> product_of(const std::vector<std::vector<std::size_t>>& factor_sets);

// Maximal interchangeable subsets of the equilibrium set, ordered by their
// first profile. Throws DomainError when the equilibrium set exceeds
// kMaxSubSolutionSearch members.
std::vector<SubSolution> sub_solutions(const NormalFormGame& game);

// A non-empty interchangeable set of equilibria that also contains every
// payoff-equal unilateral deviation of its members.
bool is_strong_solution(const NormalFormGame& game, const std::vector<Profile>& candidate);

// Player i maps to player_map[i]; player i's strategy a maps to
// strategy_maps[i][a] of that player.
struct GamePermutation {
  std::vector<std::size_t> player_map;
  std::vector<std::vector<std::size_t>> strategy_maps;
};

GamePermutation identity_permutation(const NormalFormGame& game);

// Throws DomainError unless the maps are bijections compatible with the
// game's strategy counts.
void validate_permutation(const NormalFormGame& game, const GamePermutation& perm);

// The induced profile map χ.
Profile apply_permutation(const NormalFormGame& game, const GamePermutation& perm,
                          const Profile& s);

// P_{ψ(i)}(χ(s)) == P_i(s) for every profile and player.
bool check_symmetry(const NormalFormGame& game, const GamePermutation& perm);

// Fixed points of χ.
std::vector<Profile> symmetric_profiles(const NormalFormGame& game, const GamePermutation& perm);

// Player's payoffs replaced by scale * P + shift (scale > 0).
NormalFormGame affine_rescale(const NormalFormGame& game, std::size_t player,
                              const Rational& scale, const Rational& shift);

// strategy_map[i][w]: player i's pure strategy at state w.
using StrategyMap = std::vector<std::vector<std::size_t>>;

// A player's belief, per state, over the opponents' joint action. Opponent
// profiles list the other players' strategies in player order.
struct Conjecture {
  std::vector<std::map<Profile, Rational>> by_state;
};

// Point mass on the opponents' actual actions at every state.
std::vector<Conjecture> truthful_conjectures(const NormalFormGame& game,
                                             const StrategyMap& strategy_map);

// Game players correspond to model agents by position. At every state where
// each player's conjecture is a point mass on what the others actually play,
// the realised profile must be an equilibrium. Throws DomainError when
// strategies or conjectures are not constant on the player's cells.
bool check_epistemic_equilibrium(const epistemic::EpistemicModel& model,
                                 const NormalFormGame& game, const StrategyMap& strategy_map,
                                 const std::vector<Conjecture>& conjectures);

}  // namespace zkg::equilibrium

#endif  // ZKG_EQUILIBRIUM_HPP_
