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

#include "zkg/equilibrium.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>

#include "zkg/error.hpp"

namespace zkg::equilibrium {

// ---------------------------------------------------------------------------
// NormalFormGame

NormalFormGame::NormalFormGame(std::vector<std::string> players,
                               std::vector<std::vector<std::string>> strategies,
                               std::vector<std::vector<Rational>> payoffs)
    : players_(std::move(players)),
      strategies_(std::move(strategies)),
      payoffs_(std::move(payoffs)) {
  if (players_.empty()) throw DomainError("a game needs at least one player");
  if (strategies_.size() != players_.size()) {
    throw DomainError("one strategy set per player required");
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    if (strategies_[i].empty()) {
      throw DomainError("strategy set of player '" + players_[i] + "' is empty");
    }
    if (count > kMaxProfiles / strategies_[i].size()) {
      throw DomainError("game exceeds " + std::to_string(kMaxProfiles) + " profiles");
    }
    count *= strategies_[i].size();
  }
  if (payoffs_.size() != count) {
    throw DomainError("payoff table has " + std::to_string(payoffs_.size()) +
                      " entries, expected " + std::to_string(count));
  }
  for (const auto& row : payoffs_) {
    if (row.size() != players_.size()) throw DomainError("payoff vector per player required");
  }
}

NormalFormGame NormalFormGame::from_function(std::vector<std::string> players,
                                             std::vector<std::vector<std::string>> strategies,
                                             const PayoffFn& payoff) {
  std::size_t count = 1;
  for (const auto& s : strategies) {
    if (s.empty()) throw DomainError("empty strategy set");
    if (count > kMaxProfiles / s.size()) {
      throw DomainError("game exceeds " + std::to_string(kMaxProfiles) + " profiles");
    }
    count *= s.size();
  }
  std::vector<std::vector<Rational>> table;
  table.reserve(count);
  Profile s(strategies.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    table.push_back(payoff(s));
    for (std::size_t i = s.size(); i-- > 0;) {
      if (++s[i] < strategies[i].size()) break;
      s[i] = 0;
    }
  }
  return NormalFormGame(std::move(players), std::move(strategies), std::move(table));
}

std::size_t NormalFormGame::profile_index(const Profile& s) const {
  if (s.size() != players_.size()) {
    throw DomainError("profile has " + std::to_string(s.size()) + " entries for " +
                      std::to_string(players_.size()) + " players");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= strategies_[i].size()) {
      throw DomainError("strategy index " + std::to_string(s[i]) + " out of range for player '" +
                        players_[i] + "'");
    }
    index = index * strategies_[i].size() + s[i];
  }
  return index;
}

Profile NormalFormGame::profile_at(std::size_t index) const {
  if (index >= payoffs_.size()) throw DomainError("profile index out of range");
  Profile s(players_.size(), 0);
  for (std::size_t i = players_.size(); i-- > 0;) {
    s[i] = index % strategies_[i].size();
    index /= strategies_[i].size();
  }
  return s;
}

std::vector<Profile> NormalFormGame::profiles() const {
  std::vector<Profile> out;
  out.reserve(payoffs_.size());
  for (std::size_t n = 0; n < payoffs_.size(); ++n) out.push_back(profile_at(n));
  return out;
}

std::string NormalFormGame::format(const Profile& s) const {
  profile_index(s);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << strategies_[i][s[i]];
  }
  os << ')';
  return os.str();
}

Rational payoff(const NormalFormGame& game, const Profile& s, std::size_t player) {
  if (player >= game.player_count()) throw DomainError("player index out of range");
  return game.payoffs(s)[player];
}

Profile substitute(Profile s, std::size_t player, std::size_t strategy) {
  s.at(player) = strategy;
  return s;
}

// ---------------------------------------------------------------------------
// Mixed strategies

void validate_mixed(const NormalFormGame& game, const MixedProfile& mixed) {
  if (mixed.size() != game.player_count()) {
    throw DomainError("mixed profile needs one distribution per player");
  }
  for (std::size_t i = 0; i < mixed.size(); ++i) {
    if (mixed[i].size() != game.strategy_count(i)) {
      throw DomainError("distribution of player '" + game.players()[i] +
                        "' has the wrong length");
    }
    Rational sum = 0;
    for (const auto& p : mixed[i]) {
      if (p < 0) throw DomainError("negative probability for player '" + game.players()[i] + "'");
      sum += p;
    }
    if (sum != 1) {
      throw DomainError("distribution of player '" + game.players()[i] + "' sums to " +
                        to_string(sum));
    }
  }
}

MixedProfile point_mass(const NormalFormGame& game, const Profile& s) {
  game.profile_index(s);
  MixedProfile out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Rational> dist(game.strategy_count(i), Rational(0));
    dist[s[i]] = 1;
    out.push_back(std::move(dist));
  }
  return out;
}

Rational expected_payoff(const NormalFormGame& game, const MixedProfile& mixed,
                         std::size_t player) {
  validate_mixed(game, mixed);
  if (player >= game.player_count()) throw DomainError("player index out of range");
  Rational total = 0;
  for (std::size_t n = 0; n < game.profile_count(); ++n) {
    const Profile s = game.profile_at(n);
    Rational weight = 1;
    for (std::size_t i = 0; i < s.size() && weight != 0; ++i) weight *= mixed[i][s[i]];
    if (weight != 0) total += weight * game.payoffs(s)[player];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Equilibria

bool is_equilibrium(const NormalFormGame& game, const Profile& s) {
  const auto& here = game.payoffs(s);
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    for (std::size_t r = 0; r < game.strategy_count(i); ++r) {
      if (r == s[i]) continue;
      if (game.payoffs(substitute(s, i, r))[i] > here[i]) return false;
    }
  }
  return true;
}

bool is_mixed_equilibrium(const NormalFormGame& game, const MixedProfile& mixed) {
  validate_mixed(game, mixed);
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    const Rational value = expected_payoff(game, mixed, i);
    for (std::size_t r = 0; r < game.strategy_count(i); ++r) {
      MixedProfile deviation = mixed;
      deviation[i].assign(game.strategy_count(i), Rational(0));
      deviation[i][r] = 1;
      if (expected_payoff(game, deviation, i) > value) return false;
    }
  }
  return true;
}

std::vector<Profile> pure_equilibria(const NormalFormGame& game) {
  std::vector<Profile> out;
  for (std::size_t n = 0; n < game.profile_count(); ++n) {
    Profile s = game.profile_at(n);
    if (is_equilibrium(game, s)) out.push_back(std::move(s));
  }
  return out;
}

namespace {

bool interchangeable_unchecked(const std::vector<Profile>& set) {
  const std::set<Profile> members(set.begin(), set.end());
  for (const auto& s : set) {
    for (const auto& t : set) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!members.contains(substitute(s, i, t[i]))) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_interchangeable(const NormalFormGame& game, const std::vector<Profile>& set) {
  for (const auto& s : set) {
    if (!is_equilibrium(game, s)) {
      throw DomainError("profile " + game.format(s) + " is not an equilibrium");
    }
  }
  return interchangeable_unchecked(set);
}

Solvability is_solvable(const NormalFormGame& game) {
  Solvability out;
  out.solution = pure_equilibria(game);
  out.solvable = !out.solution.empty() && interchangeable_unchecked(out.solution);
  if (!out.solvable) out.solution.clear();
  return out;
}

std::vector<Profile> product_of(const std::vector<std::vector<std::size_t>>& factor_sets) {
  std::vector<Profile> out;
  for (const auto& f : factor_sets) {
    if (f.empty()) return out;
  }
  std::vector<std::size_t> cursor(factor_sets.size(), 0);
  while (true) {
    Profile s(factor_sets.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = factor_sets[i][cursor[i]];
    out.push_back(std::move(s));
    std::size_t i = cursor.size();
    while (i-- > 0) {
      if (++cursor[i] < factor_sets[i].size()) break;
      cursor[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> projections(const std::vector<Profile>& set,
                                                  std::size_t players) {
  std::vector<std::vector<std::size_t>> out(players);
  for (const auto& s : set) {
    for (std::size_t i = 0; i < players; ++i) out[i].push_back(s[i]);
  }
  for (auto& f : out) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  return out;
}

}  // namespace

std::vector<SubSolution> sub_solutions(const NormalFormGame& game) {
  const std::vector<Profile> eq = pure_equilibria(game);
  if (eq.size() > kMaxSubSolutionSearch) {
    throw DomainError("equilibrium set has " + std::to_string(eq.size()) +
                      " members; sub-solution search is limited to " +
                      std::to_string(kMaxSubSolutionSearch));
  }
  const std::size_t n = eq.size();
  const std::size_t players = game.player_count();

  // A subset is interchangeable iff it equals the product of its projections,
  // i.e. iff its size equals the product of the projection sizes.
  std::vector<std::uint32_t> closed;
  std::vector<std::size_t> distinct;
  for (std::uint32_t mask = 1; n > 0 && mask < (std::uint32_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    std::size_t product = 1;
    bool fits = true;
    for (std::size_t i = 0; i < players && fits; ++i) {
      distinct.clear();
      for (std::size_t m = 0; m < n; ++m) {
        if (mask & (std::uint32_t{1} << m)) distinct.push_back(eq[m][i]);
      }
      std::sort(distinct.begin(), distinct.end());
      product *= static_cast<std::size_t>(
          std::unique(distinct.begin(), distinct.end()) - distinct.begin());
      fits = product <= size;
    }
    if (fits && product == size) closed.push_back(mask);
  }

  // Any closed superset is strictly larger, so visiting by size finds the
  // maximal sets first.
  std::stable_sort(closed.begin(), closed.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<std::uint32_t> maximal;
  for (auto mask : closed) {
    const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                     [&](std::uint32_t big) { return (mask & big) == mask; });
    if (!covered) maximal.push_back(mask);
  }
  // Lowest set bit = first member in profile-index order.
  std::sort(maximal.begin(), maximal.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::countr_zero(a) < std::countr_zero(b) ||
           (std::countr_zero(a) == std::countr_zero(b) && a < b);
  });

  std::vector<SubSolution> out;
  for (auto mask : maximal) {
    SubSolution sub;
    for (std::size_t m = 0; m < n; ++m) {
      if (mask & (std::uint32_t{1} << m)) sub.profiles.push_back(eq[m]);
    }
    sub.factor_sets = projections(sub.profiles, players);
    if (product_of(sub.factor_sets) != sub.profiles) {
      throw DomainError("internal: sub-solution differs from the product of its factor sets");
    }
    out.push_back(std::move(sub));
  }
  return out;
}

bool is_strong_solution(const NormalFormGame& game, const std::vector<Profile>& candidate) {
  if (candidate.empty()) return false;
  for (const auto& s : candidate) {
    if (!is_equilibrium(game, s)) return false;
  }
  if (!interchangeable_unchecked(candidate)) return false;
  const std::set<Profile> members(candidate.begin(), candidate.end());
  for (const auto& s : candidate) {
    for (std::size_t i = 0; i < game.player_count(); ++i) {
      for (std::size_t r = 0; r < game.strategy_count(i); ++r) {
        const Profile t = substitute(s, i, r);
        if (game.payoffs(t)[i] == game.payoffs(s)[i] && !members.contains(t)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Permutations

GamePermutation identity_permutation(const NormalFormGame& game) {
  GamePermutation perm;
  for (std::size_t i = 0; i < game.player_count(); ++i) {
    perm.player_map.push_back(i);
    std::vector<std::size_t> id(game.strategy_count(i));
    for (std::size_t a = 0; a < id.size(); ++a) id[a] = a;
    perm.strategy_maps.push_back(std::move(id));
  }
  return perm;
}

namespace {

bool is_bijection(const std::vector<std::size_t>& map, std::size_t size) {
  if (map.size() != size) return false;
  std::vector<bool> hit(size, false);
  for (auto v : map) {
    if (v >= size || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

void validate_permutation(const NormalFormGame& game, const GamePermutation& perm) {
  const std::size_t n = game.player_count();
  if (!is_bijection(perm.player_map, n)) {
    throw DomainError("player map is not a permutation of the players");
  }
  if (perm.strategy_maps.size() != n) throw DomainError("one strategy map per player required");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = perm.player_map[i];
    if (game.strategy_count(i) != game.strategy_count(j)) {
      throw DomainError("players '" + game.players()[i] + "' and '" + game.players()[j] +
                        "' have different strategy counts");
    }
    if (!is_bijection(perm.strategy_maps[i], game.strategy_count(j))) {
      throw DomainError("strategy map of player '" + game.players()[i] + "' is not a bijection");
    }
  }
}

Profile apply_permutation(const NormalFormGame& game, const GamePermutation& perm,
                          const Profile& s) {
  validate_permutation(game, perm);
  game.profile_index(s);
  Profile out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[perm.player_map[i]] = perm.strategy_maps[i][s[i]];
  }
  return out;
}

bool check_symmetry(const NormalFormGame& game, const GamePermutation& perm) {
  validate_permutation(game, perm);
  for (std::size_t n = 0; n < game.profile_count(); ++n) {
    const Profile s = game.profile_at(n);
    const Profile image = apply_permutation(game, perm, s);
    for (std::size_t i = 0; i < game.player_count(); ++i) {
      if (game.payoffs(image)[perm.player_map[i]] != game.payoffs(s)[i]) return false;
    }
  }
  return true;
}

std::vector<Profile> symmetric_profiles(const NormalFormGame& game,
                                        const GamePermutation& perm) {
  validate_permutation(game, perm);
  std::vector<Profile> out;
  for (std::size_t n = 0; n < game.profile_count(); ++n) {
    Profile s = game.profile_at(n);
    if (apply_permutation(game, perm, s) == s) out.push_back(std::move(s));
  }
  return out;
}

NormalFormGame affine_rescale(const NormalFormGame& game, std::size_t player,
                              const Rational& scale, const Rational& shift) {
  if (scale <= 0) throw DomainError("affine rescaling needs a positive scale");
  if (player >= game.player_count()) throw DomainError("player index out of range");
  return NormalFormGame::from_function(game.players(), game.strategies(),
                                       [&](const Profile& s) {
                                         auto p = game.payoffs(s);
                                         p[player] = scale * p[player] + shift;
                                         return p;
                                       });
}

// ---------------------------------------------------------------------------
// Epistemic route

namespace {

Profile opponents_of(const Profile& s, std::size_t player) {
  Profile out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j != player) out.push_back(s[j]);
  }
  return out;
}

}  // namespace

std::vector<Conjecture> truthful_conjectures(const NormalFormGame& game,
                                             const StrategyMap& strategy_map) {
  if (strategy_map.size() != game.player_count()) {
    throw DomainError("strategy map needs one row per player");
  }
  const std::size_t states = strategy_map.front().size();
  std::vector<Conjecture> out(game.player_count());
  for (std::size_t w = 0; w < states; ++w) {
    Profile s;
    for (const auto& row : strategy_map) s.push_back(row.at(w));
    for (std::size_t i = 0; i < game.player_count(); ++i) {
      out[i].by_state.push_back({{opponents_of(s, i), Rational(1)}});
    }
  }
  return out;
}

bool check_epistemic_equilibrium(const epistemic::EpistemicModel& model,
                                 const NormalFormGame& game, const StrategyMap& strategy_map,
                                 const std::vector<Conjecture>& conjectures) {
  const std::size_t players = game.player_count();
  const std::size_t states = model.space().size();
  if (model.agents().size() != players) {
    throw DomainError("model has " + std::to_string(model.agents().size()) +
                      " agents but the game has " + std::to_string(players) + " players");
  }
  if (strategy_map.size() != players || conjectures.size() != players) {
    throw DomainError("strategy map and conjectures need one entry per player");
  }
  for (std::size_t i = 0; i < players; ++i) {
    if (strategy_map[i].size() != states || conjectures[i].by_state.size() != states) {
      throw DomainError("strategy map and conjectures need one entry per state");
    }
    const auto& partition = model.partition_at(i);
    for (std::size_t w = 0; w < states; ++w) {
      if (strategy_map[i][w] >= game.strategy_count(i)) {
        throw DomainError("strategy index out of range for player '" + game.players()[i] + "'");
      }
      Rational mass = 0;
      for (const auto& [opp, p] : conjectures[i].by_state[w]) {
        if (opp.size() + 1 != players || p < 0) throw DomainError("malformed conjecture");
        mass += p;
      }
      if (mass != 1) throw DomainError("conjecture does not sum to 1");
      const std::size_t anchor = partition.cell_of(w).members().front();
      if (strategy_map[i][w] != strategy_map[i][anchor]) {
        throw DomainError("strategy of player '" + game.players()[i] +
                          "' is not measurable: it varies within a cell at state '" +
                          model.space().name(w) + "'");
      }
      if (conjectures[i].by_state[w] != conjectures[i].by_state[anchor]) {
        throw DomainError("conjecture of player '" + game.players()[i] +
                          "' varies within a cell at state '" + model.space().name(w) + "'");
      }
    }
  }

  for (std::size_t w = 0; w < states; ++w) {
    Profile s;
    for (const auto& row : strategy_map) s.push_back(row[w]);
    bool all_know = true;
    for (std::size_t i = 0; i < players && all_know; ++i) {
      const auto& dist = conjectures[i].by_state[w];
      const auto it = dist.find(opponents_of(s, i));
      all_know = it != dist.end() && it->second == 1;
    }
    if (all_know && !is_equilibrium(game, s)) return false;
  }
  return true;
}

}  // namespace zkg::equilibrium
