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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Run from the tests directory so fixture paths resolve.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zkg/alternation.hpp"
#include "zkg/cli.hpp"
#include "zkg/epistemic.hpp"
#include "zkg/equilibrium.hpp"
#include "zkg/fuzzy.hpp"
#include "zkg/signaling.hpp"

namespace {

using namespace zkg;

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool passed() const { return failures_ == 0; }
  const std::string& notes() const { return notes_; }

 private:
  int failures_ = 0;
  std::string notes_;
};

// h_k built from integer powers, independent of the library's formula.
Rational threshold_oracle(int k) {
  Integer three = 1, two = 2;
  for (int i = 0; i < k; ++i) {
    three *= 3;
    two *= 2;
  }
  return Rational(three - two, three);
}

void threshold_exactness(Check& c) {
  using signaling::zk_threshold;
  c.expect(zk_threshold(2) == Rational(1, 9), "h_2");
  c.expect(zk_threshold(3) == Rational(11, 27), "h_3");
  c.expect(zk_threshold(10) == Rational(57001, 59049), "h_10");
  for (int k = 2; k <= 64; ++k) {
    c.expect(zk_threshold(k) == threshold_oracle(k), "oracle mismatch at k=" + std::to_string(k));
    if (k > 2) c.expect(zk_threshold(k) > zk_threshold(k - 1), "not increasing at k=" + std::to_string(k));
  }
  // Smallest k with 2(2/3)^k <= 1/100, i.e. 200 * 2^k <= 3^k.
  int forced = 2;
  for (Integer two = 4, three = 9; 200 * two > three; two *= 2, three *= 3) ++forced;
  const int by_log = static_cast<int>(std::ceil(std::log(200.0) / std::log(1.5)));
  c.expect(forced == by_log, "exact crossing " + std::to_string(forced) + " vs log bound " +
                                 std::to_string(by_log));
  c.expect(!signaling::zk_limit_satisfied(forced - 1, 0.01), "satisfied before crossing");
  c.expect(signaling::zk_limit_satisfied(forced, 0.01), "not satisfied at crossing");
}

void epistemic_oracles(Check& c) {
  using namespace epistemic;
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 220; ++trial) {
    const auto m = testing::random_model(rng, 6, 3);
    const std::size_t n = m.space().size();
    std::vector<std::size_t> all(m.agents().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const Event omega = m.space().full_event();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const Event e = testing::from_mask(n, mask);
      c.expect(testing::to_mask(common_knowledge(m, m.agents(), e)) ==
                   testing::oracle_common_knowledge(m, all, mask),
               "common knowledge differs from component oracle");
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& agent = m.agents()[i];
        const Event k = knows(m, agent, e);
        c.expect(testing::to_mask(k) == testing::oracle_knows(m, i, mask), "knows oracle");
        c.expect(k.is_subset_of(e), "truth axiom");
        c.expect(knows(m, agent, k) == k, "positive introspection");
        c.expect(believes(m, agent, omega, e) == k, "believes(Omega) != knows");
        for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
          c.expect(knows(m, agent, testing::from_mask(n, sub)).is_subset_of(k), "monotonicity");
        }
      }
    }
  }
}

void alternation_table(Check& c) {
  using namespace alternation;
  for (int s = 0; s < 2; ++s) {
    for (int e = 0; e < 2; ++e) {
      for (int f = 0; f < 2; ++f) {
        const auto v = eval_alternation({s == 1, e == 1, f == 1});
        const auto o = testing::oracle_alternation(s, e, f);
        c.expect(v.antecedent == (o.antecedent == 1) && v.lhs == (o.lhs == 1) &&
                     v.rhs == (o.rhs == 1) && v.whole == (o.whole == 1),
                 "truth table mismatch");
        c.expect(v.whole, "not a tautology");
      }
    }
  }
  const auto ttf = eval_alternation({true, true, false});
  c.expect(!ttf.lhs && ttf.rhs, "right side only at (T,T,F)");
  const auto tft = eval_alternation({true, false, true});
  c.expect(tft.lhs, "left side when only Ex false");
  const auto tff = eval_alternation({true, false, false});
  c.expect(tff.rhs, "right side when Ex and Fx false");
}

void lambda_machinery(Check& c) {
  using namespace signaling;
  using alternation::StageState;
  const auto P0 = StageState::kP0, V0 = StageState::kV0;
  auto matrix = [](StagePair a, StagePair b, StagePair c, StagePair d) {
    LambdaMatrix m;
    m.entries[0] = {a, b};
    m.entries[1] = {c, d};
    return m;
  };
  // The two displayed products, written out entry by entry.
  const auto pv = matrix({P0, V0}, {P0, P0}, {V0, V0}, {V0, P0});
  const auto vp = matrix({V0, P0}, {V0, V0}, {P0, P0}, {P0, V0});
  c.expect(lambda_product(lambda_p(), lambda_v()) == pv, "lambda^P lambda^V");
  c.expect(lambda_product(lambda_v(), lambda_p()) == vp, "lambda^V lambda^P");
  c.expect(complement(pv) == vp && complement(vp) == pv, "complement swaps");
  c.expect(complement(complement(pv)) == pv, "complement involution");
  c.expect(stage_probability({P0, P0}, EvidenceOrder::kProofFirst) == 0.0, "(P0,P0)");
  c.expect(stage_probability({V0, V0}, EvidenceOrder::kEvidenceFirst) == 0.0, "(V0,V0)");
  c.expect(stage_probability({V0, P0}, EvidenceOrder::kProofFirst) == 0.5, "(V0,P0)");
  c.expect(stage_probability({P0, V0}, EvidenceOrder::kEvidenceFirst) == 0.5, "(P0,V0)");
  for (int a = 0; a < 10; ++a) {
    for (int b = 0; b < 10; ++b) {
      const double x = a / 9.0, y = (2 * b + 1) / 20.0;
      SignalingSession s;
      s.append({1, true, StageState::kS0, {true, false, false}});
      s.set_p_u0(x);
      s.set_p_i0(y);
      const auto first = infer_stage(s).decision;
      s.set_p_u0(y);
      s.set_p_i0(x);
      c.expect(infer_stage(s).decision != first, "infer_stage not swap-symmetric");
      c.expect(first == (x < y ? Decision::kD1 : Decision::kD2), "inequality direction");
    }
  }
}

void simulation_convergence(Check& c) {
  signaling::SimulationConfig config{.trials = 100000, .seed = 20260419, .threads = 1};
  const auto serial = signaling::simulate(config);
  c.expect(serial.size() == 7, "expected k = 2..8");
  for (const auto& row : serial) {
    const double expected = std::pow(2.0 / 3.0, row.k);
    c.expect(std::abs(row.empirical_undetected - expected) <= 0.01,
             "k=" + std::to_string(row.k) + " off by " +
                 std::to_string(row.empirical_undetected - expected));
  }
  for (unsigned threads : {2u, 4u, 0u}) {
    config.threads = threads;
    const auto parallel = signaling::simulate(config);
    bool same = parallel.size() == serial.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) {
      same = parallel[i].undetected == serial[i].undetected &&
             parallel[i].uninformed == serial[i].uninformed &&
             std::memcmp(&parallel[i].empirical_undetected, &serial[i].empirical_undetected,
                         sizeof(double)) == 0;
    }
    c.expect(same, "threads=" + std::to_string(threads) + " differs");
  }
}

void equilibrium_suite(Check& c) {
  using namespace equilibrium;
  const auto pd = testing::prisoners_dilemma();
  const auto mp = testing::matching_pennies();
  const auto coord = testing::coordination();
  c.expect(pure_equilibria(pd) == std::vector<Profile>{{1, 1}}, "PD equilibria");
  c.expect(pure_equilibria(pd) == testing::oracle_equilibria_2p(pd), "PD oracle");
  c.expect(pure_equilibria(mp).empty() && testing::oracle_equilibria_2p(mp).empty(), "MP equilibria");
  const auto subs = sub_solutions(coord);
  c.expect(subs.size() == 2, "coordination sub-solution count");
  for (const auto& s : subs) {
    c.expect(s.profiles.size() == 1 && product_of(s.factor_sets) == s.profiles,
             "sub-solution is not a singleton product");
  }
  c.expect(is_solvable(pd).solvable, "PD solvable");
  c.expect(!is_solvable(coord).solvable, "coordination not solvable");
  auto swap = identity_permutation(pd);
  swap.player_map = {1, 0};
  c.expect(check_symmetry(pd, swap), "PD symmetry");
  const auto fixed = symmetric_profiles(pd, swap);
  c.expect(std::find(fixed.begin(), fixed.end(), Profile{1, 1}) != fixed.end() &&
               is_equilibrium(pd, {1, 1}),
           "(D,D) symmetric equilibrium");
  for (const auto* g : {&pd, &mp, &coord}) {
    for (std::size_t player = 0; player < 2; ++player) {
      const auto scaled = affine_rescale(*g, player, Rational(7, 3), Rational(-5));
      c.expect(pure_equilibria(scaled) == pure_equilibria(*g), "affine rescale changed equilibria");
    }
  }
}

std::vector<fuzzy::CellIndex> sorted_intersection(std::vector<fuzzy::CellIndex> a,
                                                  std::vector<fuzzy::CellIndex> b) {
  std::vector<fuzzy::CellIndex> out;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

fuzzy::FuzzyGame grid_game(const fuzzy::LinguisticScale& scale,
                           const std::vector<std::vector<int>>& v,
                           const std::vector<std::vector<int>>& phi) {
  std::vector<std::vector<fuzzy::FuzzyCell>> cells(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t col = 0; col < v[r].size(); ++col) {
      cells[r].push_back({static_cast<std::size_t>(v[r][col]), static_cast<std::size_t>(phi[r][col])});
    }
  }
  return fuzzy::FuzzyGame(scale, cells);
}

void fuzzy_suite(Check& c) {
  using namespace fuzzy;
  const LinguisticScale five({"vl", "l", "m", "h", "vh"});
  const LinguisticScale nine({"a", "b", "c", "d", "e", "f", "g", "h", "i"});
  const std::vector<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> fixtures = {
      {{{3, 1}, {2, 4}}, {{1, 2}, {3, 4}}},
      {{{0, 1, 0}, {1, 4, 2}, {0, 2, 1}}, {{1, 0, 1}, {0, 3, 1}, {2, 1, 0}}}};
  for (const auto& [v, phi] : fixtures) {
    const auto g = grid_game(five, v, phi);
    for (bool literal : {true, false}) {
      const auto i = literal ? Interpretation::kLiteral : Interpretation::kStrict;
      c.expect(find_nne(g, i) == testing::oracle_dominant(v, literal), "fixture NNE");
      c.expect(find_fne(g, i) == testing::oracle_dominant(phi, literal), "fixture FNE");
      c.expect(find_fnne(g, i) == sorted_intersection(testing::oracle_dominant(v, literal),
                                                      testing::oracle_dominant(phi, literal)),
               "fixture FNNE");
    }
  }
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> level(0, 4), size(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = size(rng), cols = size(rng);
    std::vector<std::vector<int>> v(rows, std::vector<int>(cols)), phi = v;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t col = 0; col < cols; ++col) {
        v[r][col] = level(rng);
        phi[r][col] = level(rng);
      }
    }
    std::vector<int> map = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    std::shuffle(map.begin(), map.end(), rng);
    map.resize(5);
    std::sort(map.begin(), map.end());
    auto relabel = [&](std::vector<std::vector<int>> grid) {
      for (auto& row : grid) {
        for (auto& x : row) x = map[static_cast<std::size_t>(x)];
      }
      return grid;
    };
    const auto g = grid_game(five, v, phi);
    const auto h = grid_game(nine, relabel(v), relabel(phi));
    for (auto i : {Interpretation::kLiteral, Interpretation::kStrict}) {
      c.expect(find_fnne(g, i) == sorted_intersection(find_nne(g, i), find_fne(g, i)),
               "FNNE != NNE ∩ FNE");
      c.expect(find_nne(g, i) == find_nne(h, i) && find_fne(g, i) == find_fne(h, i) &&
                   find_fnne(g, i) == find_fnne(h, i),
               "relabeling changed the result");
    }
    for (auto finder : {&find_nne, &find_fne}) {
      const auto strict = finder(g, Interpretation::kStrict);
      const auto literal = finder(g, Interpretation::kLiteral);
      const std::set<CellIndex> lit(literal.begin(), literal.end());
      for (const auto& cell : strict) c.expect(lit.contains(cell), "strict not within literal");
    }
  }
}

void cli_determinism(Check& c) {
  std::ifstream cases("golden/cases.txt");
  c.expect(static_cast<bool>(cases), "golden/cases.txt not found (run from tests/)");
  std::set<std::string> covered;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    const std::string file = line.substr(0, bar);
    std::istringstream words(line.substr(bar + 1));
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    covered.insert(args.front());
    std::ostringstream first, second, err;
    const int code1 = cli::run(args, first, err);
    const int code2 = cli::run(args, second, err);
    std::ifstream golden("golden/" + file, std::ios::binary);
    std::ostringstream expected;
    expected << golden.rdbuf();
    c.expect(code1 == 0 && code2 == 0, file + ": non-zero exit");
    c.expect(first.str() == second.str(), file + ": runs differ");
    c.expect(first.str() == expected.str(), file + ": golden mismatch");
  }
  for (const char* cmd : {"alternation-table", "simulate", "equilibria", "walkthrough"}) {
    c.expect(covered.contains(cmd), std::string("no golden case for ") + cmd);
  }
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"threshold exactness", 1.0, threshold_exactness},
      {"epistemic oracle equivalence", 5.0, epistemic_oracles},
      {"alternation table", 1.0, alternation_table},
      {"lambda machinery", 1.0, lambda_machinery},
      {"simulation convergence", 10.0, simulation_convergence},
      {"equilibrium suite", 1.0, equilibrium_suite},
      {"fuzzy suite", 2.0, fuzzy_suite},
      {"cli determinism", 5.0, cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < criteria[i].limit_seconds, "over time budget");
    std::ostringstream line;
    line << "AC" << i + 1 << ' ' << (check.passed() ? "PASS" : "FAIL") << "  "
         << criteria[i].name << " (" << std::fixed;
    line.precision(3);
    line << seconds << "s)";
    if (!check.passed()) line << ": " << check.notes();
    std::cout << line.str() << '\n';
    if (!check.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
