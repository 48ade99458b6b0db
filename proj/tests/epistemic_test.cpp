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

#include "zkg/epistemic.hpp"

#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zkg/error.hpp"

namespace zkg::epistemic {
namespace {

using testing::four_state_model;
using testing::numbered;
using testing::partition;

EpistemicModel single_agent(const std::vector<std::vector<std::string>>& cells, std::size_t n = 3) {
  auto space = numbered(n);
  auto p = partition(space, cells);
  return EpistemicModel(space, {"1"}, {p});
}

TEST(StateSpaceTest, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(StateSpace(std::vector<std::string>{}), DomainError);
  EXPECT_THROW(StateSpace({"a", "a"}), DomainError);
  StateSpace s({"b", "a"});
  EXPECT_EQ(s.index("a"), 1u);
  EXPECT_THROW(s.index("z"), DomainError);
  EXPECT_EQ(s.format(s.event({"a", "b"})), "{b,a}");
}

TEST(CellTest, ReturnsContainingCell) {
  const auto m = single_agent({{"1", "2"}, {"3"}});
  EXPECT_EQ(cell(m, "1", "2"), m.space().event({"1", "2"}));
  const auto singletons = single_agent({{"1"}, {"2"}, {"3"}});
  EXPECT_EQ(cell(singletons, "1", "3"), singletons.space().event({"3"}));
  const auto trivial = single_agent({{"1", "2", "3"}});
  EXPECT_EQ(cell(trivial, "1", "1"), trivial.space().full_event());
}

TEST(CellTest, UnknownStateOrAgent) {
  const auto m = single_agent({{"1", "2"}, {"3"}});
  EXPECT_THROW(cell(m, "1", "9"), DomainError);
  EXPECT_THROW(cell(m, "7", "1"), DomainError);
}

TEST(PartitionPropertiesTest, ClassifiesCandidates) {
  auto space = numbered(3);
  std::vector<Event> ok = {space.event({"1", "2"}), space.event({"3"})};
  EXPECT_EQ(check_partition_properties(3, ok), (PartitionReport{true, true}));

  std::vector<Event> overlap = {space.event({"1", "2"}), space.event({"2", "3"})};
  EXPECT_FALSE(check_partition_properties(3, overlap).p2);

  auto two = numbered(2);
  std::vector<Event> uncovered = {two.event({"1"})};
  EXPECT_FALSE(check_partition_properties(2, uncovered).p1);
}

TEST(PartitionPropertiesTest, AgreesWithConstructor) {
  // Every candidate list of up to three cells over three states.
  const std::size_t n = 3;
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      for (std::uint32_t c = 0; c < 8; ++c) {
        for (std::size_t count = 1; count <= 3; ++count) {
          std::vector<Event> cells = {testing::from_mask(n, a), testing::from_mask(n, b),
                                      testing::from_mask(n, c)};
          cells.resize(count);
          const auto report = check_partition_properties(n, cells);
          bool accepted = true;
          try {
            Partition p(n, cells);
          } catch (const DomainError&) {
            accepted = false;
          }
          EXPECT_EQ(report.p1 && report.p2, accepted) << a << " " << b << " " << c;
        }
      }
    }
  }
}

TEST(KnowsTest, Examples) {
  const auto m = single_agent({{"1", "2"}, {"3"}});
  const auto& s = m.space();
  EXPECT_EQ(knows(m, "1", s.full_event()), s.full_event());
  EXPECT_EQ(knows(m, "1", s.event({"1", "3"})), s.event({"3"}));
  EXPECT_EQ(knows(m, "1", s.empty_event()), s.empty_event());
  EXPECT_THROW(knows(m, "2", s.full_event()), DomainError);
}

TEST(BelievesTest, Examples) {
  const auto m = single_agent({{"1", "2"}}, 2);
  const auto& s = m.space();
  EXPECT_EQ(believes(m, "1", s.event({"1"}), s.event({"1"})), s.event({"1", "2"}));
  EXPECT_EQ(believes(m, "1", s.event({"2"}), s.event({"1"})), s.empty_event());
  for (std::uint32_t e = 0; e < 4; ++e) {
    const auto ev = testing::from_mask(2, e);
    EXPECT_EQ(believes(m, "1", s.full_event(), ev), knows(m, "1", ev));
  }
}

TEST(BelievesTest, VacuousMembershipIsFlagged) {
  const auto m = single_agent({{"1", "2"}, {"3"}});
  const auto& s = m.space();
  const auto given = s.event({"3"});
  // Cell {1,2} misses F, so states 1 and 2 believe even the empty event.
  EXPECT_EQ(believes(m, "1", given, s.empty_event()), s.event({"1", "2"}));
  EXPECT_EQ(vacuous_belief_states(m, "1", given), s.event({"1", "2"}));
}

TEST(GroupKnowsTest, Examples) {
  auto space = numbered(3);
  auto p1 = partition(space, {{"1", "2"}, {"3"}});
  auto p2 = partition(space, {{"1"}, {"2", "3"}});
  EpistemicModel m(space, {"1", "2"}, {p1, p2});
  const auto e = space.event({"1", "2"});
  EXPECT_EQ(knows(m, "1", e), space.event({"1", "2"}));
  EXPECT_EQ(knows(m, "2", e), space.event({"1"}));
  const std::vector<std::string> both = {"1", "2"};
  EXPECT_EQ(group_knows(m, both, e), space.event({"1"}));
  const std::vector<std::string> one = {"2"};
  EXPECT_EQ(group_knows(m, one, e), knows(m, "2", e));
  EXPECT_EQ(group_knows(m, both, space.full_event()), space.full_event());
  EXPECT_THROW(group_knows(m, std::vector<std::string>{}, e), DomainError);
}

TEST(CommonKnowledgeTest, Examples) {
  const auto m = four_state_model();
  const auto& s = m.space();
  const std::vector<std::string> all = {"1", "2"};
  EXPECT_EQ(common_knowledge(m, all, s.event({"1", "2", "3"})), s.event({"1", "2", "3"}));
  EXPECT_EQ(common_knowledge(m, all, s.event({"1", "2"})), s.empty_event());

  auto space = numbered(3);
  EpistemicModel full(space, {"1", "2"}, {Partition::discrete(3), Partition::discrete(3)});
  EXPECT_EQ(common_knowledge(full, all, space.event({"1", "3"})), space.event({"1", "3"}));

  EpistemicModel blind(space, {"1", "2"}, {Partition::discrete(3), Partition::trivial(3)});
  EXPECT_EQ(common_knowledge(blind, all, space.event({"1", "2"})), space.empty_event());
}

TEST(PublicEventTest, MinimalPublicEvents) {
  const auto m = four_state_model();
  const auto& s = m.space();
  EXPECT_EQ(minimal_public_event(m, "1"), s.event({"1", "2", "3"}));
  EXPECT_EQ(minimal_public_event(m, "4"), s.event({"4"}));
  EXPECT_THROW(minimal_public_event(m, "5"), DomainError);

  auto space = numbered(3);
  EpistemicModel trivial(space, {"1", "2"}, {Partition::trivial(3), Partition::trivial(3)});
  EXPECT_EQ(minimal_public_event(trivial, "2"), space.full_event());
}

TEST(PublicEventTest, Examples) {
  const auto m = four_state_model();
  const auto& s = m.space();
  EXPECT_TRUE(is_public_event(m, s.full_event()));
  EXPECT_TRUE(is_public_event(m, s.empty_event()));
  EXPECT_TRUE(is_public_event(m, s.event({"1", "2", "3"})));
  EXPECT_FALSE(is_public_event(m, s.event({"1", "2"})));
}

TEST(ReviseBeliefsTest, KnowledgeDominates) {
  auto s = numbered(3);
  BeliefState b("1", std::vector<Event>{s.event({"1", "2"})});
  auto r = revise_beliefs(b, s.event({"2", "3"}));
  EXPECT_EQ(r.state.events(), std::vector<Event>{s.event({"2"})});
  EXPECT_TRUE(r.discarded.empty());

  BeliefState lone("1", std::vector<Event>{s.event({"1"})});
  r = revise_beliefs(lone, s.event({"2", "3"}));
  EXPECT_TRUE(r.state.beliefs().empty());
  EXPECT_EQ(r.discarded, std::vector<Event>{s.event({"1"})});

  BeliefState none("1", std::vector<Event>{});
  EXPECT_TRUE(revise_beliefs(none, s.event({"1"})).state.beliefs().empty());
  EXPECT_THROW(revise_beliefs(b, s.empty_event()), DomainError);
}

TEST(ReviseBeliefsTest, KeepsJustification) {
  auto s = numbered(3);
  BeliefState b("1", std::vector<Belief>{{s.event({"1", "2"}), s.event({"2"})}});
  auto r = revise_beliefs(b, s.event({"2", "3"}));
  EXPECT_EQ(r.state.justification(s.event({"2"})), s.event({"2"}));
}

TEST(CongruenceTest, Examples) {
  auto s = numbered(3);
  const std::vector<Event> strategies = {s.event({"1", "2"})};
  EXPECT_TRUE(check_congruence(BeliefState("1", std::vector<Event>{s.event({"1"})}), strategies));
  EXPECT_FALSE(check_congruence(BeliefState("1", std::vector<Event>{s.event({"3"})}), strategies));
  EXPECT_TRUE(check_congruence(BeliefState("1", std::vector<Event>{}), strategies));
}

TEST(FrameTest, Examples) {
  DoxasticFrame identity(2, {{0, 0}, {1, 1}});
  EXPECT_EQ(check_frame_properties(identity), (FrameReport{true, true, true}));
  DoxasticFrame dangling(2, {{0, 1}});
  EXPECT_FALSE(check_frame_properties(dangling).serial);
  DoxasticFrame chain(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_FALSE(check_frame_properties(chain).euclidean);
  EXPECT_THROW(DoxasticFrame(2, {{0, 5}}), DomainError);
}

TEST(FrameTest, FlagsMatchExhaustiveCheck) {
  // All 512 relations over three states.
  for (std::uint32_t bits = 0; bits < 512; ++bits) {
    std::vector<DoxasticFrame::Pair> pairs;
    auto rel = [&](int a, int b) { return (bits >> (a * 3 + b)) & 1u; };
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (rel(a, b)) pairs.emplace_back(a, b);
      }
    }
    bool serial = true, transitive = true, euclidean = true;
    for (int a = 0; a < 3; ++a) {
      serial = serial && (rel(a, 0) || rel(a, 1) || rel(a, 2));
      for (int b = 0; b < 3; ++b) {
        for (int c = 0; c < 3; ++c) {
          if (rel(a, b) && rel(b, c) && !rel(a, c)) transitive = false;
          if (rel(a, b) && rel(a, c) && !rel(b, c)) euclidean = false;
        }
      }
    }
    EXPECT_EQ(check_frame_properties(DoxasticFrame(3, pairs)),
              (FrameReport{serial, transitive, euclidean}))
        << bits;
  }
}

// ---------------------------------------------------------------------------
// Properties over random models

class RandomModels : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20260419};
};

TEST_F(RandomModels, KnowledgeAxioms) {
  for (int trial = 0; trial < 250; ++trial) {
    const auto m = testing::random_model(rng, 6, 3);
    const std::size_t n = m.space().size();
    for (std::size_t i = 0; i < m.agents().size(); ++i) {
      const auto& agent = m.agents()[i];
      for (std::uint32_t e = 0; e < (1u << n); ++e) {
        const auto ev = testing::from_mask(n, e);
        const auto k = knows(m, agent, ev);
        ASSERT_EQ(testing::to_mask(k), testing::oracle_knows(m, i, e));
        ASSERT_TRUE(k.is_subset_of(ev));
        ASSERT_EQ(knows(m, agent, k), k);
        ASSERT_EQ(believes(m, agent, m.space().full_event(), ev), k);
      }
    }
  }
}

TEST_F(RandomModels, Monotonicity) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::random_model(rng, 5, 2);
    const std::size_t n = m.space().size();
    const auto& agent = m.agents().front();
    std::uniform_int_distribution<std::uint32_t> pick(0, (1u << n) - 1);
    for (int k = 0; k < 20; ++k) {
      const auto small = pick(rng);
      const auto big = small | pick(rng);
      const auto given = testing::from_mask(n, pick(rng));
      const auto es = testing::from_mask(n, small), eb = testing::from_mask(n, big);
      ASSERT_TRUE(knows(m, agent, es).is_subset_of(knows(m, agent, eb)));
      ASSERT_TRUE(believes(m, agent, given, es).is_subset_of(believes(m, agent, given, eb)));
    }
  }
}

TEST_F(RandomModels, CommonKnowledgeMatchesOracles) {
  for (int trial = 0; trial < 250; ++trial) {
    const auto m = testing::random_model(rng, 6, 3);
    const std::size_t n = m.space().size();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m.agents().size(); ++i) idx.push_back(i);
    for (std::uint32_t e = 0; e < (1u << n); ++e) {
      const auto ev = testing::from_mask(n, e);
      const auto ck = common_knowledge(m, m.agents(), ev);
      ASSERT_EQ(testing::to_mask(ck), testing::oracle_common_knowledge(m, idx, e));
      ASSERT_EQ(ck, common_knowledge_by_components(m, m.agents(), ev));
      ASSERT_TRUE(is_public_event(m, ck));
      ASSERT_EQ(group_knows(m, m.agents(), ck), ck);
      ASSERT_EQ(is_public_event(m, ev), testing::oracle_public(m, idx, e));
    }
  }
}

TEST_F(RandomModels, PublicEventsClosedUnderIntersection) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::random_model(rng, 6, 3);
    const std::size_t n = m.space().size();
    std::vector<Event> pub;
    for (std::uint32_t e = 0; e < (1u << n); ++e) {
      auto ev = testing::from_mask(n, e);
      if (is_public_event(m, ev)) pub.push_back(ev);
    }
    for (const auto& a : pub) {
      for (const auto& b : pub) ASSERT_TRUE(is_public_event(m, a & b));
    }
  }
}

TEST_F(RandomModels, RevisionIsIdempotentAndConsistent) {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 5;
    std::uniform_int_distribution<std::uint32_t> pick(1, (1u << n) - 1);
    std::vector<Event> beliefs;
    for (int k = 0; k < 4; ++k) beliefs.push_back(testing::from_mask(n, pick(rng)));
    const auto knowledge = testing::from_mask(n, pick(rng));
    const auto once = revise_beliefs(BeliefState("1", beliefs), knowledge);
    ASSERT_TRUE(once.state.consistent_with(knowledge));
    const auto twice = revise_beliefs(once.state, knowledge);
    ASSERT_EQ(twice.state, once.state);
    ASSERT_TRUE(twice.discarded.empty());
  }
}

}  // namespace
}  // namespace zkg::epistemic
