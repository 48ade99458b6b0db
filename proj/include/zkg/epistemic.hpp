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

#ifndef ZKG_EPISTEMIC_HPP_
#define ZKG_EPISTEMIC_HPP_

// Finite partitional (Aumann) knowledge structures: knowledge and conditional
// belief operators, group and common knowledge, public events, doxastic
// frames, and knowledge-dominant belief revision.
//
// States and agents are addressed by their declared names. All types are
// immutable values once built.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace zkg::epistemic {

// A subset of a finite state space, stored as a bitset over state indices.
class Event {
 public:
  Event() = default;
  explicit Event(std::size_t universe) : bits_(universe) {}

  static Event full(std::size_t universe);
  static Event of(std::size_t universe, std::initializer_list<std::size_t> members);
  static Event of(std::size_t universe, std::span<const std::size_t> members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t state) const {
    return state < bits_.size() && bits_.test(state);
  }

  void insert(std::size_t state);

  bool is_subset_of(const Event& other) const;
  bool intersects(const Event& other) const;
  std::vector<std::size_t> members() const;

  Event operator~() const;
  Event& operator&=(const Event& other);
  Event& operator|=(const Event& other);
  friend Event operator&(Event a, const Event& b) { return a &= b; }
  friend Event operator|(Event a, const Event& b) { return a |= b; }

  friend bool operator==(const Event& a, const Event& b) {
    return a.bits_ == b.bits_;
  }
  // Total order for sorting/deduplicating collections of events.
  friend bool operator<(const Event& a, const Event& b);

 private:
  void require_same_universe(const Event& other) const;

  boost::dynamic_bitset<> bits_;
};

class StateSpace {
 public:
  // Throws DomainError on an empty list or duplicate names.
  explicit StateSpace(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t index) const { return names_.at(index); }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws DomainError for an unknown state.
  std::size_t index(std::string_view name) const;

  Event empty_event() const { return Event(size()); }
  Event full_event() const { return Event::full(size()); }
  Event event(std::span<const std::string> names) const;
  Event event(std::initializer_list<std::string_view> names) const;

  // "{a,b,c}" in declaration order.
  std::string format(const Event& e) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct PartitionReport {
  bool p1 = false;  // every state lies in a (non-empty) cell containing it
  bool p2 = false;  // a state's cell is the same whichever member names it
  friend bool operator==(const PartitionReport&, const PartitionReport&) = default;
};

// Classifies a candidate cell list without rejecting it.
PartitionReport check_partition_properties(std::size_t universe,
                                           std::span<const Event> cells);

class Partition {
 public:
  // Throws DomainError unless the cells are non-empty, pairwise disjoint and
  // cover the universe.
  Partition(std::size_t universe, std::vector<Event> cells);

  static Partition discrete(std::size_t universe);
  static Partition trivial(std::size_t universe);

  std::size_t universe() const { return cell_of_.size(); }
  const std::vector<Event>& cells() const { return cells_; }
  const Event& cell_of(std::size_t state) const { return cells_[cell_of_.at(state)]; }
  std::size_t cell_index(std::size_t state) const { return cell_of_.at(state); }

 private:
  std::vector<Event> cells_;
  std::vector<std::size_t> cell_of_;
};

struct FrameReport {
  bool serial = false;
  bool transitive = false;
  bool euclidean = false;
  friend bool operator==(const FrameReport&, const FrameReport&) = default;
};

// Accessibility relation R_i over state indices with its properties computed
// once by exhaustive pair/triple checks.
class DoxasticFrame {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  // Throws DomainError if a pair references a state outside the universe.
  DoxasticFrame(std::size_t universe, std::vector<Pair> pairs);

  std::size_t universe() const { return universe_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  bool related(std::size_t from, std::size_t to) const;
  Event successors(std::size_t from) const;
  const FrameReport& properties() const { return report_; }

 private:
  std::size_t universe_;
  std::vector<Pair> pairs_;
  std::vector<Event> successors_;
  FrameReport report_;
};

FrameReport check_frame_properties(const DoxasticFrame& frame);

// The 3-tuple <states, partitions, outcome map> plus optional doxastic frames
// and named events.
class EpistemicModel {
 public:
  EpistemicModel(StateSpace space, std::vector<std::string> agents,
                 std::vector<Partition> partitions,
                 std::vector<std::optional<DoxasticFrame>> frames = {},
                 std::map<std::string, Event> named_events = {},
                 std::optional<std::map<std::size_t, std::string>> outcomes = {});

  const StateSpace& space() const { return space_; }
  const std::vector<std::string>& agents() const { return agents_; }
  std::size_t agent_index(std::string_view agent) const;

  const Partition& partition(std::string_view agent) const;
  const Partition& partition_at(std::size_t agent) const { return partitions_.at(agent); }
  const std::optional<DoxasticFrame>& frame(std::string_view agent) const;

  const std::map<std::string, Event>& named_events() const { return named_events_; }
  // Throws DomainError for an unknown name.
  const Event& event(std::string_view name) const;

  const std::optional<std::map<std::size_t, std::string>>& outcomes() const {
    return outcomes_;
  }

 private:
  StateSpace space_;
  std::vector<std::string> agents_;
  std::vector<Partition> partitions_;
  std::vector<std::optional<DoxasticFrame>> frames_;
  std::map<std::string, Event> named_events_;
  std::optional<std::map<std::size_t, std::string>> outcomes_;
};

using AgentSet = std::span<const std::string>;

Event cell(const EpistemicModel& model, std::string_view agent, std::string_view state);

PartitionReport check_partition_properties(const EpistemicModel& model,
                                           std::string_view agent);

// K_i(E) = { w | cell_i(w) ⊆ E }.
Event knows(const EpistemicModel& model, std::string_view agent, const Event& e);

// B_i^F(E) = { w | F ∩ cell_i(w) ⊆ E }, taken literally: a state whose cell
// misses F belongs to every B_i^F(E). See vacuous_belief_states.
Event believes(const EpistemicModel& model, std::string_view agent, const Event& given,
               const Event& e);

// States whose cell does not meet F, i.e. where B_i^F holds vacuously.
Event vacuous_belief_states(const EpistemicModel& model, std::string_view agent,
                            const Event& given);

// K_I(E): intersection of K_i(E) over a non-empty group.
Event group_knows(const EpistemicModel& model, AgentSet agents, const Event& e);

// Greatest fixpoint of iterated group knowledge starting from E.
Event common_knowledge(const EpistemicModel& model, AgentSet agents, const Event& e);

// Same event computed as the union of the group's reachability components
// (minimal public events) that lie inside E.
Event common_knowledge_by_components(const EpistemicModel& model, AgentSet agents,
                                     const Event& e);

// Smallest event containing the state that is a union of cells for every
// agent (of the group, when given).
Event minimal_public_event(const EpistemicModel& model, std::string_view state);
Event minimal_public_event(const EpistemicModel& model, AgentSet agents,
                           std::string_view state);

// The distinct minimal public events, ordered by their smallest state.
std::vector<Event> public_components(const EpistemicModel& model, AgentSet agents);

// Self-evident to every agent: a union of each agent's cells.
bool is_public_event(const EpistemicModel& model, const Event& e);
bool is_public_event(const EpistemicModel& model, AgentSet agents, const Event& e);

// Validity tag standing in for the Θ (universal) / Φ (epistemic) operators.
enum class Validity { kUniversal, kEpistemic };

struct Belief {
  Event event;
  std::optional<Event> given;  // conditioning event F, when known
  friend bool operator==(const Belief&, const Belief&) = default;
};

class BeliefState {
 public:
  BeliefState() = default;
  // Duplicate events collapse to the first occurrence.
  BeliefState(std::string agent, std::vector<Belief> beliefs);
  BeliefState(std::string agent, std::vector<Event> beliefs);

  const std::string& agent() const { return agent_; }
  const std::vector<Belief>& beliefs() const { return beliefs_; }
  std::vector<Event> events() const;
  std::optional<Event> justification(const Event& belief) const;

  // No held belief is disjoint from the knowledge event.
  bool consistent_with(const Event& knowledge) const;

  friend bool operator==(const BeliefState&, const BeliefState&) = default;

 private:
  std::string agent_;
  std::vector<Belief> beliefs_;
};

struct Revision {
  BeliefState state;
  std::vector<Event> discarded;
};

// Knowledge dominates: each belief B becomes B ∩ K; beliefs emptied by the
// intersection are dropped and reported. Throws DomainError if K is empty.
Revision revise_beliefs(const BeliefState& state, const Event& knowledge);

// Every held belief meets the union of the strategy events.
bool check_congruence(const BeliefState& state, std::span<const Event> strategies);

}  // namespace zkg::epistemic

#endif  // ZKG_EPISTEMIC_HPP_
