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

#include <algorithm>
#include <sstream>

#include "zkg/error.hpp"

namespace zkg::epistemic {

// ---------------------------------------------------------------------------
// Event

Event Event::full(std::size_t universe) {
  Event e(universe);
  e.bits_.set();
  return e;
}

Event Event::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  return of(universe, std::span<const std::size_t>(members.begin(), members.size()));
}

Event Event::of(std::size_t universe, std::span<const std::size_t> members) {
  Event e(universe);
  for (auto m : members) e.insert(m);
  return e;
}

void Event::insert(std::size_t state) {
  if (state >= bits_.size()) {
    throw DomainError("state index " + std::to_string(state) + " outside a space of " +
                      std::to_string(bits_.size()) + " states");
  }
  bits_.set(state);
}

void Event::require_same_universe(const Event& other) const {
  if (bits_.size() != other.bits_.size()) {
    throw DomainError("events over different state spaces (" +
                      std::to_string(bits_.size()) + " vs " +
                      std::to_string(other.bits_.size()) + " states)");
  }
}

bool Event::is_subset_of(const Event& other) const {
  require_same_universe(other);
  return bits_.is_subset_of(other.bits_);
}

bool Event::intersects(const Event& other) const {
  require_same_universe(other);
  return bits_.intersects(other.bits_);
}

std::vector<std::size_t> Event::members() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
       i = bits_.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

Event Event::operator~() const {
  Event e = *this;
  e.bits_.flip();
  return e;
}

Event& Event::operator&=(const Event& other) {
  require_same_universe(other);
  bits_ &= other.bits_;
  return *this;
}

Event& Event::operator|=(const Event& other) {
  require_same_universe(other);
  bits_ |= other.bits_;
  return *this;
}

bool operator<(const Event& a, const Event& b) {
  if (a.universe() != b.universe()) return a.universe() < b.universe();
  return a.members() < b.members();
}

// ---------------------------------------------------------------------------
// StateSpace

StateSpace::StateSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("non-empty Ω required");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw DomainError("duplicate state '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> StateSpace::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t StateSpace::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw DomainError("unknown state '" + std::string(name) + "'");
}

Event StateSpace::event(std::span<const std::string> names) const {
  Event e = empty_event();
  for (const auto& n : names) e.insert(index(n));
  return e;
}

Event StateSpace::event(std::initializer_list<std::string_view> names) const {
  Event e = empty_event();
  for (auto n : names) e.insert(index(n));
  return e;
}

std::string StateSpace::format(const Event& e) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto m : e.members()) {
    if (!first) os << ',';
    os << name(m);
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Partitions

PartitionReport check_partition_properties(std::size_t universe,
                                           std::span<const Event> cells) {
  PartitionReport report{true, true};
  std::vector<int> owner(universe, -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Event& cell = cells[c];
    if (cell.universe() != universe || cell.empty()) {
      // A cell that names no state (or foreign states) cannot be h(w) for any w.
      report.p1 = false;
      continue;
    }
    for (auto s : cell.members()) {
      // Listed in an earlier cell too: two different h(w) for one state.
      if (owner[s] >= 0) report.p2 = false;
      owner[s] = static_cast<int>(c);
    }
  }
  for (std::size_t s = 0; s < universe; ++s) {
    if (owner[s] < 0) report.p1 = false;
  }
  return report;
}

Partition::Partition(std::size_t universe, std::vector<Event> cells)
    : cells_(std::move(cells)), cell_of_(universe, 0) {
  const auto report = check_partition_properties(universe, cells_);
  if (!report.p1 || !report.p2) {
    throw DomainError(std::string("not a partition:") + (report.p1 ? "" : " P1 fails") +
                      (report.p2 ? "" : " P2 fails"));
  }
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    for (auto s : cells_[c].members()) cell_of_[s] = c;
  }
}

Partition Partition::discrete(std::size_t universe) {
  std::vector<Event> cells;
  for (std::size_t s = 0; s < universe; ++s) cells.push_back(Event::of(universe, {s}));
  return Partition(universe, std::move(cells));
}

Partition Partition::trivial(std::size_t universe) {
  return Partition(universe, {Event::full(universe)});
}

// ---------------------------------------------------------------------------
// Doxastic frames

DoxasticFrame::DoxasticFrame(std::size_t universe, std::vector<Pair> pairs)
    : universe_(universe), pairs_(std::move(pairs)), successors_(universe, Event(universe)) {
  for (const auto& [from, to] : pairs_) {
    if (from >= universe || to >= universe) {
      throw DomainError("frame pair references a state outside the space");
    }
    successors_[from].insert(to);
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());

  report_.serial = std::all_of(successors_.begin(), successors_.end(),
                               [](const Event& e) { return !e.empty(); });
  report_.transitive = true;
  report_.euclidean = true;
  for (std::size_t a = 0; a < universe; ++a) {
    for (std::size_t b = 0; b < universe; ++b) {
      if (!related(a, b)) continue;
      for (std::size_t c = 0; c < universe; ++c) {
        // aRb, bRc => aRc
        if (related(b, c) && !related(a, c)) report_.transitive = false;
        // aRb, aRc => bRc
        if (related(a, c) && !related(b, c)) report_.euclidean = false;
      }
    }
  }
}

bool DoxasticFrame::related(std::size_t from, std::size_t to) const {
  return from < universe_ && successors_[from].contains(to);
}

Event DoxasticFrame::successors(std::size_t from) const { return successors_.at(from); }

FrameReport check_frame_properties(const DoxasticFrame& frame) { return frame.properties(); }

// ---------------------------------------------------------------------------
// EpistemicModel

EpistemicModel::EpistemicModel(StateSpace space, std::vector<std::string> agents,
                               std::vector<Partition> partitions,
                               std::vector<std::optional<DoxasticFrame>> frames,
                               std::map<std::string, Event> named_events,
                               std::optional<std::map<std::size_t, std::string>> outcomes)
    : space_(std::move(space)),
      agents_(std::move(agents)),
      partitions_(std::move(partitions)),
      frames_(std::move(frames)),
      named_events_(std::move(named_events)),
      outcomes_(std::move(outcomes)) {
  if (agents_.empty()) throw DomainError("at least one agent required");
  if (partitions_.size() != agents_.size()) {
    throw DomainError("one partition per agent required");
  }
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (agents_[i] == agents_[j]) throw DomainError("duplicate agent '" + agents_[i] + "'");
    }
    if (partitions_[i].universe() != space_.size()) {
      throw DomainError("partition of agent '" + agents_[i] + "' is over a different space");
    }
  }
  if (frames_.empty()) frames_.resize(agents_.size());
  if (frames_.size() != agents_.size()) throw DomainError("frame list must match agents");
  for (const auto& f : frames_) {
    if (f && f->universe() != space_.size()) {
      throw DomainError("frame over a different space");
    }
  }
  for (const auto& [name, e] : named_events_) {
    if (e.universe() != space_.size()) {
      throw DomainError("event '" + name + "' is over a different space");
    }
  }
  if (outcomes_) {
    for (const auto& [state, label] : *outcomes_) {
      if (state >= space_.size()) throw DomainError("outcome for an unknown state");
    }
  }
}

std::size_t EpistemicModel::agent_index(std::string_view agent) const {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i] == agent) return i;
  }
  throw DomainError("unknown agent '" + std::string(agent) + "'");
}

const Partition& EpistemicModel::partition(std::string_view agent) const {
  return partitions_[agent_index(agent)];
}

const std::optional<DoxasticFrame>& EpistemicModel::frame(std::string_view agent) const {
  return frames_[agent_index(agent)];
}

const Event& EpistemicModel::event(std::string_view name) const {
  auto it = named_events_.find(std::string(name));
  if (it == named_events_.end()) {
    throw DomainError("unknown event '" + std::string(name) + "'");
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Operators

namespace {

void require_event(const EpistemicModel& model, const Event& e) {
  if (e.universe() != model.space().size()) {
    throw DomainError("event is not over the model's state space");
  }
}

void require_group(AgentSet agents) {
  if (agents.empty()) throw DomainError("agent group must be non-empty");
}

}  // namespace

Event cell(const EpistemicModel& model, std::string_view agent, std::string_view state) {
  const auto& partition = model.partition(agent);
  return partition.cell_of(model.space().index(state));
}

PartitionReport check_partition_properties(const EpistemicModel& model,
                                           std::string_view agent) {
  const auto& partition = model.partition(agent);
  return check_partition_properties(partition.universe(), partition.cells());
}

Event knows(const EpistemicModel& model, std::string_view agent, const Event& e) {
  require_event(model, e);
  Event out = model.space().empty_event();
  for (const auto& c : model.partition(agent).cells()) {
    if (c.is_subset_of(e)) out |= c;
  }
  return out;
}

Event believes(const EpistemicModel& model, std::string_view agent, const Event& given,
               const Event& e) {
  require_event(model, e);
  require_event(model, given);
  Event out = model.space().empty_event();
  for (const auto& c : model.partition(agent).cells()) {
    if ((given & c).is_subset_of(e)) out |= c;
  }
  return out;
}

Event vacuous_belief_states(const EpistemicModel& model, std::string_view agent,
                            const Event& given) {
  require_event(model, given);
  Event out = model.space().empty_event();
  for (const auto& c : model.partition(agent).cells()) {
    if (!c.intersects(given)) out |= c;
  }
  return out;
}

Event group_knows(const EpistemicModel& model, AgentSet agents, const Event& e) {
  require_group(agents);
  Event out = knows(model, agents.front(), e);
  for (const auto& agent : agents.subspan(1)) out &= knows(model, agent, e);
  return out;
}

Event common_knowledge(const EpistemicModel& model, AgentSet agents, const Event& e) {
  require_group(agents);
  require_event(model, e);
  Event current = e;
  while (true) {
    Event next = group_knows(model, agents, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

Event minimal_public_event(const EpistemicModel& model, AgentSet agents,
                           std::string_view state) {
  require_group(agents);
  const std::size_t w = model.space().index(state);
  Event current = Event::of(model.space().size(), {w});
  while (true) {
    Event next = current;
    for (const auto& agent : agents) {
      const auto& partition = model.partition(agent);
      for (auto s : current.members()) next |= partition.cell_of(s);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

Event minimal_public_event(const EpistemicModel& model, std::string_view state) {
  return minimal_public_event(model, model.agents(), state);
}

std::vector<Event> public_components(const EpistemicModel& model, AgentSet agents) {
  std::vector<Event> out;
  Event seen = model.space().empty_event();
  for (std::size_t s = 0; s < model.space().size(); ++s) {
    if (seen.contains(s)) continue;
    Event component = minimal_public_event(model, agents, model.space().name(s));
    seen |= component;
    out.push_back(std::move(component));
  }
  return out;
}

Event common_knowledge_by_components(const EpistemicModel& model, AgentSet agents,
                                     const Event& e) {
  require_event(model, e);
  Event out = model.space().empty_event();
  for (const auto& component : public_components(model, agents)) {
    if (component.is_subset_of(e)) out |= component;
  }
  return out;
}

bool is_public_event(const EpistemicModel& model, AgentSet agents, const Event& e) {
  require_event(model, e);
  for (const auto& agent : agents) {
    for (const auto& c : model.partition(agent).cells()) {
      if (c.intersects(e) && !c.is_subset_of(e)) return false;
    }
  }
  return true;
}

bool is_public_event(const EpistemicModel& model, const Event& e) {
  return is_public_event(model, model.agents(), e);
}

// ---------------------------------------------------------------------------
// Beliefs

BeliefState::BeliefState(std::string agent, std::vector<Belief> beliefs)
    : agent_(std::move(agent)) {
  for (auto& b : beliefs) {
    auto same = [&](const Belief& held) { return held.event == b.event; };
    if (std::none_of(beliefs_.begin(), beliefs_.end(), same)) {
      beliefs_.push_back(std::move(b));
    }
  }
}

BeliefState::BeliefState(std::string agent, std::vector<Event> beliefs)
    : BeliefState(std::move(agent), [&] {
        std::vector<Belief> out;
        for (auto& e : beliefs) out.push_back(Belief{std::move(e), std::nullopt});
        return out;
      }()) {}

std::vector<Event> BeliefState::events() const {
  std::vector<Event> out;
  for (const auto& b : beliefs_) out.push_back(b.event);
  return out;
}

std::optional<Event> BeliefState::justification(const Event& belief) const {
  for (const auto& b : beliefs_) {
    if (b.event == belief) return b.given;
  }
  return std::nullopt;
}

bool BeliefState::consistent_with(const Event& knowledge) const {
  return std::all_of(beliefs_.begin(), beliefs_.end(),
                     [&](const Belief& b) { return b.event.intersects(knowledge); });
}

Revision revise_beliefs(const BeliefState& state, const Event& knowledge) {
  if (knowledge.empty()) {
    throw DomainError("knowledge event must be non-empty");
  }
  std::vector<Belief> kept;
  std::vector<Event> discarded;
  for (const auto& b : state.beliefs()) {
    Event revised = b.event & knowledge;
    if (revised.empty()) {
      discarded.push_back(b.event);
    } else {
      kept.push_back(Belief{std::move(revised), b.given});
    }
  }
  return Revision{BeliefState(state.agent(), std::move(kept)), std::move(discarded)};
}

bool check_congruence(const BeliefState& state, std::span<const Event> strategies) {
  if (state.beliefs().empty()) return true;
  if (strategies.empty()) return false;
  Event support(strategies.front().universe());
  for (const auto& s : strategies) support |= s;
  return std::all_of(state.beliefs().begin(), state.beliefs().end(),
                     [&](const Belief& b) { return b.event.intersects(support); });
}

}  // namespace zkg::epistemic
