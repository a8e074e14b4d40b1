// Copyright 2026 The MULTISS Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multiss/formats.hpp"
#include "multiss/oracle.hpp"
#include "multiss/protocol.hpp"
#include "multiss/random.hpp"
#include "multiss/topology.hpp"

namespace multiss {

struct SimNode {
  std::string network_id;
  std::size_t node_index = 0;
  std::optional<NodeShare> store;
  std::size_t generation = 0;  // which deal the store belongs to (0 = none)
  bool alive = true;
  bool compromised = false;
  bool stale = false;  // missed a refresh round while dead
};

// One payload on a link. Deal payloads carry the share, refresh payloads
// the delta taking the node from `epoch` to `epoch + 1`.
struct LinkMessage {
  HeldKind kind = HeldKind::Share;
  std::size_t generation = 0;
  std::size_t node_index = 0;
  std::size_t epoch = 0;
  std::vector<FieldElement> values;
};

struct LinkModel {
  LinkKind kind = LinkKind::Classical;
  std::vector<LinkMessage> transcript;  // stays empty for ITS links
};

// Everything the adversary holds, keyed by dealing generation.
struct Captured {
  std::size_t generation = 0;
  Observation obs;
  std::vector<FieldElement> values;
};

struct AdversaryView {
  std::vector<Captured> captured;
  bool transcripts_decrypted = false;
};

struct DeliveryLog {
  std::size_t delivered = 0;  // messages handed to live nodes
  std::size_t recorded = 0;   // messages added to classical transcripts
  std::vector<NodeRef> stale;  // nodes that missed this round
};

struct OwnerResult {
  std::optional<std::vector<std::uint8_t>> secret;
  std::optional<Infeasible> infeasible;
  std::string error;  // e.g. epoch mismatch on an explicit selection
  std::vector<NodeRef> used;
};

struct AdversaryResult {
  Verdict verdict = Verdict::NoInformation;
  std::size_t observations = 0;
  std::optional<std::vector<std::uint8_t>> recovered;
};

class Simulation {
 public:
  Simulation(Topology topology, std::vector<std::uint8_t> secret, std::uint64_t seed);

  const Topology& topology() const { return topology_; }
  const std::vector<std::uint8_t>& secret() const { return secret_; }
  std::size_t generation() const { return generation_; }
  std::size_t epoch() const { return epoch_; }
  const std::vector<std::vector<SimNode>>& nodes() const { return nodes_; }
  const std::vector<LinkModel>& links() const { return links_; }
  const AdversaryView& view() const { return view_; }

  DeliveryLog owner_store();
  DeliveryLog owner_refresh();
  // Auto when `selection` is empty.
  OwnerResult owner_reconstruct(const std::optional<std::vector<NodeRef>>& selection = {}) const;

  std::size_t compromise_node(std::size_t network, std::size_t node);
  std::size_t compromise_network(std::size_t network);
  void fail_node(std::size_t network, std::size_t node);
  std::size_t hndl_decrypt_classical();

  AdversaryResult adversary_attempt() const;

  std::string serialize() const;
  static Simulation deserialize(std::string_view bytes);
  void save_state(const std::filesystem::path& path) const;
  static Simulation load_state(const std::filesystem::path& path);

 private:
  SimNode& node(std::size_t network, std::size_t index);
  void capture(std::size_t generation, const Observation& obs,
               const std::vector<FieldElement>& values);
  void send(std::size_t network, LinkMessage msg, DeliveryLog& log);

  Topology topology_;
  std::vector<std::uint8_t> secret_;
  std::vector<FieldElement> chunks_;
  SeededRandom rng_;
  std::size_t generation_ = 0;
  std::size_t epoch_ = 0;
  std::vector<std::size_t> rounds_;  // refresh rounds per generation
  std::vector<std::vector<SimNode>> nodes_;
  std::vector<LinkModel> links_;
  AdversaryView view_;
};

// ---- scenarios --------------------------------------------------------------

enum class EventType {
  Deal,
  Refresh,
  CompromiseNetwork,
  CompromiseNode,
  FailNode,
  AttemptReconstruct,
  HndlDecryptClassical,
};

enum class Actor { Owner, Adversary };

struct Event {
  EventType type = EventType::Deal;
  std::string network;                       // compromise/fail targets
  std::size_t node = 0;
  Actor actor = Actor::Owner;
  // Owner reconstruct only: explicit (network id, node) picks; Auto if absent.
  std::optional<std::vector<std::pair<std::string, std::size_t>>> selection;
};

struct Scenario {
  std::optional<Topology> topology;  // may be absent when resuming from state
  std::vector<std::uint8_t> secret;
  std::vector<Event> events;
};

// Parses the scenario JSON; malformed input is UsageError.
Scenario parse_scenario(const Json& j);

struct ScenarioReport {
  Json json;          // per-event outcomes and the final verdicts
  std::string summary;  // human-readable lines
};

ScenarioReport run_scenario(const Scenario& scenario, std::uint64_t seed);
// Continues `sim` with more events.
ScenarioReport run_events(Simulation& sim, const std::vector<Event>& events);

}  // namespace multiss
