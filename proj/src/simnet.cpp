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

#include "multiss/simnet.hpp"

#include <boost/crc.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>

#include "multiss/errors.hpp"

namespace multiss {
namespace {

constexpr char kMagic[4] = {'M', 'S', 'S', '1'};
constexpr std::uint32_t kStateVersion = 1;

std::string bytes_to_hex(const std::vector<std::uint8_t>& b) {
  static const char* d = "0123456789abcdef";
  std::string out;
  out.reserve(b.size() * 2);
  for (auto c : b) {
    out += d[c >> 4];
    out += d[c & 15];
  }
  return out;
}

std::vector<std::uint8_t> hex_to_bytes(const std::string& s) {
  if (s.size() % 2) throw UsageError("odd-length hex byte string");
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw UsageError(std::string("bad hex digit '") + c + "'");
  };
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < s.size(); i += 2)
    out.push_back(static_cast<std::uint8_t>(nib(s[i]) * 16 + nib(s[i + 1])));
  return out;
}

Json values_json(const std::vector<FieldElement>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(e.to_hex());
  return a;
}

std::vector<FieldElement> values_from(const Json& a, const Field& f) {
  std::vector<FieldElement> out;
  for (const auto& h : a) out.push_back(f.from_hex(h.get<std::string>()));
  return out;
}

const char* kind_name(HeldKind k) { return k == HeldKind::Share ? "share" : "delta"; }
HeldKind kind_from(const std::string& s) {
  if (s == "share") return HeldKind::Share;
  if (s == "delta") return HeldKind::Delta;
  throw LoadError("unknown payload kind '" + s + "'");
}

std::string node_label(const Topology& t, NodeRef r) {
  return t.network(r.network).id + "/" + std::to_string(r.node);
}

void put_be(std::string& out, std::uint64_t v, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) out += static_cast<char>((v >> (8 * i)) & 0xff);
}

std::uint64_t get_be(std::string_view in, std::size_t at, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v = (v << 8) | static_cast<std::uint8_t>(in[at + i]);
  return v;
}

}  // namespace

Simulation::Simulation(Topology topology, std::vector<std::uint8_t> secret, std::uint64_t seed)
    : topology_(std::move(topology)), secret_(std::move(secret)), rng_(seed) {
  chunks_ = encode_secret(topology_.field(), secret_);
  for (const auto& net : topology_.networks()) {
    std::vector<SimNode> nodes;
    for (std::size_t x = 1; x <= net.node_count; ++x) nodes.push_back(SimNode{net.id, x, std::nullopt});
    nodes_.push_back(std::move(nodes));
    links_.push_back({net.link, {}});
  }
}

SimNode& Simulation::node(std::size_t network, std::size_t index) {
  if (network >= nodes_.size() || index < 1 || index > nodes_[network].size())
    throw UsageError("no node " + std::to_string(index) + " in network " + std::to_string(network));
  return nodes_[network][index - 1];
}

void Simulation::capture(std::size_t generation, const Observation& obs,
                         const std::vector<FieldElement>& values) {
  for (const auto& c : view_.captured) {
    if (c.generation == generation && c.obs.kind == obs.kind && c.obs.network == obs.network &&
        c.obs.node == obs.node && c.obs.epoch == obs.epoch)
      return;
  }
  view_.captured.push_back({generation, obs, values});
}

void Simulation::send(std::size_t network, LinkMessage msg, DeliveryLog& log) {
  auto& link = links_[network];
  if (link.kind != LinkKind::Classical) return;
  if (view_.transcripts_decrypted)
    capture(msg.generation, {msg.kind, network, msg.node_index, msg.epoch}, msg.values);
  link.transcript.push_back(std::move(msg));
  ++log.recorded;
}

DeliveryLog Simulation::owner_store() {
  const ShareMap shares = deal(chunks_, topology_, rng_);
  ++generation_;
  epoch_ = 0;
  rounds_.push_back(0);
  DeliveryLog log;
  for (std::size_t j = 0; j < topology_.network_count(); ++j) {
    for (const auto& share : shares.at(topology_.network(j).id)) {
      send(j, {HeldKind::Share, generation_, share.node_index, 0, share.values}, log);
      SimNode& n = node(j, share.node_index);
      if (!n.alive) {
        n.stale = true;
        log.stale.push_back({j, share.node_index});
        continue;
      }
      n.store = share;
      n.generation = generation_;
      n.stale = false;
      ++log.delivered;
      if (n.compromised) capture(generation_, {HeldKind::Share, j, share.node_index, 0}, share.values);
    }
  }
  return log;
}

DeliveryLog Simulation::owner_refresh() {
  if (generation_ == 0) throw UsageError("refresh before any deal");
  const RefreshMap deltas = refresh(topology_, epoch_, chunks_.size(), rng_);
  DeliveryLog log;
  for (std::size_t j = 0; j < topology_.network_count(); ++j) {
    for (const auto& d : deltas.at(topology_.network(j).id)) {
      send(j, {HeldKind::Delta, generation_, d.node_index, epoch_, d.deltas}, log);
      SimNode& n = node(j, d.node_index);
      const bool current = n.alive && !n.stale && n.store && n.generation == generation_ &&
                           n.store->epoch == epoch_;
      if (!current) {
        n.stale = true;
        log.stale.push_back({j, d.node_index});
        continue;
      }
      n.store = apply_refresh(*n.store, d);
      ++log.delivered;
      if (n.compromised) {
        capture(generation_, {HeldKind::Delta, j, d.node_index, epoch_}, d.deltas);
        capture(generation_, {HeldKind::Share, j, d.node_index, epoch_ + 1}, n.store->values);
      }
    }
  }
  ++epoch_;
  ++rounds_.back();
  return log;
}

std::size_t Simulation::compromise_node(std::size_t network, std::size_t index) {
  SimNode& n = node(network, index);
  if (n.compromised) return 0;
  n.compromised = true;
  if (!n.store) return 0;
  const auto before = view_.captured.size();
  capture(n.generation, {HeldKind::Share, network, index, n.store->epoch}, n.store->values);
  return view_.captured.size() - before;
}

std::size_t Simulation::compromise_network(std::size_t network) {
  if (network >= nodes_.size()) throw UsageError("no network " + std::to_string(network));
  std::size_t total = 0;
  for (std::size_t x = 1; x <= nodes_[network].size(); ++x) total += compromise_node(network, x);
  return total;
}

void Simulation::fail_node(std::size_t network, std::size_t index) {
  node(network, index).alive = false;
}

std::size_t Simulation::hndl_decrypt_classical() {
  if (view_.transcripts_decrypted) return 0;
  view_.transcripts_decrypted = true;
  const auto before = view_.captured.size();
  for (std::size_t j = 0; j < links_.size(); ++j)
    for (const auto& m : links_[j].transcript)
      capture(m.generation, {m.kind, j, m.node_index, m.epoch}, m.values);
  return view_.captured.size() - before;
}

OwnerResult Simulation::owner_reconstruct(const std::optional<std::vector<NodeRef>>& selection) const {
  OwnerResult out;
  if (generation_ == 0) {
    out.infeasible = Infeasible{};
    out.infeasible->reason = "nothing dealt";
    return out;
  }
  auto answers = [&](NodeRef r) {
    const SimNode& n = nodes_[r.network][r.node - 1];
    return n.alive && n.store && n.generation == generation_;
  };
  auto fresh = [&](NodeRef r) {
    const SimNode& n = nodes_[r.network][r.node - 1];
    return answers(r) && !n.stale && n.store->epoch == epoch_;
  };
  std::vector<NodeRef> pick;
  if (selection) {
    for (const auto& r : *selection) {
      if (r.network >= nodes_.size() || r.node < 1 || r.node > nodes_[r.network].size())
        throw UsageError("selection names a node outside the topology");
      if (answers(r)) pick.push_back(r);
    }
  } else {
    // Mother quorum plus the daughters with the smallest quorums.
    auto quorum = [&](std::size_t j) {
      std::vector<NodeRef> q;
      for (std::size_t x = 1; x <= nodes_[j].size(); ++x)
        if (fresh({j, x}) && q.size() < topology_.network(j).inner_degree + 1) q.push_back({j, x});
      return q.size() == topology_.network(j).inner_degree + 1 ? q : std::vector<NodeRef>{};
    };
    auto mother = quorum(topology_.mother_index());
    auto daughters = topology_.daughter_indices();
    std::stable_sort(daughters.begin(), daughters.end(), [&](std::size_t a, std::size_t b) {
      return topology_.network(a).inner_degree < topology_.network(b).inner_degree;
    });
    std::vector<NodeRef> chosen;
    std::size_t got = 0;
    for (std::size_t j : daughters) {
      if (got == topology_.outer_degree()) break;
      auto q = quorum(j);
      if (q.empty()) continue;
      chosen.insert(chosen.end(), q.begin(), q.end());
      ++got;
    }
    if (!mother.empty() && got == topology_.outer_degree()) {
      pick = mother;
      pick.insert(pick.end(), chosen.begin(), chosen.end());
    } else {
      // Not enough: hand everything fresh to reconstruct for the diagnosis.
      for (std::size_t j = 0; j < nodes_.size(); ++j)
        for (std::size_t x = 1; x <= nodes_[j].size(); ++x)
          if (fresh({j, x})) pick.push_back({j, x});
    }
  }
  ShareMap shares;
  for (const auto& r : pick) {
    shares[topology_.network(r.network).id].push_back(*nodes_[r.network][r.node - 1].store);
  }
  out.used = pick;
  try {
    auto res = reconstruct(shares, topology_);
    if (auto* inf = std::get_if<Infeasible>(&res)) {
      out.infeasible = *inf;
    } else {
      out.secret = decode_secret(topology_.field(), std::get<std::vector<FieldElement>>(res));
    }
  } catch (const EpochMismatch& e) {
    out.error = e.what();
  } catch (const CorruptionError& e) {
    out.error = e.what();
  }
  return out;
}

AdversaryResult Simulation::adversary_attempt() const {
  AdversaryResult out;
  out.observations = view_.captured.size();
  if (view_.captured.empty()) return out;
  const Field& f = topology_.field();
  // One randomness block per dealing generation; the secret column is shared.
  std::vector<FunctionalLayout> layouts;
  std::vector<std::size_t> offset;
  std::size_t cols = 1;
  for (std::size_t g = 0; g < rounds_.size(); ++g) {
    layouts.emplace_back(topology_, rounds_[g]);
    offset.push_back(cols);
    cols += layouts.back().columns() - 1;
  }
  Matrix m(f, 0, cols);
  for (const auto& c : view_.captured) {
    const auto g = c.generation - 1;
    const auto row = layouts[g].row(c.obs);
    std::vector<FieldElement> full(cols, f.zero());
    full[0] = row[0];
    for (std::size_t k = 1; k < row.size(); ++k) full[offset[g] + k - 1] = row[k];
    m.append_row(full);
  }
  if (!unit_in_row_span(m, 0)) return out;
  out.verdict = Verdict::Reconstructs;
  std::vector<FieldElement> target(cols, f.zero());
  target[0] = f.one();
  const auto lambda = row_combination(m, target);
  if (!lambda) return out;
  std::vector<FieldElement> chunks(chunks_.size(), f.zero());
  for (std::size_t i = 0; i < view_.captured.size(); ++i)
    for (std::size_t c = 0; c < chunks.size(); ++c)
      chunks[c] += (*lambda)[i] * view_.captured[i].values[c];
  try {
    out.recovered = decode_secret(f, chunks);
  } catch (const CorruptionError&) {
  }
  return out;
}

// ---- persistence --------------------------------------------------------------

std::string Simulation::serialize() const {
  Json nodes = Json::array();
  for (const auto& net : nodes_) {
    Json list = Json::array();
    for (const auto& n : net) {
      Json store = nullptr;
      if (n.store) store = {{"epoch", n.store->epoch}, {"values", values_json(n.store->values)}};
      list.push_back({{"alive", n.alive},
                      {"compromised", n.compromised},
                      {"stale", n.stale},
                      {"generation", n.generation},
                      {"store", store}});
    }
    nodes.push_back(list);
  }
  Json links = Json::array();
  for (const auto& l : links_) {
    Json t = Json::array();
    for (const auto& m : l.transcript)
      t.push_back({{"kind", kind_name(m.kind)},
                   {"generation", m.generation},
                   {"node", m.node_index},
                   {"epoch", m.epoch},
                   {"values", values_json(m.values)}});
    links.push_back(t);
  }
  Json captured = Json::array();
  for (const auto& c : view_.captured)
    captured.push_back({{"generation", c.generation},
                        {"kind", kind_name(c.obs.kind)},
                        {"network", c.obs.network},
                        {"node", c.obs.node},
                        {"epoch", c.obs.epoch},
                        {"values", values_json(c.values)}});
  const Json state = {{"topology", topology_to_json(topology_)},
                      {"secret", bytes_to_hex(secret_)},
                      {"rng", rng_.state()},
                      {"generation", generation_},
                      {"epoch", epoch_},
                      {"rounds", rounds_},
                      {"nodes", nodes},
                      {"links", links},
                      {"view", {{"decrypted", view_.transcripts_decrypted}, {"captured", captured}}}};
  const std::string payload = state.dump();
  std::string out(kMagic, 4);
  put_be(out, kStateVersion, 4);
  put_be(out, payload.size(), 8);
  out += payload;
  boost::crc_32_type crc;
  crc.process_bytes(out.data(), out.size());
  put_be(out, crc.checksum(), 4);
  return out;
}

Simulation Simulation::deserialize(std::string_view bytes) {
  constexpr std::size_t header = 16;
  if (bytes.size() < header + 4) throw LoadError("state file truncated (" + std::to_string(bytes.size()) + " bytes)");
  if (bytes.substr(0, 4) != std::string_view(kMagic, 4)) throw LoadError("not a state file (bad magic)");
  const auto version = get_be(bytes, 4, 4);
  if (version != kStateVersion)
    throw LoadError("unsupported state version " + std::to_string(version) + ", expected " +
                    std::to_string(kStateVersion));
  const auto len = get_be(bytes, 8, 8);
  if (len != bytes.size() - header - 4)
    throw LoadError("state file truncated or padded: payload length " + std::to_string(len) +
                    ", file holds " + std::to_string(bytes.size() - header - 4));
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), header + len);
  if (crc.checksum() != get_be(bytes, header + len, 4)) throw LoadError("state file checksum mismatch");
  try {
    const Json s = Json::parse(bytes.substr(header, len));
    Topology topo = topology_from_json(s.at("topology"));
    const Field f = topo.field();
    Simulation sim(topo, hex_to_bytes(s.at("secret").get<std::string>()), 0);
    sim.rng_.restore(s.at("rng").get<std::string>());
    sim.generation_ = s.at("generation").get<std::size_t>();
    sim.epoch_ = s.at("epoch").get<std::size_t>();
    sim.rounds_ = s.at("rounds").get<std::vector<std::size_t>>();
    const auto& nodes = s.at("nodes");
    if (nodes.size() != sim.nodes_.size()) throw LoadError("node table does not match topology");
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (nodes[j].size() != sim.nodes_[j].size()) throw LoadError("node table does not match topology");
      for (std::size_t x = 0; x < nodes[j].size(); ++x) {
        const auto& n = nodes[j][x];
        SimNode& dst = sim.nodes_[j][x];
        dst.alive = n.at("alive").get<bool>();
        dst.compromised = n.at("compromised").get<bool>();
        dst.stale = n.at("stale").get<bool>();
        dst.generation = n.at("generation").get<std::size_t>();
        if (!n.at("store").is_null())
          dst.store = NodeShare{dst.network_id, dst.node_index, n.at("store").at("epoch").get<std::size_t>(),
                                values_from(n.at("store").at("values"), f)};
      }
    }
    const auto& links = s.at("links");
    if (links.size() != sim.links_.size()) throw LoadError("link table does not match topology");
    for (std::size_t j = 0; j < links.size(); ++j)
      for (const auto& m : links[j])
        sim.links_[j].transcript.push_back({kind_from(m.at("kind").get<std::string>()),
                                            m.at("generation").get<std::size_t>(),
                                            m.at("node").get<std::size_t>(),
                                            m.at("epoch").get<std::size_t>(),
                                            values_from(m.at("values"), f)});
    sim.view_.transcripts_decrypted = s.at("view").at("decrypted").get<bool>();
    for (const auto& c : s.at("view").at("captured"))
      sim.view_.captured.push_back({c.at("generation").get<std::size_t>(),
                                    {kind_from(c.at("kind").get<std::string>()),
                                     c.at("network").get<std::size_t>(), c.at("node").get<std::size_t>(),
                                     c.at("epoch").get<std::size_t>()},
                                    values_from(c.at("values"), f)});
    for (const auto& c : sim.view_.captured)
      if (c.generation < 1 || c.generation > sim.rounds_.size() || c.obs.network >= sim.nodes_.size())
        throw LoadError("captured entry out of range");
    return sim;
  } catch (const LoadError&) {
    throw;
  } catch (const std::exception& e) {
    throw LoadError(std::string("corrupt state payload: ") + e.what());
  }
}

void Simulation::save_state(const std::filesystem::path& path) const { write_atomic(path, serialize()); }

Simulation Simulation::load_state(const std::filesystem::path& path) {
  const auto b = read_bytes(path);
  return deserialize(std::string_view(reinterpret_cast<const char*>(b.data()), b.size()));
}

// ---- scenarios --------------------------------------------------------------------

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) throw UsageError("scenario: expected a JSON object");
  Scenario sc;
  try {
    if (j.contains("topology")) sc.topology = topology_from_json(j.at("topology"));
  } catch (const LoadError& e) {
    throw UsageError(std::string("scenario: ") + e.what());
  }
  if (j.contains("secret") && j.contains("secret_hex"))
    throw UsageError("scenario: give either \"secret\" or \"secret_hex\", not both");
  try {
    if (j.contains("secret")) {
      const auto s = j.at("secret").get<std::string>();
      sc.secret.assign(s.begin(), s.end());
    } else if (j.contains("secret_hex")) {
      sc.secret = hex_to_bytes(j.at("secret_hex").get<std::string>());
    }
  } catch (const Json::exception&) {
    throw UsageError("scenario: secret must be a string");
  }
  if (!j.contains("events") || !j.at("events").is_array())
    throw UsageError("scenario: \"events\" must be an array");
  std::size_t i = 0;
  for (const auto& e : j.at("events")) {
    ++i;
    const std::string where = "scenario event " + std::to_string(i);
    if (!e.is_object() || !e.contains("type") || !e.at("type").is_string())
      throw UsageError(where + ": missing \"type\"");
    const auto type = e.at("type").get<std::string>();
    Event ev;
    auto target = [&](bool with_node) {
      if (!e.contains("network") || !e.at("network").is_string())
        throw UsageError(where + ": \"" + type + "\" needs \"network\"");
      ev.network = e.at("network").get<std::string>();
      if (with_node) {
        if (!e.contains("node") || !e.at("node").is_number_unsigned())
          throw UsageError(where + ": \"" + type + "\" needs a positive \"node\"");
        ev.node = e.at("node").get<std::size_t>();
      }
    };
    if (type == "deal") {
      ev.type = EventType::Deal;
    } else if (type == "refresh") {
      ev.type = EventType::Refresh;
    } else if (type == "compromise_network") {
      ev.type = EventType::CompromiseNetwork;
      target(false);
    } else if (type == "compromise_node") {
      ev.type = EventType::CompromiseNode;
      target(true);
    } else if (type == "fail_node") {
      ev.type = EventType::FailNode;
      target(true);
    } else if (type == "hndl_decrypt_classical") {
      ev.type = EventType::HndlDecryptClassical;
    } else if (type == "reconstruct") {
      ev.type = EventType::AttemptReconstruct;
      const auto actor = e.value("actor", std::string("owner"));
      if (actor == "owner") {
        ev.actor = Actor::Owner;
      } else if (actor == "adversary") {
        ev.actor = Actor::Adversary;
      } else {
        throw UsageError(where + ": actor must be \"owner\" or \"adversary\"");
      }
      if (e.contains("nodes")) {
        if (ev.actor != Actor::Owner) throw UsageError(where + ": only the owner picks nodes");
        if (!e.at("nodes").is_array()) throw UsageError(where + ": \"nodes\" must be an array");
        ev.selection.emplace();
        for (const auto& n : e.at("nodes")) {
          if (!n.is_object() || !n.contains("network") || !n.contains("node") ||
              !n.at("network").is_string() || !n.at("node").is_number_unsigned())
            throw UsageError(where + ": each node needs \"network\" and \"node\"");
          ev.selection->emplace_back(n.at("network").get<std::string>(), n.at("node").get<std::size_t>());
        }
      }
    } else {
      throw UsageError(where + ": unknown event type '" + type + "'");
    }
    sc.events.push_back(std::move(ev));
  }
  return sc;
}

namespace {

Json refs_json(const Topology& t, const std::vector<NodeRef>& refs) {
  Json a = Json::array();
  for (const auto& r : refs) a.push_back(node_label(t, r));
  return a;
}

std::size_t node_in(const Topology& t, std::size_t j, std::size_t node) {
  if (node < 1 || node > t.network(j).node_count)
    throw UsageError("network '" + t.network(j).id + "' has no node " + std::to_string(node));
  return node;
}

}  // namespace

ScenarioReport run_events(Simulation& sim, const std::vector<Event>& events) {
  const Topology& t = sim.topology();
  ScenarioReport rep;
  Json log = Json::array();
  std::string& txt = rep.summary;
  std::size_t i = 0;
  for (const auto& ev : events) {
    ++i;
    Json out;
    const std::string head = "[" + std::to_string(i) + "] ";
    switch (ev.type) {
      case EventType::Deal: {
        const auto d = sim.owner_store();
        out = {{"type", "deal"}, {"generation", sim.generation()}, {"delivered", d.delivered},
               {"recorded", d.recorded}, {"stale", refs_json(t, d.stale)}};
        txt += head + "deal: generation " + std::to_string(sim.generation()) + ", " +
               std::to_string(d.delivered) + " delivered, " + std::to_string(d.recorded) +
               " recorded on classical links\n";
        break;
      }
      case EventType::Refresh: {
        const auto d = sim.owner_refresh();
        out = {{"type", "refresh"}, {"epoch", sim.epoch()}, {"delivered", d.delivered},
               {"recorded", d.recorded}, {"stale", refs_json(t, d.stale)}};
        txt += head + "refresh: epoch " + std::to_string(sim.epoch()) + ", " +
               std::to_string(d.delivered) + " delivered, " + std::to_string(d.stale.size()) +
               " stale\n";
        break;
      }
      case EventType::CompromiseNetwork: {
        const auto j = t.require_index(ev.network);
        const auto n = sim.compromise_network(j);
        out = {{"type", "compromise_network"}, {"network", ev.network}, {"captured", n}};
        txt += head + "compromise network " + ev.network + ": " + std::to_string(n) + " values captured\n";
        break;
      }
      case EventType::CompromiseNode: {
        const auto j = t.require_index(ev.network);
        const auto n = sim.compromise_node(j, node_in(t, j, ev.node));
        out = {{"type", "compromise_node"}, {"network", ev.network}, {"node", ev.node}, {"captured", n}};
        txt += head + "compromise node " + ev.network + "/" + std::to_string(ev.node) + ": " +
               std::to_string(n) + " values captured\n";
        break;
      }
      case EventType::FailNode: {
        const auto j = t.require_index(ev.network);
        sim.fail_node(j, node_in(t, j, ev.node));
        out = {{"type", "fail_node"}, {"network", ev.network}, {"node", ev.node}};
        txt += head + "fail node " + ev.network + "/" + std::to_string(ev.node) + "\n";
        break;
      }
      case EventType::HndlDecryptClassical: {
        const auto n = sim.hndl_decrypt_classical();
        out = {{"type", "hndl_decrypt_classical"}, {"exposed", n}};
        txt += head + "classical transcripts decrypted: " + std::to_string(n) + " payloads exposed\n";
        break;
      }
      case EventType::AttemptReconstruct: {
        if (ev.actor == Actor::Adversary) {
          const auto a = sim.adversary_attempt();
          const bool match = a.recovered && *a.recovered == sim.secret();
          out = {{"type", "reconstruct"}, {"actor", "adversary"}, {"verdict", to_string(a.verdict)},
                 {"observations", a.observations}, {"recovered_matches_secret", match}};
          txt += head + "adversary: " + to_string(a.verdict) + " from " +
                 std::to_string(a.observations) + " observations" +
                 (match ? ", secret recovered" : "") + "\n";
        } else {
          std::optional<std::vector<NodeRef>> sel;
          if (ev.selection) {
            sel.emplace();
            for (const auto& [id, x] : *ev.selection) {
              const auto j = t.require_index(id);
              sel->push_back({j, node_in(t, j, x)});
            }
          }
          const auto o = sim.owner_reconstruct(sel);
          out = {{"type", "reconstruct"}, {"actor", "owner"}, {"used", refs_json(t, o.used)}};
          if (o.secret) {
            const bool match = *o.secret == sim.secret();
            out["result"] = "secret";
            out["matches_secret"] = match;
            txt += head + "owner: reconstructed" + (match ? "" : " WRONG bytes") + "\n";
          } else if (o.infeasible) {
            out["result"] = "infeasible";
            out["reason"] = o.infeasible->reason;
            txt += head + "owner: infeasible (" + o.infeasible->reason + ")\n";
          } else {
            out["result"] = "error";
            out["reason"] = o.error;
            txt += head + "owner: error (" + o.error + ")\n";
          }
        }
        break;
      }
    }
    out["index"] = i;
    log.push_back(out);
  }
  const auto a = sim.adversary_attempt();
  const auto o = sim.owner_reconstruct();
  const bool recovered = a.recovered && *a.recovered == sim.secret();
  const bool available = o.secret && *o.secret == sim.secret();
  rep.json = {{"events", log},
              {"final",
               {{"adversary_verdict", to_string(a.verdict)},
                {"adversary_recovered_secret", recovered},
                {"observations", a.observations},
                {"owner_available", available},
                {"generation", sim.generation()},
                {"epoch", sim.epoch()}}}};
  txt += std::string("final: adversary ") + to_string(a.verdict) + ", owner " +
         (available ? "available" : "unavailable") + "\n";
  return rep;
}

ScenarioReport run_scenario(const Scenario& scenario, std::uint64_t seed) {
  if (!scenario.topology) throw UsageError("scenario has no topology");
  Simulation sim(*scenario.topology, scenario.secret, seed);
  return run_events(sim, scenario.events);
}

}  // namespace multiss
