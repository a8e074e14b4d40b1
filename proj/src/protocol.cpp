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

#include "multiss/protocol.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "multiss/errors.hpp"

namespace multiss {

namespace {

FieldElement dot(std::span<const FieldElement> w, std::span<const FieldElement> v) {
  FieldElement acc = w.front().field().zero();
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * v[i];
  return acc;
}

std::string quorum_summary(const Infeasible& inf) {
  return "mother quorum " + std::to_string(inf.mother_have) + "/" +
         std::to_string(inf.mother_need) + (inf.mother_met ? " met" : " not met") +
         "; daughter quorums " + std::to_string(inf.daughters_met) + "/" +
         std::to_string(inf.daughters_needed) + " met";
}

}  // namespace

DealerRandomness sample_dealer_randomness(const Topology& topology, RandomSource& rng) {
  const Field& f = topology.field();
  DealerRandomness r;
  for (std::size_t m = 0; m < topology.outer_degree(); ++m) r.outer.push_back(f.random(rng));
  for (const auto& net : topology.networks()) {
    std::vector<FieldElement> coeffs;
    for (std::size_t m = 0; m < net.inner_degree; ++m) coeffs.push_back(f.random(rng));
    r.inner.push_back(std::move(coeffs));
  }
  return r;
}

Polynomial outer_polynomial(const FieldElement& secret, const DealerRandomness& r) {
  std::vector<FieldElement> c{secret};
  c.insert(c.end(), r.outer.begin(), r.outer.end());
  return Polynomial(std::move(c));
}

Polynomial inner_polynomial(const Topology& topology, std::size_t network,
                            const Polynomial& outer, const DealerRandomness& r) {
  const Field& f = topology.field();
  const FieldElement constant =
      topology.is_mother(network)
          ? outer(f.one())
          : derivative(outer)(f.element(topology.derivative_point(network)));
  std::vector<FieldElement> c{constant};
  const auto& rest = r.inner.at(network);
  if (rest.size() != topology.network(network).inner_degree)
    throw UsageError("dealer randomness does not match inner degree of '" +
                     topology.network(network).id + "'");
  c.insert(c.end(), rest.begin(), rest.end());
  return Polynomial(std::move(c));
}

std::vector<std::vector<FieldElement>> deal_chunk(const FieldElement& secret,
                                                  const Topology& topology,
                                                  const DealerRandomness& r) {
  const Field& f = topology.field();
  if (!(secret.field() == f)) throw UsageError("secret chunk modulus differs from topology");
  if (r.outer.size() != topology.outer_degree() || r.inner.size() != topology.network_count())
    throw UsageError("dealer randomness does not match topology");
  const Polynomial p = outer_polynomial(secret, r);
  std::vector<std::vector<FieldElement>> out;
  out.reserve(topology.network_count());
  for (std::size_t j = 0; j < topology.network_count(); ++j) {
    const Polynomial q = inner_polynomial(topology, j, p, r);
    std::vector<FieldElement> values;
    values.reserve(topology.network(j).node_count);
    for (std::size_t x = 1; x <= topology.network(j).node_count; ++x)
      values.push_back(q(f.element(x)));
    out.push_back(std::move(values));
  }
  return out;
}

namespace {

ShareMap empty_share_map(const Topology& topology, std::size_t chunk_count) {
  ShareMap out;
  for (const auto& net : topology.networks()) {
    auto& v = out[net.id];
    for (std::size_t x = 1; x <= net.node_count; ++x) {
      NodeShare s{net.id, x, 0, {}};
      s.values.reserve(chunk_count);
      v.push_back(std::move(s));
    }
  }
  return out;
}

void append_chunk(ShareMap& out, const Topology& topology,
                  std::vector<std::vector<FieldElement>>&& values) {
  for (std::size_t j = 0; j < topology.network_count(); ++j) {
    auto& shares = out[topology.network(j).id];
    for (std::size_t x = 0; x < shares.size(); ++x)
      shares[x].values.push_back(std::move(values[j][x]));
  }
}

}  // namespace

ShareMap deal(std::span<const FieldElement> chunks, const Topology& topology,
              RandomSource& rng) {
  ShareMap out = empty_share_map(topology, chunks.size());
  for (const auto& chunk : chunks)
    append_chunk(out, topology, deal_chunk(chunk, topology, sample_dealer_randomness(topology, rng)));
  return out;
}

ShareMap deal_with(std::span<const FieldElement> chunks, const Topology& topology,
                   std::span<const DealerRandomness> randomness) {
  if (chunks.size() != randomness.size())
    throw UsageError("one dealer randomness record is needed per chunk");
  ShareMap out = empty_share_map(topology, chunks.size());
  for (std::size_t c = 0; c < chunks.size(); ++c)
    append_chunk(out, topology, deal_chunk(chunks[c], topology, randomness[c]));
  return out;
}

ReconstructResult reconstruct(const ShareMap& shares, const Topology& topology) {
  const Field& f = topology.field();
  const std::size_t l = topology.network_count();
  std::vector<std::vector<const NodeShare*>> by_net(l);
  std::optional<std::size_t> epoch;
  std::optional<std::size_t> chunk_count;

  for (const auto& [id, list] : shares) {
    const std::size_t j = topology.require_index(id);
    std::set<std::size_t> seen;
    for (const auto& s : list) {
      if (s.network_id != id)
        throw UsageError("share of network '" + s.network_id + "' filed under '" + id + "'");
      if (s.node_index < 1 || s.node_index > topology.network(j).node_count)
        throw UsageError("node index " + std::to_string(s.node_index) + " out of range for '" +
                         id + "'");
      if (!seen.insert(s.node_index).second)
        throw UsageError("duplicate share for node " + id + "/" + std::to_string(s.node_index));
      if (epoch && *epoch != s.epoch)
        throw EpochMismatch("shares from epochs " + std::to_string(*epoch) + " and " +
                            std::to_string(s.epoch) + " cannot be combined");
      epoch = s.epoch;
      if (chunk_count && *chunk_count != s.values.size())
        throw UsageError("shares disagree on chunk count");
      chunk_count = s.values.size();
      for (const auto& v : s.values)
        if (!(v.field() == f)) throw UsageError("share modulus differs from topology");
      by_net[j].push_back(&s);
    }
  }

  Infeasible status;
  const std::size_t m = topology.mother_index();
  status.mother_need = topology.mother().inner_degree + 1;
  status.mother_have = by_net[m].size();
  status.mother_met = status.mother_have >= status.mother_need;
  status.daughters_needed = topology.outer_degree();
  std::vector<std::size_t> ready_daughters;
  for (std::size_t j : topology.daughter_indices()) {
    if (by_net[j].size() >= topology.network(j).inner_degree + 1) ready_daughters.push_back(j);
  }
  status.daughters_met = ready_daughters.size();
  if (!status.mother_met || status.daughters_met < status.daughters_needed) {
    status.reason = std::string(!status.mother_met ? "missing mother: " : "missing daughters: ") +
                    quorum_summary(status);
    return status;
  }
  ready_daughters.resize(topology.outer_degree());

  // Lagrange weights per used network over its lowest-indexed quorum.
  struct Plan {
    std::vector<const NodeShare*> quorum;
    std::vector<FieldElement> weights;
  };
  auto plan_for = [&](std::size_t j) {
    auto list = by_net[j];
    std::sort(list.begin(), list.end(),
              [](const NodeShare* a, const NodeShare* b) { return a->node_index < b->node_index; });
    list.resize(topology.network(j).inner_degree + 1);
    std::vector<FieldElement> xs;
    for (const auto* s : list) xs.push_back(f.element(s->node_index));
    return Plan{std::move(list), lagrange_weights_at_zero(xs)};
  };
  std::vector<Plan> plans{plan_for(m)};
  std::vector<BirkhoffNode> nodes{{f.one(), Order::Value}};
  for (std::size_t j : ready_daughters) {
    plans.push_back(plan_for(j));
    nodes.push_back({f.element(topology.derivative_point(j)), Order::FirstDerivative});
  }
  const auto outer_weights = birkhoff_weights_at_zero(nodes, topology.outer_degree());
  if (!outer_weights) {
    status.reason = "singular Birkhoff system for the available networks";
    return status;
  }

  std::vector<FieldElement> secret;
  secret.reserve(*chunk_count);
  std::vector<FieldElement> inner(plans.size(), f.zero());
  for (std::size_t c = 0; c < *chunk_count; ++c) {
    for (std::size_t p = 0; p < plans.size(); ++p) {
      FieldElement acc = f.zero();
      for (std::size_t i = 0; i < plans[p].quorum.size(); ++i)
        acc += plans[p].weights[i] * plans[p].quorum[i]->values[c];
      inner[p] = std::move(acc);
    }
    secret.push_back(dot(*outer_weights, inner));
  }
  return secret;
}

RefreshMap refresh(const Topology& topology, std::size_t epoch, std::size_t chunk_count,
                   RandomSource& rng) {
  const Field& f = topology.field();
  RefreshMap out;
  for (const auto& net : topology.networks()) {
    auto& v = out[net.id];
    for (std::size_t x = 1; x <= net.node_count; ++x) v.push_back({net.id, x, epoch, {}});
  }
  for (std::size_t c = 0; c < chunk_count; ++c) {
    for (const auto& net : topology.networks()) {
      const Polynomial r = random_polynomial_uniform(net.inner_degree, f.zero(), rng);
      auto& v = out[net.id];
      for (std::size_t x = 1; x <= net.node_count; ++x)
        v[x - 1].deltas.push_back(r(f.element(x)));
    }
  }
  return out;
}

NodeShare apply_refresh(const NodeShare& share, const NodeRefresh& delta) {
  if (share.network_id != delta.network_id || share.node_index != delta.node_index)
    throw UsageError("refresh for " + delta.network_id + "/" + std::to_string(delta.node_index) +
                     " applied to " + share.network_id + "/" + std::to_string(share.node_index));
  if (share.epoch != delta.from_epoch)
    throw UsageError("refresh from epoch " + std::to_string(delta.from_epoch) +
                     " applied to share at epoch " + std::to_string(share.epoch));
  if (share.values.size() != delta.deltas.size())
    throw UsageError("refresh chunk count differs from share chunk count");
  NodeShare out = share;
  for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] += delta.deltas[c];
  ++out.epoch;
  return out;
}

std::size_t chunk_payload_bytes(const Field& field) { return (field.bits() - 1) / 8; }

std::vector<FieldElement> encode_secret(const Field& field, std::span<const std::uint8_t> bytes) {
  if (field.modulus() < (BigInt(1) << 16))
    throw UsageError("byte chunking needs a modulus of at least 2^16");
  if (bytes.size() > 0xffffffffULL) throw UsageError("secret longer than 2^32 - 1 bytes");
  const std::size_t block = chunk_payload_bytes(field);
  std::vector<std::uint8_t> data;
  data.reserve(bytes.size() + 4 + block);
  const auto len = static_cast<std::uint32_t>(bytes.size());
  for (int s = 24; s >= 0; s -= 8) data.push_back(static_cast<std::uint8_t>(len >> s));
  data.insert(data.end(), bytes.begin(), bytes.end());
  data.resize((data.size() + block - 1) / block * block, 0);

  std::vector<FieldElement> out;
  out.reserve(data.size() / block);
  for (std::size_t off = 0; off < data.size(); off += block) {
    BigInt v = 0;
    for (std::size_t i = 0; i < block; ++i) v = (v << 8) | data[off + i];
    out.emplace_back(std::move(v), field);
  }
  return out;
}

std::vector<std::uint8_t> decode_secret(const Field& field, std::span<const FieldElement> chunks) {
  if (field.modulus() < (BigInt(1) << 16))
    throw UsageError("byte chunking needs a modulus of at least 2^16");
  if (chunks.empty()) throw CorruptionError("no chunks: length header missing");
  const std::size_t block = chunk_payload_bytes(field);
  const BigInt limit = BigInt(1) << (8 * block);
  std::vector<std::uint8_t> data;
  data.reserve(chunks.size() * block);
  for (const auto& c : chunks) {
    if (!(c.field() == field)) throw CorruptionError("chunk modulus differs from field");
    if (c.value() >= limit) throw CorruptionError("chunk value exceeds block size");
    BigInt v = c.value();
    std::vector<std::uint8_t> blk(block);
    for (std::size_t i = block; i-- > 0;) {
      blk[i] = static_cast<std::uint8_t>(v & 0xff);
      v >>= 8;
    }
    data.insert(data.end(), blk.begin(), blk.end());
  }
  if (data.size() < 4) throw CorruptionError("length header truncated");
  const std::size_t len = (std::size_t{data[0]} << 24) | (std::size_t{data[1]} << 16) |
                          (std::size_t{data[2]} << 8) | std::size_t{data[3]};
  if (len > data.size() - 4) throw CorruptionError("length header exceeds decoded payload");
  if ((data.size() - 4 - len) >= block)
    throw CorruptionError("trailing chunks beyond declared length");
  for (std::size_t i = 4 + len; i < data.size(); ++i)
    if (data[i] != 0) throw CorruptionError("nonzero padding after payload");
  return {data.begin() + 4, data.begin() + 4 + static_cast<std::ptrdiff_t>(len)};
}

}  // namespace multiss
