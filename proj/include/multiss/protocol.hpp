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
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "multiss/field.hpp"
#include "multiss/poly.hpp"
#include "multiss/random.hpp"
#include "multiss/topology.hpp"

namespace multiss {

// What one node stores: Q_j(node_index) for every secret chunk.
struct NodeShare {
  std::string network_id;
  std::size_t node_index = 0;
  std::size_t epoch = 0;
  std::vector<FieldElement> values;
};

using ShareMap = std::map<std::string, std::vector<NodeShare>>;

// The dealer's random choices for one chunk: the non-constant coefficients of
// the outer polynomial P and of each network's inner polynomial Q_j (indexed
// like Topology::networks()). Constant terms are implied by the secret.
struct DealerRandomness {
  std::vector<FieldElement> outer;
  std::vector<std::vector<FieldElement>> inner;
};

DealerRandomness sample_dealer_randomness(const Topology& topology, RandomSource& rng);

// Outer polynomial P with P(0) = secret.
Polynomial outer_polynomial(const FieldElement& secret, const DealerRandomness& r);

// Inner polynomial Q_j of network j: Q_mother(0) = P(1), Q_daughter(0) = P'(i).
Polynomial inner_polynomial(const Topology& topology, std::size_t network,
                            const Polynomial& outer, const DealerRandomness& r);

// Share values for one chunk: result[j][x-1] = Q_j(x).
std::vector<std::vector<FieldElement>> deal_chunk(const FieldElement& secret,
                                                  const Topology& topology,
                                                  const DealerRandomness& r);

// Two-level dealing with fresh randomness per chunk; epoch 0.
ShareMap deal(std::span<const FieldElement> chunks, const Topology& topology,
              RandomSource& rng);
// Same with explicit per-chunk randomness (chunks.size() == randomness.size()).
ShareMap deal_with(std::span<const FieldElement> chunks, const Topology& topology,
                   std::span<const DealerRandomness> randomness);

// Why reconstruction could not proceed.
struct Infeasible {
  bool mother_met = false;
  std::size_t mother_have = 0;
  std::size_t mother_need = 0;
  std::size_t daughters_met = 0;
  std::size_t daughters_needed = 0;
  std::string reason;
};

using ReconstructResult = std::variant<std::vector<FieldElement>, Infeasible>;

// Recovers each network's Q_j(0) from its lowest-indexed inner_degree+1 shares,
// then P(0) from the mother's P(1) and outer_degree daughter derivatives.
// Mixed epochs throw EpochMismatch; unknown networks or duplicate nodes throw
// UsageError.
ReconstructResult reconstruct(const ShareMap& shares, const Topology& topology);

// Per-node refresh values (one delta per chunk) from R_j with R_j(0) = 0.
struct NodeRefresh {
  std::string network_id;
  std::size_t node_index = 0;
  std::size_t from_epoch = 0;
  std::vector<FieldElement> deltas;
};

using RefreshMap = std::map<std::string, std::vector<NodeRefresh>>;

// One refresh polynomial per network and chunk, degree = inner_degree. The
// outer polynomial P is never touched.
RefreshMap refresh(const Topology& topology, std::size_t epoch, std::size_t chunk_count,
                   RandomSource& rng);

NodeShare apply_refresh(const NodeShare& share, const NodeRefresh& delta);

// Payload bytes per field element: floor((bits(q) - 1) / 8).
std::size_t chunk_payload_bytes(const Field& field);

// 4-byte big-endian length header + payload, cut into big-endian blocks.
// Requires q >= 2^16.
std::vector<FieldElement> encode_secret(const Field& field, std::span<const std::uint8_t> bytes);
// Inverse of encode_secret; throws CorruptionError on malformed chunks.
std::vector<std::uint8_t> decode_secret(const Field& field, std::span<const FieldElement> chunks);

}  // namespace multiss
