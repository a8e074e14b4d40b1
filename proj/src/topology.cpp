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

#include "multiss/topology.hpp"

#include <set>
#include <utility>

#include "multiss/errors.hpp"

namespace multiss {

Topology::Topology(Field field, std::vector<NetworkSpec> networks, std::size_t mother_index,
                   std::size_t outer_degree)
    : field_(std::move(field)),
      networks_(std::move(networks)),
      mother_(mother_index),
      outer_degree_(outer_degree) {
  const std::size_t l = networks_.size();
  if (l < 2) throw UsageError("topology needs at least two networks (one mother, one daughter)");
  if (mother_ >= l) throw UsageError("mother index out of range");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < l; ++i) {
    const auto& n = networks_[i];
    if (n.id.empty()) throw UsageError("network id must not be empty");
    if (!ids.insert(n.id).second) throw UsageError("duplicate network id '" + n.id + "'");
    if (n.node_count < 1) throw UsageError("network '" + n.id + "' has no nodes");
    if (n.inner_degree + 1 > n.node_count)
      throw UsageError("network '" + n.id + "': inner degree " + std::to_string(n.inner_degree) +
                       " needs at least " + std::to_string(n.inner_degree + 1) + " nodes");
    if (BigInt(n.node_count) >= field_.modulus())
      throw UsageError("network '" + n.id + "': node count must be below the modulus");
    if (i == mother_ && n.link != LinkKind::Its)
      throw UsageError("mother network '" + n.id + "' must use an ITS link");
    if (i != mother_ && n.link != LinkKind::Classical)
      throw UsageError("daughter network '" + n.id + "' must use a classical link");
  }
  if (outer_degree_ < 1) throw UsageError("outer degree must be at least 1");
  if (outer_degree_ > l - 1)
    throw UsageError("outer degree " + std::to_string(outer_degree_) + " needs at least " +
                     std::to_string(outer_degree_) + " daughter networks, topology has " +
                     std::to_string(l - 1));
  if (BigInt(l) >= field_.modulus()) throw UsageError("network count must be below the modulus");
}

Topology Topology::uniform(Field field, std::size_t count, std::size_t node_count,
                           std::size_t inner_degree, std::size_t outer_degree) {
  std::vector<NetworkSpec> nets;
  for (std::size_t i = 0; i < count; ++i) {
    nets.push_back({i == 0 ? "mother" : "daughter" + std::to_string(i), node_count,
                    inner_degree, i == 0 ? LinkKind::Its : LinkKind::Classical});
  }
  return Topology(std::move(field), std::move(nets), 0, outer_degree);
}

std::vector<std::size_t> Topology::daughter_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < networks_.size(); ++i)
    if (i != mother_) out.push_back(i);
  return out;
}

std::size_t Topology::derivative_point(std::size_t network_index) const {
  if (network_index >= networks_.size() || network_index == mother_)
    throw UsageError("derivative point requested for a non-daughter network");
  return network_index < mother_ ? network_index + 1 : network_index;
}

std::optional<std::size_t> Topology::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < networks_.size(); ++i)
    if (networks_[i].id == id) return i;
  return std::nullopt;
}

std::size_t Topology::require_index(std::string_view id) const {
  if (auto i = index_of(id)) return *i;
  throw UsageError("unknown network id '" + std::string(id) + "'");
}

std::size_t Topology::total_nodes() const {
  std::size_t n = 0;
  for (const auto& net : networks_) n += net.node_count;
  return n;
}

}  // namespace multiss
