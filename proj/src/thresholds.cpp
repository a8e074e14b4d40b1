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

#include "multiss/thresholds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "multiss/errors.hpp"

namespace multiss {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

// Sum of the `count` smallest values.
std::size_t smallest_sum(std::vector<std::size_t> v, std::size_t count) {
  std::sort(v.begin(), v.end());
  std::size_t s = 0;
  for (std::size_t i = 0; i < count && i < v.size(); ++i) s += v[i];
  return s;
}

}  // namespace

std::size_t formula_f1_cardinality(const Topology& topology) {
  return topology.network_count() - share_threshold(topology.outer_degree());
}

Thresholds compute_thresholds_formula(const Topology& topology) {
  const std::size_t tp = share_threshold(topology.outer_degree());
  const auto& mother = topology.mother();
  std::vector<std::size_t> daughter_t;
  std::vector<std::size_t> daughter_kill;
  for (std::size_t j : topology.daughter_indices()) {
    const auto& net = topology.network(j);
    daughter_t.push_back(share_threshold(net.inner_degree));
    daughter_kill.push_back(net.node_count - share_threshold(net.inner_degree) + 1);
  }
  Thresholds t;
  t.t_networks = tp;
  t.t_nodes = share_threshold(mother.inner_degree) + smallest_sum(daughter_t, tp - 1);
  t.t_f0 = mother.node_count - share_threshold(mother.inner_degree) + 1;
  t.t_f1 = smallest_sum(daughter_kill, formula_f1_cardinality(topology));
  t.t_fail = std::min(t.t_f0, t.t_f1);
  return t;
}

OracleThresholds compute_thresholds_oracle(const Topology& topology) {
  const std::size_t total = topology.total_nodes();
  if (total > kOracleNodeLimit)
    throw CapacityError("exhaustive threshold oracle supports at most " +
                        std::to_string(kOracleNodeLimit) + " nodes in total, topology has " +
                        std::to_string(total));
  const std::size_t l = topology.network_count();

  std::vector<std::size_t> offset(l);
  std::vector<std::uint32_t> net_mask(l);
  std::uint32_t mother_mask = 0;
  std::size_t acc = 0;
  for (std::size_t j = 0; j < l; ++j) {
    offset[j] = acc;
    const auto n = topology.network(j).node_count;
    net_mask[j] = ((std::uint32_t{1} << n) - 1) << acc;
    if (topology.is_mother(j)) mother_mask = net_mask[j];
    acc += n;
  }
  const std::uint32_t all = total == 32 ? ~0u : (std::uint32_t{1} << total) - 1;
  const std::uint32_t daughter_mask = all & ~mother_mask;

  // Verdicts depend only on how many nodes of each network are held, and
  // holding more than inner_degree + 1 of them adds nothing: any c <= d+1
  // distinct nonzero points give independent rows on that network's
  // coefficient block, and d+1 already span it.
  std::vector<std::size_t> cap(l);
  std::vector<std::size_t> radix(l);
  std::size_t profiles = 1;
  for (std::size_t j = 0; j < l; ++j) {
    cap[j] = topology.network(j).inner_degree + 1;
    radix[j] = profiles;
    profiles *= cap[j] + 1;
  }
  std::vector<std::int8_t> memo(profiles, -1);
  auto reconstructs = [&](std::uint32_t held) {
    std::size_t key = 0;
    for (std::size_t j = 0; j < l; ++j) {
      const auto c = static_cast<std::size_t>(std::popcount(held & net_mask[j]));
      key += std::min(c, cap[j]) * radix[j];
    }
    if (memo[key] < 0) {
      std::vector<NodeRef> nodes;
      std::size_t rest = key;
      for (std::size_t j = 0; j < l; ++j) {
        const std::size_t c = rest % (cap[j] + 1);
        rest /= cap[j] + 1;
        for (std::size_t x = 1; x <= c; ++x) nodes.push_back({j, x});
      }
      memo[key] = access_oracle(topology, nodes) == Verdict::Reconstructs ? 1 : 0;
    }
    return memo[key] == 1;
  };
  auto to_nodes = [&](std::uint32_t mask) {
    std::vector<NodeRef> out;
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t x = 0; x < topology.network(j).node_count; ++x)
        if (mask & (std::uint32_t{1} << (offset[j] + x))) out.push_back({j, x + 1});
    return out;
  };

  Thresholds t{kUnset, kUnset, kUnset, kUnset, kUnset};
  std::uint32_t w_nodes = 0, w_networks = 0, w_fail = 0, w_f0 = 0, w_f1 = 0;
  for (std::uint64_t h = 0; h <= all; ++h) {
    const auto held = static_cast<std::uint32_t>(h);
    const auto size = static_cast<std::size_t>(std::popcount(held));
    if (reconstructs(held)) {
      if (size < t.t_nodes) t.t_nodes = size, w_nodes = held;
      std::size_t touched = 0;
      for (std::size_t j = 0; j < l; ++j) touched += (held & net_mask[j]) ? 1 : 0;
      if (touched < t.t_networks || (touched == t.t_networks &&
                                     size < static_cast<std::size_t>(std::popcount(w_networks))))
        t.t_networks = touched, w_networks = held;
    } else {
      const std::uint32_t disabled = all & ~held;
      const std::size_t dsize = total - size;
      if (dsize < t.t_fail) t.t_fail = dsize, w_fail = disabled;
      if ((disabled & ~mother_mask) == 0 && dsize < t.t_f0) t.t_f0 = dsize, w_f0 = disabled;
      if ((disabled & ~daughter_mask) == 0 && dsize < t.t_f1) t.t_f1 = dsize, w_f1 = disabled;
    }
  }

  OracleThresholds out;
  out.values = t;
  out.nodes_witness = to_nodes(w_nodes);
  out.networks_witness = to_nodes(w_networks);
  out.fail_witness = to_nodes(w_fail);
  out.f0_witness = to_nodes(w_f0);
  out.f1_witness = to_nodes(w_f1);
  for (std::size_t j : topology.daughter_indices()) {
    const auto alive = static_cast<std::size_t>(std::popcount(net_mask[j] & ~w_f1));
    if (alive < cap[j]) ++out.t_f1_daughters;
  }
  return out;
}

}  // namespace multiss
