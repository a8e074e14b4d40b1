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
#include <vector>

#include "multiss/oracle.hpp"
#include "multiss/topology.hpp"

namespace multiss {

struct Thresholds {
  std::size_t t_networks = 0;  // fewest networks an attacker must touch
  std::size_t t_nodes = 0;     // fewest nodes, all networks together
  std::size_t t_fail = 0;      // fewest disabled nodes that deny access
  std::size_t t_f0 = 0;        // ... disabled in the mother only
  std::size_t t_f1 = 0;        // ... disabled in daughters only
};

// T(poly) = degree + 1 = number of shares needed.
inline std::size_t share_threshold(std::size_t degree) { return degree + 1; }

// Closed-form thresholds with T = degree + 1:
//   t_networks = T(P)
//   t_nodes    = T(Q_0) + sum of the T(P)-1 smallest daughter T(Q_i)
//   t_f0       = n_0 - T(Q_0) + 1
//   t_f1       = min over daughter sets I, |I| = l - T(P), of sum (n_i - T(Q_i) + 1)
//   t_fail     = min(t_f0, t_f1)
// The t_f1 cardinality is reproduced as published; the exhaustive oracle
// disables one more daughter (see OracleThresholds::t_f1_daughters).
Thresholds compute_thresholds_formula(const Topology& topology);

// |I| used by the closed-form t_f1: l - T(P).
std::size_t formula_f1_cardinality(const Topology& topology);

inline constexpr std::size_t kOracleNodeLimit = 20;

struct OracleThresholds {
  Thresholds values;
  // Daughter networks whose quorum the t_f1 witness breaks.
  std::size_t t_f1_daughters = 0;
  std::vector<NodeRef> nodes_witness;     // a smallest reconstructing set
  std::vector<NodeRef> networks_witness;  // a reconstructing set touching t_networks networks
  std::vector<NodeRef> fail_witness;      // a smallest blocking disabled set
  std::vector<NodeRef> f0_witness;
  std::vector<NodeRef> f1_witness;
};

// Exhaustive: enumerates every node subset and asks the access oracle.
// Throws CapacityError when the topology has more than kOracleNodeLimit nodes.
OracleThresholds compute_thresholds_oracle(const Topology& topology);

}  // namespace multiss
