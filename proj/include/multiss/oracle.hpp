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
#include <optional>
#include <span>
#include <vector>

#include "multiss/field.hpp"
#include "multiss/topology.hpp"

namespace multiss {

// Every value the protocol ever stores or sends is linear in the dealer's
// randomness vector
//   [ S | a_1..a_d | round 0: Q_j coefficients | round r >= 1: R_j^(r) coefficients ]
// where a_m are P's non-constant coefficients, the round-0 blocks hold each
// network's inner-polynomial coefficients and round r blocks the refresh
// polynomial moving epoch r-1 to r. An adversary learns S exactly when the
// unit functional on S lies in the span of what it holds; otherwise, since all
// coordinates but S are uniform, its posterior on S is uniform.

enum class HeldKind {
  Share,  // node's stored value at `epoch`
  Delta,  // refresh delta moving the node from `epoch` to `epoch + 1`
};

struct Observation {
  HeldKind kind = HeldKind::Share;
  std::size_t network = 0;  // index into Topology::networks()
  std::size_t node = 1;     // 1-based node index
  std::size_t epoch = 0;
};

// A node identified by network index and 1-based node index.
struct NodeRef {
  std::size_t network = 0;
  std::size_t node = 1;
  friend bool operator==(const NodeRef&, const NodeRef&) = default;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

class FunctionalLayout {
 public:
  // `rounds` refresh rounds are modeled (epochs 0..rounds).
  FunctionalLayout(const Topology& topology, std::size_t rounds);

  std::size_t columns() const { return columns_; }
  std::size_t secret_column() const { return 0; }
  std::size_t rounds() const { return rounds_; }

  // Coefficients of the observed value over the randomness vector.
  std::vector<FieldElement> row(const Observation& obs) const;

 private:
  std::size_t block(std::size_t round, std::size_t network) const;

  const Topology* topology_;
  std::size_t rounds_;
  std::size_t columns_ = 0;
  std::vector<std::size_t> block_offset_;  // per (round, network)
};

struct AdversaryFunctionals {
  Matrix matrix;
  std::size_t secret_coordinate;
};

// Rows for each observation, with enough refresh rounds to cover the latest
// epoch referenced.
AdversaryFunctionals build_functionals(const Topology& topology,
                                       std::span<const Observation> held);

enum class Verdict { Reconstructs, NoInformation };

const char* to_string(Verdict v);

Verdict access_oracle(const Topology& topology, std::span<const Observation> held);
// Epoch-0 shares of the given nodes.
Verdict access_oracle(const Topology& topology, std::span<const NodeRef> nodes);

// Coefficients lambda with S = sum_i lambda_i * value(held_i), when the held
// observations determine S.
std::optional<std::vector<FieldElement>> extraction_coefficients(
    const Topology& topology, std::span<const Observation> held);

}  // namespace multiss
