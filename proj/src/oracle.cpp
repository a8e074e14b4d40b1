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

#include "multiss/oracle.hpp"

#include <algorithm>

#include "multiss/errors.hpp"

namespace multiss {

FunctionalLayout::FunctionalLayout(const Topology& topology, std::size_t rounds)
    : topology_(&topology), rounds_(rounds) {
  columns_ = 1 + topology.outer_degree();
  for (std::size_t r = 0; r <= rounds_; ++r) {
    for (const auto& net : topology.networks()) {
      block_offset_.push_back(columns_);
      columns_ += net.inner_degree;
    }
  }
}

std::size_t FunctionalLayout::block(std::size_t round, std::size_t network) const {
  return block_offset_.at(round * topology_->network_count() + network);
}

std::vector<FieldElement> FunctionalLayout::row(const Observation& obs) const {
  const Topology& t = *topology_;
  const Field& f = t.field();
  if (obs.network >= t.network_count()) throw UsageError("observation network out of range");
  const auto& net = t.network(obs.network);
  if (obs.node < 1 || obs.node > net.node_count)
    throw UsageError("observation node out of range");
  const std::size_t last_round = obs.kind == HeldKind::Share ? obs.epoch : obs.epoch + 1;
  if (last_round > rounds_) throw UsageError("observation epoch beyond modeled rounds");

  std::vector<FieldElement> row(columns_, f.zero());
  const FieldElement x = f.element(obs.node);
  // sum_m coeff_m x^m over one block
  auto add_block = [&](std::size_t round) {
    FieldElement pw = x;
    const std::size_t off = block(round, obs.network);
    for (std::size_t m = 0; m < net.inner_degree; ++m) {
      row[off + m] += pw;
      pw *= x;
    }
  };

  if (obs.kind == HeldKind::Delta) {
    add_block(obs.epoch + 1);
    return row;
  }
  // Constant term Q_j(0) as a functional of (S, a).
  const std::size_t d = t.outer_degree();
  if (t.is_mother(obs.network)) {
    row[0] = f.one();  // P(1) = S + sum a_m
    for (std::size_t m = 1; m <= d; ++m) row[m] = f.one();
  } else {
    const FieldElement i = f.element(t.derivative_point(obs.network));
    FieldElement pw = f.one();  // P'(i) = sum m a_m i^(m-1)
    for (std::size_t m = 1; m <= d; ++m) {
      row[m] = f.element(m) * pw;
      pw *= i;
    }
  }
  for (std::size_t r = 0; r <= obs.epoch; ++r) add_block(r);
  return row;
}

AdversaryFunctionals build_functionals(const Topology& topology,
                                       std::span<const Observation> held) {
  std::size_t rounds = 0;
  for (const auto& o : held)
    rounds = std::max(rounds, o.kind == HeldKind::Share ? o.epoch : o.epoch + 1);
  const FunctionalLayout layout(topology, rounds);
  Matrix m(topology.field(), 0, layout.columns());
  for (const auto& o : held) m.append_row(layout.row(o));
  return {std::move(m), layout.secret_column()};
}

const char* to_string(Verdict v) {
  return v == Verdict::Reconstructs ? "Reconstructs" : "NoInformation";
}

Verdict access_oracle(const Topology& topology, std::span<const Observation> held) {
  const auto fn = build_functionals(topology, held);
  return unit_in_row_span(fn.matrix, fn.secret_coordinate) ? Verdict::Reconstructs
                                                           : Verdict::NoInformation;
}

Verdict access_oracle(const Topology& topology, std::span<const NodeRef> nodes) {
  std::vector<Observation> held;
  held.reserve(nodes.size());
  for (const auto& n : nodes) held.push_back({HeldKind::Share, n.network, n.node, 0});
  return access_oracle(topology, held);
}

std::optional<std::vector<FieldElement>> extraction_coefficients(
    const Topology& topology, std::span<const Observation> held) {
  const auto fn = build_functionals(topology, held);
  std::vector<FieldElement> target(fn.matrix.cols(), topology.field().zero());
  target[fn.secret_coordinate] = topology.field().one();
  return row_combination(fn.matrix, target);
}

}  // namespace multiss
