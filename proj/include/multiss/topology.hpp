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
#include <string>
#include <string_view>
#include <vector>

#include "multiss/field.hpp"

namespace multiss {

// The owner reaches the mother network over an ITS (QKD + one-time pad) link
// and every daughter network over a classical link.
enum class LinkKind { Its, Classical };

struct NetworkSpec {
  std::string id;
  std::size_t node_count = 0;    // n_i
  std::size_t inner_degree = 0;  // deg(Q_i)
  LinkKind link = LinkKind::Classical;
};

// Layout of the networks holding one MULTISS deployment. Immutable and
// validated on construction (UsageError on any violation):
//   * at least two networks, unique non-empty ids, one mother;
//   * 1 <= node_count, inner_degree + 1 <= node_count;
//   * mother on an ITS link, daughters on classical links;
//   * 1 <= outer_degree <= number of daughters;
//   * node indices, derivative points and degrees all below q.
class Topology {
 public:
  Topology(Field field, std::vector<NetworkSpec> networks, std::size_t mother_index,
           std::size_t outer_degree);

  // `count` networks named "mother", "daughter1", ...; mother first.
  static Topology uniform(Field field, std::size_t count, std::size_t node_count,
                          std::size_t inner_degree, std::size_t outer_degree);

  const Field& field() const { return field_; }
  const std::vector<NetworkSpec>& networks() const { return networks_; }
  const NetworkSpec& network(std::size_t i) const { return networks_.at(i); }
  std::size_t network_count() const { return networks_.size(); }
  std::size_t mother_index() const { return mother_; }
  const NetworkSpec& mother() const { return networks_[mother_]; }
  std::size_t outer_degree() const { return outer_degree_; }
  bool is_mother(std::size_t i) const { return i == mother_; }

  // Network indices of the daughters in topology order.
  std::vector<std::size_t> daughter_indices() const;
  // x at which daughter `i` receives P'(x): its 1-based rank among daughters.
  std::size_t derivative_point(std::size_t network_index) const;

  std::optional<std::size_t> index_of(std::string_view id) const;
  std::size_t require_index(std::string_view id) const;
  std::size_t total_nodes() const;

 private:
  Field field_;
  std::vector<NetworkSpec> networks_;
  std::size_t mother_;
  std::size_t outer_degree_;
};

}  // namespace multiss
