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
#include "multiss/poly.hpp"
#include "multiss/random.hpp"

namespace multiss {

// One participant's Shamir share (x, P(x)). x runs over 1..n.
struct FlatShare {
  std::size_t x;
  FieldElement y;
  std::size_t threshold_k;
  std::size_t epoch = 0;
};

enum class Rank { Manager, Employee };

// Manager shares hold P(x), Employee shares hold P'(x).
struct HierShare {
  Rank rank;
  std::size_t x;
  FieldElement y;
  std::size_t threshold_k;
};

// Evaluation of a refresh polynomial R with R(0) = 0 for the node at x.
struct RefreshDelta {
  std::size_t x;
  FieldElement delta;
  std::size_t from_epoch;
};

std::vector<FlatShare> shamir_split(const FieldElement& secret, std::size_t k, std::size_t n,
                                    RandomSource& rng);
// Shares of an explicit dealer polynomial; threshold is degree bound + 1.
std::vector<FlatShare> shamir_split_with(const Polynomial& p, std::size_t k, std::size_t n);

enum class VerifyMode { Off, CheckAll };

// Interpolates the k lowest-x shares. With CheckAll, every extra share must lie
// on the same polynomial or CorruptionError is thrown.
FieldElement shamir_reconstruct(std::span<const FlatShare> shares,
                                VerifyMode mode = VerifyMode::Off);

std::vector<HierShare> hierarchical_split(const FieldElement& secret, std::size_t k,
                                          std::size_t managers, std::size_t employees,
                                          RandomSource& rng);
std::vector<HierShare> hierarchical_split_with(const Polynomial& p, std::size_t k,
                                               std::size_t managers, std::size_t employees);

// Secret from a mix of manager and employee shares, or nullopt (no quorum)
// when no k-subset gives a nonsingular Birkhoff system.
std::optional<FieldElement> hierarchical_reconstruct(std::span<const HierShare> shares,
                                                     std::size_t k);

std::vector<RefreshDelta> refresh_deltas(const Field& field, std::size_t k, std::size_t n,
                                         std::size_t from_epoch, RandomSource& rng);
// Deltas of an explicit refresh polynomial; its constant term must be zero.
std::vector<RefreshDelta> refresh_deltas_with(const Polynomial& r, std::size_t n,
                                              std::size_t from_epoch);

FlatShare apply_refresh(const FlatShare& share, const RefreshDelta& delta);

}  // namespace multiss
