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
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "multiss/protocol.hpp"
#include "multiss/topology.hpp"

namespace multiss {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Topology files. "modulus" is optional (2^127-1 when absent) and, when
// given, must be a prime of at least 257.
Json topology_to_json(const Topology& topology);
Topology topology_from_json(const Json& j);
Topology parse_topology(std::string_view text);
std::string dump_topology(const Topology& topology);

// Lowercase hex SHA-256 of the canonical (compact, sorted) topology JSON.
std::string topology_digest(const Topology& topology);

Json share_to_json(const NodeShare& share, const Field& field);
// Checks the stored modulus against `field`.
NodeShare share_from_json(const Json& j, const Field& field);

struct Manifest {
  std::size_t chunk_count = 0;
  std::size_t epoch = 0;
  std::string topology_digest;
  std::string modulus;  // hex
  std::vector<std::pair<std::string, std::size_t>> stale;  // (network, node)
};

Json manifest_to_json(const Manifest& m);
Manifest manifest_from_json(const Json& j);

// "<network>-<node>.share.json"
std::string share_file_name(const std::string& network_id, std::size_t node_index);
inline constexpr const char* kManifestName = "manifest.json";

// File helpers; all failures are LoadError.
std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
Json read_json(const std::filesystem::path& path);
// Write to "<path>.tmp" then rename over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view data);

}  // namespace multiss
