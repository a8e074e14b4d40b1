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

#include "multiss/formats.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iterator>
#include <regex>

#include "multiss/errors.hpp"

namespace multiss {
namespace {

const char* link_name(LinkKind k) { return k == LinkKind::Its ? "its" : "classical"; }

LinkKind link_from(const std::string& s) {
  if (s == "its") return LinkKind::Its;
  if (s == "classical") return LinkKind::Classical;
  throw LoadError("unknown link kind '" + s + "' (expected its or classical)");
}

void check_version(const Json& j, const char* what) {
  if (!j.is_object()) throw LoadError(std::string(what) + ": expected a JSON object");
  const int v = j.value("format_version", kFormatVersion);
  if (v != kFormatVersion)
    throw LoadError(std::string(what) + ": unsupported format_version " + std::to_string(v));
}

template <typename T>
T get(const Json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw LoadError(std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw LoadError(std::string(what) + ": bad value for \"" + key + "\"");
  }
}

BigInt hex_field(const std::string& s, const char* what) {
  try {
    return parse_hex(s);
  } catch (const std::exception&) {
    throw LoadError(std::string(what) + ": bad hex '" + s + "'");
  }
}

}  // namespace

Json topology_to_json(const Topology& t) {
  Json nets = Json::array();
  for (std::size_t i = 0; i < t.network_count(); ++i) {
    const auto& n = t.network(i);
    nets.push_back({{"id", n.id},
                    {"node_count", n.node_count},
                    {"inner_degree", n.inner_degree},
                    {"link", link_name(n.link)},
                    {"mother", t.is_mother(i)}});
  }
  return {{"format_version", kFormatVersion},
          {"modulus", to_hex(t.field().modulus())},
          {"outer_degree", t.outer_degree()},
          {"networks", nets}};
}

Topology topology_from_json(const Json& j) {
  constexpr const char* what = "topology";
  check_version(j, what);
  Field field = Field::mersenne127();
  if (j.contains("modulus")) {
    const BigInt q = hex_field(get<std::string>(j, "modulus", what), what);
    if (q < 257) throw LoadError("topology: modulus must be at least 257");
    try {
      field = Field(q);
    } catch (const UsageError& e) {
      throw LoadError(std::string("topology: ") + e.what());
    }
  }
  const auto nets = j.contains("networks") ? j.at("networks") : Json();
  if (!nets.is_array() || nets.empty()) throw LoadError("topology: \"networks\" must be a non-empty array");
  static const std::regex id_re("[A-Za-z0-9_.]+");
  std::vector<NetworkSpec> specs;
  std::size_t mothers = 0, mother = 0;
  for (const auto& n : nets) {
    NetworkSpec s;
    s.id = get<std::string>(n, "id", what);
    if (!std::regex_match(s.id, id_re))
      throw LoadError("topology: network id '" + s.id + "' must match [A-Za-z0-9_.]+");
    s.node_count = get<std::size_t>(n, "node_count", what);
    s.inner_degree = get<std::size_t>(n, "inner_degree", what);
    s.link = link_from(get<std::string>(n, "link", what));
    if (n.value("mother", false)) {
      ++mothers;
      mother = specs.size();
    }
    specs.push_back(std::move(s));
  }
  if (mothers != 1)
    throw LoadError("topology: exactly one network must set \"mother\": true (found " +
                    std::to_string(mothers) + ")");
  return Topology(field, std::move(specs), mother, get<std::size_t>(j, "outer_degree", what));
}

Topology parse_topology(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw LoadError(std::string("topology: ") + e.what());
  }
  return topology_from_json(j);
}

std::string dump_topology(const Topology& t) { return topology_to_json(t).dump(2); }

std::string topology_digest(const Topology& t) {
  const std::string canon = topology_to_json(t).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(canon.data(), canon.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hexd = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hexd[md[i] >> 4];
    out += hexd[md[i] & 15];
  }
  return out;
}

Json share_to_json(const NodeShare& s, const Field& field) {
  Json vals = Json::array();
  for (const auto& v : s.values) vals.push_back(v.to_hex());
  return {{"format_version", kFormatVersion},
          {"modulus", to_hex(field.modulus())},
          {"network_id", s.network_id},
          {"node_index", s.node_index},
          {"epoch", s.epoch},
          {"chunk_count", s.values.size()},
          {"values", vals}};
}

NodeShare share_from_json(const Json& j, const Field& field) {
  constexpr const char* what = "share";
  check_version(j, what);
  if (hex_field(get<std::string>(j, "modulus", what), what) != field.modulus())
    throw LoadError("share: modulus differs from the topology's");
  NodeShare s;
  s.network_id = get<std::string>(j, "network_id", what);
  s.node_index = get<std::size_t>(j, "node_index", what);
  s.epoch = get<std::size_t>(j, "epoch", what);
  const auto count = get<std::size_t>(j, "chunk_count", what);
  const auto vals = get<std::vector<std::string>>(j, "values", what);
  if (vals.size() != count)
    throw LoadError("share " + s.network_id + "/" + std::to_string(s.node_index) + ": " +
                    std::to_string(vals.size()) + " values for chunk_count " +
                    std::to_string(count));
  s.values.reserve(count);
  for (const auto& h : vals) {
    try {
      s.values.push_back(field.from_hex(h));
    } catch (const std::exception& e) {
      throw LoadError("share " + s.network_id + "/" + std::to_string(s.node_index) + ": " +
                      e.what());
    }
  }
  return s;
}

Json manifest_to_json(const Manifest& m) {
  Json stale = Json::array();
  for (const auto& [id, node] : m.stale) stale.push_back({{"network", id}, {"node", node}});
  return {{"format_version", kFormatVersion}, {"chunk_count", m.chunk_count},
          {"epoch", m.epoch},                 {"topology_digest", m.topology_digest},
          {"modulus", m.modulus},             {"stale", stale}};
}

Manifest manifest_from_json(const Json& j) {
  constexpr const char* what = "manifest";
  check_version(j, what);
  Manifest m;
  m.chunk_count = get<std::size_t>(j, "chunk_count", what);
  m.epoch = get<std::size_t>(j, "epoch", what);
  m.topology_digest = get<std::string>(j, "topology_digest", what);
  m.modulus = get<std::string>(j, "modulus", what);
  if (j.contains("stale")) {
    for (const auto& e : j.at("stale"))
      m.stale.emplace_back(get<std::string>(e, "network", what), get<std::size_t>(e, "node", what));
  }
  return m;
}

std::string share_file_name(const std::string& network_id, std::size_t node_index) {
  return network_id + "-" + std::to_string(node_index) + ".share.json";
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot read " + path.string());
  std::vector<std::uint8_t> out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw LoadError("error reading " + path.string());
  return out;
}

Json read_json(const std::filesystem::path& path) {
  const auto bytes = read_bytes(path);
  try {
    return Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

void write_atomic(const std::filesystem::path& path, std::string_view data) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw LoadError("cannot write " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw LoadError("error writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw LoadError("cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace multiss
