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

#include "multiss/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "multiss/errors.hpp"
#include "multiss/formats.hpp"
#include "multiss/protocol.hpp"
#include "multiss/simnet.hpp"
#include "multiss/thresholds.hpp"

namespace fs = std::filesystem;

namespace multiss {
namespace {

// Input problems that are not parse errors of the command line itself.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

Topology load_topology(const fs::path& p) {
  const auto j = read_json(p);
  return topology_from_json(j);
}

bool is_share_file(const fs::path& p) {
  const auto name = p.filename().string();
  const std::string suffix = ".share.json";
  return name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::optional<Manifest> load_manifest(const fs::path& dir, const Topology& topo) {
  const auto p = dir / kManifestName;
  if (!fs::exists(p)) return std::nullopt;
  auto m = manifest_from_json(read_json(p));
  if (m.topology_digest != topology_digest(topo))
    throw InputError("manifest " + p.string() + " was written for a different topology");
  return m;
}

struct LoadedShare {
  fs::path path;
  NodeShare share;
};

// Share files from a directory (skipping nodes the manifest marks stale) or
// an explicit list.
std::vector<LoadedShare> load_shares(const std::vector<std::string>& inputs, const Topology& topo,
                                     const std::optional<Manifest>& manifest) {
  std::vector<fs::path> files;
  std::set<std::pair<std::string, std::size_t>> skip;
  if (manifest) skip.insert(manifest->stale.begin(), manifest->stale.end());
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::directory_iterator(in))
        if (e.is_regular_file() && is_share_file(e.path())) found.push_back(e.path());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(in);
    }
  }
  std::vector<LoadedShare> out;
  std::set<std::pair<std::string, std::size_t>> seen;
  for (const auto& f : files) {
    auto s = share_from_json(read_json(f), topo.field());
    const auto idx = topo.index_of(s.network_id);
    if (!idx) throw InputError(f.string() + ": network '" + s.network_id + "' is not in the topology");
    if (s.node_index < 1 || s.node_index > topo.network(*idx).node_count)
      throw InputError(f.string() + ": node " + std::to_string(s.node_index) + " outside network '" +
                       s.network_id + "'");
    const auto key = std::make_pair(s.network_id, s.node_index);
    if (skip.count(key)) continue;
    if (!seen.insert(key).second)
      throw InputError("two share files for " + s.network_id + "/" + std::to_string(s.node_index));
    out.push_back({f, std::move(s)});
  }
  return out;
}

void write_share(const fs::path& dir, const NodeShare& s, const Field& f) {
  write_atomic(dir / share_file_name(s.network_id, s.node_index), share_to_json(s, f).dump(1) + "\n");
}

void write_manifest(const fs::path& dir, const Manifest& m) {
  write_atomic(dir / kManifestName, manifest_to_json(m).dump(2) + "\n");
}

// ---- commands ------------------------------------------------------------------

int cmd_deal(const fs::path& topo_path, const fs::path& secret_path, const fs::path& out_dir,
             const std::optional<std::uint64_t>& seed, std::ostream& out) {
  const auto topo = load_topology(topo_path);
  const auto secret = read_bytes(secret_path);
  const auto chunks = encode_secret(topo.field(), secret);
  auto rng = make_rng(seed);
  const auto shares = deal(chunks, topo, *rng);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw InputError("cannot create " + out_dir.string() + ": " + ec.message());
  std::size_t files = 0;
  for (const auto& [id, list] : shares) {
    for (const auto& s : list) {
      write_share(out_dir, s, topo.field());
      ++files;
    }
  }
  write_manifest(out_dir, {chunks.size(), 0, topology_digest(topo), to_hex(topo.field().modulus()), {}});
  out << "dealt " << secret.size() << " bytes as " << chunks.size() << " chunks into " << files
      << " share files in " << out_dir.string() << "\n";
  return kExitOk;
}

int cmd_reconstruct(const fs::path& topo_path, const std::vector<std::string>& inputs,
                    const fs::path& out_path, std::ostream& out, std::ostream& err) {
  const auto topo = load_topology(topo_path);
  std::optional<Manifest> manifest;
  for (const auto& in : inputs)
    if (fs::is_directory(in) && !manifest) manifest = load_manifest(in, topo);
  const auto loaded = load_shares(inputs, topo, manifest);
  ShareMap shares;
  for (const auto& l : loaded) shares[l.share.network_id].push_back(l.share);
  const auto res = reconstruct(shares, topo);
  if (const auto* inf = std::get_if<Infeasible>(&res)) {
    err << "infeasible: " << inf->reason << "\n";
    return kExitInfeasible;
  }
  const auto secret = decode_secret(topo.field(), std::get<std::vector<FieldElement>>(res));
  write_atomic(out_path, std::string_view(reinterpret_cast<const char*>(secret.data()), secret.size()));
  out << "reconstructed " << secret.size() << " bytes from " << loaded.size() << " shares into "
      << out_path.string() << "\n";
  return kExitOk;
}

int cmd_refresh(const fs::path& topo_path, const fs::path& dir, const std::optional<std::uint64_t>& seed,
                std::ostream& out) {
  const auto topo = load_topology(topo_path);
  if (!fs::is_directory(dir)) throw InputError(dir.string() + " is not a directory");
  auto manifest = load_manifest(dir, topo);
  const auto loaded = load_shares({dir.string()}, topo, manifest);
  if (loaded.empty()) throw InputError("no share files in " + dir.string());
  const std::size_t epoch = loaded.front().share.epoch;
  const std::size_t chunks = loaded.front().share.values.size();
  for (const auto& l : loaded) {
    if (l.share.epoch != epoch)
      throw EpochMismatch("share files mix epochs " + std::to_string(epoch) + " and " +
                          std::to_string(l.share.epoch) + " (" + l.path.string() + ")");
    if (l.share.values.size() != chunks) throw InputError(l.path.string() + ": chunk count differs");
  }
  if (manifest && manifest->epoch != epoch)
    throw EpochMismatch("manifest says epoch " + std::to_string(manifest->epoch) + ", shares are at " +
                        std::to_string(epoch));
  auto rng = make_rng(seed);
  const auto deltas = refresh(topo, epoch, chunks, *rng);
  Manifest m = manifest ? *manifest
                        : Manifest{chunks, epoch, topology_digest(topo), to_hex(topo.field().modulus()), {}};
  std::set<std::pair<std::string, std::size_t>> present;
  for (const auto& l : loaded) {
    const auto& d = deltas.at(l.share.network_id).at(l.share.node_index - 1);
    write_share(dir, apply_refresh(l.share, d), topo.field());
    present.emplace(l.share.network_id, l.share.node_index);
  }
  std::set<std::pair<std::string, std::size_t>> stale(m.stale.begin(), m.stale.end());
  std::size_t newly = 0;
  for (const auto& net : topo.networks())
    for (std::size_t x = 1; x <= net.node_count; ++x)
      if (!present.count({net.id, x}) && stale.insert({net.id, x}).second) ++newly;
  m.stale.assign(stale.begin(), stale.end());
  m.epoch = epoch + 1;
  write_manifest(dir, m);
  out << "refreshed " << loaded.size() << " shares to epoch " << m.epoch;
  if (newly) out << "; " << newly << " missing node(s) flagged stale";
  out << "\n";
  return kExitOk;
}

void print_thresholds(std::ostream& out, const char* label, const Thresholds& t) {
  out << label << " t_networks=" << t.t_networks << "\n"
      << label << " t_nodes=" << t.t_nodes << "\n"
      << label << " t_fail=" << t.t_fail << "\n"
      << label << " t_f0=" << t.t_f0 << "\n"
      << label << " t_f1=" << t.t_f1 << "\n";
}

int cmd_thresholds(const fs::path& topo_path, bool oracle, std::ostream& out, std::ostream& err) {
  const auto topo = load_topology(topo_path);
  const auto formula = compute_thresholds_formula(topo);
  print_thresholds(out, "formula", formula);
  if (!oracle) return kExitOk;
  if (topo.total_nodes() > kOracleNodeLimit) {
    err << "oracle capacity exceeded: " << topo.total_nodes() << " nodes in total, the exhaustive oracle "
        << "handles a sum of node counts <= " << kOracleNodeLimit << "\n";
    return kExitCapacity;
  }
  const auto o = compute_thresholds_oracle(topo);
  print_thresholds(out, "oracle", o.values);
  auto diff = [&](const char* name, std::size_t a, std::size_t b, const std::string& note) {
    if (a != b) out << "DISCREPANCY " << name << ": formula " << a << ", oracle " << b << note << "\n";
  };
  diff("t_networks", formula.t_networks, o.values.t_networks, "");
  diff("t_nodes", formula.t_nodes, o.values.t_nodes, "");
  diff("t_fail", formula.t_fail, o.values.t_fail, "");
  diff("t_f0", formula.t_f0, o.values.t_f0, "");
  diff("t_f1", formula.t_f1, o.values.t_f1,
       " (formula sums over " + std::to_string(formula_f1_cardinality(topo)) +
           " daughter(s); denying access takes " + std::to_string(o.t_f1_daughters) + ")");
  return kExitOk;
}

int cmd_simulate(const fs::path& scenario_path, std::uint64_t seed, const std::optional<fs::path>& state,
                 const std::optional<fs::path>& report_path, std::ostream& out) {
  Json j;
  try {
    j = read_json(scenario_path);
  } catch (const LoadError& e) {
    throw InputError(e.what());
  }
  const auto sc = parse_scenario(j);
  std::optional<Simulation> sim;
  if (state && fs::exists(*state)) {
    sim.emplace(Simulation::load_state(*state));
    if (sc.topology && topology_digest(*sc.topology) != topology_digest(sim->topology()))
      throw InputError("scenario topology differs from the one in " + state->string());
    if ((j.contains("secret") || j.contains("secret_hex")) && sc.secret != sim->secret())
      throw InputError("scenario secret differs from the one in " + state->string());
    out << "resumed from " << state->string() << "\n";
  } else {
    if (!sc.topology) throw InputError("scenario has no topology and there is no state to resume");
    sim.emplace(*sc.topology, sc.secret, seed);
  }
  auto rep = run_events(*sim, sc.events);
  rep.json["seed"] = seed;
  if (state) sim->save_state(*state);
  fs::path rp = report_path ? *report_path : fs::path(scenario_path.string() + ".report.json");
  if (!report_path && rp.extension() == ".json") {
    auto stem = scenario_path;
    stem.replace_extension();
    rp = fs::path(stem.string() + ".report.json");
  }
  write_atomic(rp, rep.json.dump(2) + "\n");
  out << rep.summary << "report: " << rp.string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"multiss: two-level secret sharing across a mother network and daughter networks"};
  app.require_subcommand(1);

  std::string topo, secret, out_dir, out_path, shares_dir, scenario;
  std::vector<std::string> shares;
  std::optional<std::uint64_t> seed;
  std::uint64_t sim_seed = 0;
  std::optional<std::string> state, report;
  bool oracle = false;

  auto* deal_cmd = app.add_subcommand("deal", "split a file into share files");
  deal_cmd->add_option("--topology", topo, "topology JSON")->required();
  deal_cmd->add_option("--secret", secret, "file to split")->required();
  deal_cmd->add_option("--out", out_dir, "output directory")->required();
  deal_cmd->add_option("--seed", seed, "deterministic randomness");

  auto* rec_cmd = app.add_subcommand("reconstruct", "recover a file from share files");
  rec_cmd->add_option("--topology", topo, "topology JSON")->required();
  rec_cmd->add_option("--shares", shares, "share directory or share files")->required();
  rec_cmd->add_option("--out", out_path, "where to write the secret")->required();

  auto* ref_cmd = app.add_subcommand("refresh", "advance every share file one epoch");
  ref_cmd->add_option("--topology", topo, "topology JSON")->required();
  ref_cmd->add_option("--shares", shares_dir, "share directory")->required();
  ref_cmd->add_option("--seed", seed, "deterministic randomness");

  auto* thr_cmd = app.add_subcommand("thresholds", "security and availability thresholds");
  thr_cmd->add_option("--topology", topo, "topology JSON")->required();
  thr_cmd->add_flag("--oracle", oracle, "also run the exhaustive oracle (small topologies)");

  auto* sim_cmd = app.add_subcommand("simulate", "run an attack scenario");
  sim_cmd->add_option("--scenario", scenario, "scenario JSON")->required();
  sim_cmd->add_option("--seed", sim_seed, "simulation seed")->required();
  sim_cmd->add_option("--state", state, "state file to resume from and save to");
  sim_cmd->add_option("--report", report, "report path (default <scenario>.report.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*deal_cmd) return cmd_deal(topo, secret, out_dir, seed, out);
    if (*rec_cmd) return cmd_reconstruct(topo, shares, out_path, out, err);
    if (*ref_cmd) return cmd_refresh(topo, shares_dir, seed, out);
    if (*thr_cmd) return cmd_thresholds(topo, oracle, out, err);
    if (*sim_cmd) {
      std::optional<fs::path> st, rp;
      if (state) st = *state;
      if (report) rp = *report;
      return cmd_simulate(scenario, sim_seed, st, rp, out);
    }
  } catch (const EpochMismatch& e) {
    err << "epoch mismatch: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const LoadError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CorruptionError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UsageError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace multiss
