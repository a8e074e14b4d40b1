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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "multiss/errors.hpp"
#include "multiss/formats.hpp"
#include "multiss/oracle.hpp"
#include "multiss/protocol.hpp"
#include "multiss/simnet.hpp"
#include "multiss/sss.hpp"
#include "multiss/thresholds.hpp"

namespace fs = std::filesystem;
using namespace multiss;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

#define REQUIRE(cond, msg)                     \
  do {                                         \
    if (!(cond)) return Outcome{false, (msg)}; \
  } while (0)

// Every coefficient vector of length `len` over F_q, q small.
void for_each_vector(const Field& f, std::size_t len,
                     const std::function<void(const std::vector<FieldElement>&)>& fn) {
  const auto q = static_cast<std::size_t>(f.modulus());
  std::vector<std::size_t> digits(len, 0);
  std::vector<FieldElement> v(len, f.zero());
  while (true) {
    for (std::size_t i = 0; i < len; ++i) v[i] = f.element(digits[i]);
    fn(v);
    std::size_t i = 0;
    while (i < len && ++digits[i] == q) digits[i++] = 0;
    if (i == len) return;
  }
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Polynomial with_constant(const FieldElement& c, const std::vector<FieldElement>& rest) {
  std::vector<FieldElement> coeffs{c};
  coeffs.insert(coeffs.end(), rest.begin(), rest.end());
  return Polynomial(coeffs);
}

// ---- 1 ----------------------------------------------------------------------
Outcome shamir_exhaustive() {
  const Field f(7);
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (int s = 0; s < 7; ++s) {
        const auto secret = f.element(s);
        bool ok = true;
        for_each_vector(f, k - 1, [&](const std::vector<FieldElement>& rest) {
          const auto shares = shamir_split_with(with_constant(secret, rest), k, n);
          for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
            std::vector<FlatShare> pick;
            for (auto i : idx) pick.push_back(shares[i]);
            ok = ok && shamir_reconstruct(pick) == secret;
            ++checked;
          });
        });
        REQUIRE(ok, "k=" + std::to_string(k) + " n=" + std::to_string(n) + " secret " + std::to_string(s));
      }
    }
  }
  return {true, std::to_string(checked) + " subsets over every dealer polynomial"};
}

// ---- 2 ----------------------------------------------------------------------
Outcome perfect_secrecy() {
  const Field f(7);
  const std::size_t n = 6;
  std::size_t histograms = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<std::vector<std::vector<int>>> all_subsets;  // per subset: per secret histogram
    std::vector<std::vector<std::size_t>> subsets;
    for_each_subset(n, k - 1, [&](const std::vector<std::size_t>& idx) { subsets.push_back(idx); });
    for (const auto& idx : subsets) {
      std::vector<std::map<std::vector<int>, int>> hist(7);
      for (int s = 0; s < 7; ++s) {
        for_each_vector(f, k - 1, [&](const std::vector<FieldElement>& rest) {
          const auto shares = shamir_split_with(with_constant(f.element(s), rest), k, n);
          std::vector<int> key;
          for (auto i : idx) key.push_back(static_cast<int>(shares[i].y.value()));
          ++hist[s][key];
        });
      }
      for (int s = 1; s < 7; ++s)
        REQUIRE(hist[s] == hist[0], "k=" + std::to_string(k) + ": histogram differs for secret " + std::to_string(s));
      ++histograms;
    }
  }
  return {true, std::to_string(histograms) + " (k-1)-subsets, all 7 secrets identical"};
}

// ---- 3 ----------------------------------------------------------------------
Outcome birkhoff_recovery() {
  const Field f(11);
  SeededRandom rng(3);
  for (int c = 0; c < 1000; ++c) {
    const std::size_t d = rng.next_u64() % 4;
    const auto p = random_polynomial_uniform(d, f.random(rng), rng);
    const auto dp = derivative(p);
    std::vector<BirkhoffConstraint> cons{{f.one(), Order::Value, p(f.one())}};
    for (std::size_t i = 1; i <= d; ++i) cons.push_back({f.element(i), Order::FirstDerivative, dp(f.element(i))});
    const auto got = birkhoff_solve(cons, d);
    REQUIRE(got && *got == p, "case " + std::to_string(c) + " degree " + std::to_string(d));
  }
  return {true, "1000 random polynomials, 0 failures"};
}

// ---- 4 ----------------------------------------------------------------------
Outcome access_dichotomy() {
  const auto topo = Topology::uniform(Field::mersenne127(), 3, 3, 1, 1);
  SeededRandom rng(4);
  const auto chunks = encode_secret(topo.field(), std::vector<std::uint8_t>{'o', 'k'});
  const auto shares = deal(chunks, topo, rng);
  std::vector<NodeRef> nodes;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t x = 1; x <= 3; ++x) nodes.push_back({j, x});
  std::size_t yes = 0;
  for (std::uint32_t mask = 0; mask < 512; ++mask) {
    std::vector<NodeRef> held;
    ShareMap pick;
    for (std::size_t i = 0; i < 9; ++i) {
      if (!(mask >> i & 1)) continue;
      held.push_back(nodes[i]);
      const auto& id = topo.network(nodes[i].network).id;
      pick[id].push_back(shares.at(id)[nodes[i].node - 1]);
    }
    const auto r = reconstruct(pick, topo);
    const bool ok = std::holds_alternative<std::vector<FieldElement>>(r) &&
                    std::get<std::vector<FieldElement>>(r) == chunks;
    REQUIRE(ok == (access_oracle(topo, held) == Verdict::Reconstructs), "subset mask " + std::to_string(mask));
    yes += ok;
  }

  // Reduced instance at q = 7: exact value distributions.
  const Field f(7);
  const auto small = Topology::uniform(f, 2, 2, 1, 1);
  std::size_t silent = 0;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    std::vector<NodeRef> held;
    for (std::size_t i = 0; i < 4; ++i)
      if (mask >> i & 1) held.push_back({i / 2, i % 2 + 1});
    if (access_oracle(small, held) != Verdict::NoInformation) continue;
    ++silent;
    std::vector<std::map<std::vector<int>, int>> hist(7);
    for (int s = 0; s < 7; ++s) {
      for_each_vector(f, 3, [&](const std::vector<FieldElement>& r) {
        const DealerRandomness dr{{r[0]}, {{r[1]}, {r[2]}}};
        const auto vals = deal_chunk(f.element(s), small, dr);
        std::vector<int> key;
        for (const auto& h : held) key.push_back(static_cast<int>(vals[h.network][h.node - 1].value()));
        ++hist[s][key];
      });
    }
    for (int s = 1; s < 7; ++s)
      REQUIRE(hist[s] == hist[0], "q=7 subset mask " + std::to_string(mask) + " leaks");
  }
  return {true, "512 subsets agree (" + std::to_string(yes) + " reconstruct); " + std::to_string(silent) +
                    " silent subsets exactly secret-independent at q=7"};
}

// All topologies with 2 <= l <= 4, n_i <= 4, degrees <= 2; mother first
// (relabeling the mother's position gives isomorphic topologies).
std::vector<Topology> enumerate_topologies(const Field& f) {
  std::vector<std::pair<std::size_t, std::size_t>> cfg;  // (n, d)
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t d = 0; d <= std::min<std::size_t>(2, n - 1); ++d) cfg.emplace_back(n, d);
  std::vector<Topology> out;
  for (std::size_t l = 2; l <= 4; ++l) {
    std::vector<std::size_t> pick(l, 0);
    while (true) {
      std::vector<NetworkSpec> nets;
      for (std::size_t j = 0; j < l; ++j)
        nets.push_back({"n" + std::to_string(j), cfg[pick[j]].first, cfg[pick[j]].second,
                        j == 0 ? LinkKind::Its : LinkKind::Classical});
      for (std::size_t outer = 1; outer <= l - 1; ++outer) out.emplace_back(f, nets, 0, outer);
      std::size_t i = 0;
      while (i < l && ++pick[i] == cfg.size()) pick[i++] = 0;
      if (i == l) break;
    }
  }
  return out;
}

// ---- 5 ----------------------------------------------------------------------
Outcome threshold_agreement(const std::vector<Topology>& topos) {
  std::size_t f1_differs = 0, fail_differs = 0;
  for (std::size_t i = 0; i < topos.size(); ++i) {
    const auto& t = topos[i];
    const auto formula = compute_thresholds_formula(t);
    const auto o = compute_thresholds_oracle(t);
    const std::string where = "topology #" + std::to_string(i) + " " + topology_to_json(t).dump();
    REQUIRE(formula.t_networks == o.values.t_networks, "t_networks differs on " + where);
    REQUIRE(formula.t_nodes == o.values.t_nodes, "t_nodes differs on " + where);
    REQUIRE(o.t_f1_daughters == formula_f1_cardinality(t) + 1, "t_f1 daughter count not formula+1 on " + where);
    f1_differs += formula.t_f1 != o.values.t_f1;
    fail_differs += formula.t_fail != o.values.t_fail;
  }
  return {true, std::to_string(topos.size()) + " topologies; t_networks/t_nodes agree everywhere; t_f1 value differs on " +
                    std::to_string(f1_differs) + " (t_fail on " + std::to_string(fail_differs) +
                    "), always exactly one more disabled daughter"};
}

// ---- 6 ----------------------------------------------------------------------
Outcome whole_network_compromise(const std::vector<Topology>& topos) {
  std::size_t checks = 0;
  for (std::size_t i = 0; i < topos.size(); ++i) {
    const auto& t = topos[i];
    if (compute_thresholds_formula(t).t_networks < 2) continue;
    for (std::size_t j = 0; j < t.network_count(); ++j) {
      std::vector<NodeRef> held;
      for (std::size_t x = 1; x <= t.network(j).node_count; ++x) held.push_back({j, x});
      REQUIRE(access_oracle(t, held) == Verdict::NoInformation,
              "network " + t.network(j).id + " alone reconstructs on topology #" + std::to_string(i));
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " single-network compromises, all NoInformation"};
}

// ---- 7 ----------------------------------------------------------------------
Outcome adversary_scenarios() {
  const Field f = Field::mersenne127();
  std::vector<Topology> topos{Topology::uniform(f, 3, 3, 1, 1), Topology::uniform(f, 2, 2, 1, 1),
                              Topology(f, {{"paris", 5, 2, LinkKind::Its}, {"tokyo", 6, 2, LinkKind::Classical},
                                           {"geneva", 6, 3, LinkKind::Classical}, {"austin", 6, 1, LinkKind::Classical}},
                                       0, 2)};
  SeededRandom rng(7);
  for (int i = 0; i < 10; ++i) {
    const std::size_t l = 2 + rng.next_u64() % 4;
    std::vector<NetworkSpec> nets;
    for (std::size_t j = 0; j < l; ++j) {
      const std::size_t n = 1 + rng.next_u64() % 6;
      nets.push_back({"n" + std::to_string(j), n, rng.next_u64() % n, j == 0 ? LinkKind::Its : LinkKind::Classical});
    }
    topos.emplace_back(f, nets, 0, 1 + rng.next_u64() % (l - 1));
  }
  auto event = [](EventType t, std::string net = "") {
    Event e;
    e.type = t;
    e.network = std::move(net);
    return e;
  };
  Event attack = event(EventType::AttemptReconstruct);
  attack.actor = Actor::Adversary;
  const std::vector<std::uint8_t> secret{'t', 'o', 'p', ' ', 's', 'e', 'c', 'r', 'e', 't'};
  std::size_t runs = 0;
  for (const auto& t : topos) {
    const auto mother = t.mother().id;
    const std::vector<std::pair<std::vector<Event>, const char*>> cases{
        {{event(EventType::Deal), event(EventType::HndlDecryptClassical), attack}, "NoInformation"},
        {{event(EventType::Deal), event(EventType::CompromiseNetwork, mother), attack}, "NoInformation"},
        {{event(EventType::Deal), event(EventType::HndlDecryptClassical), event(EventType::CompromiseNetwork, mother),
          attack},
         "Reconstructs"}};
    for (const auto& [events, want] : cases) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto a = run_scenario({t, secret, events}, seed);
        const auto b = run_scenario({t, secret, events}, seed);
        REQUIRE(a.json.dump() == b.json.dump(), "report not deterministic");
        const auto& last = a.json.at("events").back();
        REQUIRE(last.at("verdict") == want, std::string("expected ") + want + " on " + topology_to_json(t).dump());
        if (std::string(want) == "Reconstructs")
          REQUIRE(last.at("recovered_matches_secret").get<bool>(), "combined adversary got wrong bytes");
        ++runs;
      }
    }
  }
  return {true, std::to_string(runs) + " scenario runs: harvest-only and mother-only silent, combined recovers"};
}

// ---- 8 ----------------------------------------------------------------------
Outcome refresh_suite() {
  const Field big = Field::mersenne127();
  SeededRandom rng(8);
  for (const auto& topo : {Topology::uniform(big, 3, 3, 1, 1), Topology::uniform(big, 4, 5, 2, 2)}) {
    const auto chunks = encode_secret(big, std::vector<std::uint8_t>(40, 0x5a));
    auto shares = deal(chunks, topo, rng);
    const auto initial = shares;
    for (std::size_t round = 0; round < 5; ++round) {
      const auto deltas = refresh(topo, round, chunks.size(), rng);
      for (auto& [id, list] : shares)
        for (auto& s : list) s = apply_refresh(s, deltas.at(id)[s.node_index - 1]);
      const auto r = reconstruct(shares, topo);
      REQUIRE(std::holds_alternative<std::vector<FieldElement>>(r) &&
                  std::get<std::vector<FieldElement>>(r) == chunks,
              "secret lost after round " + std::to_string(round + 1));
    }
    ShareMap mixed = shares;
    mixed[topo.mother().id] = initial.at(topo.mother().id);
    bool rejected = false;
    try {
      reconstruct(mixed, topo);
    } catch (const EpochMismatch&) {
      rejected = true;
    }
    REQUIRE(rejected, "cross-epoch mix accepted");
  }
  // Flat shares too.
  {
    auto s = shamir_split_with(with_constant(big.element(9), {big.element(4)}), 2, 3);
    const auto d = refresh_deltas_with(Polynomial({big.zero(), big.element(5)}), 3, 0);
    std::vector<FlatShare> mix{apply_refresh(s[0], d[0]), s[1]};
    bool rejected = false;
    try {
      shamir_reconstruct(mix);
    } catch (const EpochMismatch&) {
      rejected = true;
    }
    REQUIRE(rejected, "flat cross-epoch mix accepted");
  }
  // Exact uniformity of one refreshed position at q = 7.
  const Field f(7);
  std::size_t positions = 0;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (int s0 = 0; s0 < 7; ++s0) {
      const FlatShare start{1, f.element(s0), d + 1, 0};
      for (std::size_t x = 1; x <= 6; ++x) {
        std::vector<int> hist(7, 0);
        for_each_vector(f, d, [&](const std::vector<FieldElement>& r) {
          const auto deltas = refresh_deltas_with(with_constant(f.zero(), r), 6, 0);
          FlatShare at = start;
          at.x = x;
          ++hist[static_cast<int>(apply_refresh(at, deltas[x - 1]).y.value())];
        });
        const int each = hist[0];
        REQUIRE(std::all_of(hist.begin(), hist.end(), [&](int h) { return h == each; }),
                "non-uniform at d=" + std::to_string(d) + " x=" + std::to_string(x));
        ++positions;
      }
    }
  }
  return {true, "5 rounds preserve the secret; epoch mixes rejected; " + std::to_string(positions) +
                    " positions exactly uniform at q=7"};
}

// ---- 9 ----------------------------------------------------------------------
Outcome cli_round_trip() {
  const fs::path dir = fs::temp_directory_path() / "multiss_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto topo = Topology::uniform(Field::mersenne127(), 3, 3, 1, 1);
  { std::ofstream(dir / "topo.json") << dump_topology(topo); }
  std::vector<char> data(1 << 20);
  SeededRandom rng(9);
  for (auto& c : data) c = static_cast<char>(rng.next_u64());
  { std::ofstream(dir / "secret.bin", std::ios::binary).write(data.data(), static_cast<std::streamsize>(data.size())); }
  const std::string bin = MULTISS_CLI_BINARY;
  const std::string d = dir.string();
  auto run = [&](const std::string& args) {
    return std::system((bin + " " + args + " > " + d + "/log.txt 2>&1").c_str());
  };
  REQUIRE(run("deal --topology " + d + "/topo.json --secret " + d + "/secret.bin --out " + d + "/shares --seed 1") == 0, "deal failed");
  REQUIRE(run("refresh --topology " + d + "/topo.json --shares " + d + "/shares --seed 2") == 0, "refresh failed");
  REQUIRE(run("reconstruct --topology " + d + "/topo.json --shares " + d + "/shares --out " + d + "/back.bin") == 0,
          "reconstruct failed");
  std::ifstream in(dir / "back.bin", std::ios::binary);
  const std::vector<char> back((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  REQUIRE(back == data, "reconstructed file differs");
  fs::remove_all(dir);
  return {true, "1 MiB file bit-exact after deal, refresh, reconstruct"};
}

}  // namespace

int main() {
  const auto enum_field = Field((BigInt(1) << 31) - 1);
  std::vector<Topology> topos;
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Shamir exhaustive correctness", 10, shamir_exhaustive},
      {2, "exact perfect secrecy", 60, perfect_secrecy},
      {3, "Birkhoff reconstruction", 5, birkhoff_recovery},
      {4, "access dichotomy", 300, access_dichotomy},
      {5, "threshold agreement",
       120,
       [&] {
         topos = enumerate_topologies(enum_field);
         return threshold_agreement(topos);
       }},
      {6, "whole-network compromise", 60, [&] { return whole_network_compromise(topos); }},
      {7, "harvest-now-decrypt-later and incompatibility", 10, adversary_scenarios},
      {8, "refresh suite", 30, refresh_suite},
      {9, "end-to-end CLI round trip", 30, cli_round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.limit_s) o = {false, o.detail + "; too slow"};
    failed += !o.ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.limit_s);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << "): " << o.detail
              << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (9 - failed) << "/9" << std::endl;
  return failed ? 1 : 0;
}
