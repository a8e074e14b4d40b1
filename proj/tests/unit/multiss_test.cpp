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

#include <gtest/gtest.h>

#include <algorithm>

#include "multiss/errors.hpp"
#include "multiss/oracle.hpp"
#include "multiss/protocol.hpp"
#include "multiss/thresholds.hpp"

namespace multiss {
namespace {

std::vector<FieldElement> ints(const Field& f, std::vector<int> v) {
  std::vector<FieldElement> out;
  for (int x : v) out.push_back(f.element(x));
  return out;
}

// The worked deployment: q = 11, three networks of three nodes, every degree 1,
// P = 4 + 3X, Q_0 = 7 + 2X, Q_1 = 3 + 5X, Q_2 = 3 + X.
struct WorkedExample {
  Field f{11};
  Topology topo = Topology::uniform(f, 3, 3, 1, 1);
  DealerRandomness rnd{ints(f, {3}), {ints(f, {2}), ints(f, {5}), ints(f, {1})}};
  ShareMap shares() const {
    const std::vector<FieldElement> chunk{f.element(4)};
    const std::vector<DealerRandomness> r{rnd};
    return deal_with(chunk, topo, r);
  }
};

std::vector<int> values_of(const std::vector<NodeShare>& v) {
  std::vector<int> out;
  for (const auto& s : v) out.push_back(static_cast<int>(s.values.at(0).value()));
  return out;
}

TEST(Topology, Validation) {
  const Field f = Field::mersenne127();
  EXPECT_NO_THROW(Topology::uniform(f, 3, 3, 1, 2));
  EXPECT_THROW(Topology::uniform(f, 1, 3, 1, 1), UsageError);
  EXPECT_THROW(Topology::uniform(f, 3, 3, 1, 3), UsageError);  // outer degree > daughters
  EXPECT_THROW(Topology::uniform(f, 3, 3, 1, 0), UsageError);
  EXPECT_THROW(Topology::uniform(f, 3, 2, 2, 1), UsageError);  // inner degree + 1 > nodes
  std::vector<NetworkSpec> wrong_link{{"m", 2, 1, LinkKind::Classical},
                                      {"d", 2, 1, LinkKind::Classical}};
  EXPECT_THROW(Topology(f, wrong_link, 0, 1), UsageError);
  std::vector<NetworkSpec> dup{{"m", 2, 1, LinkKind::Its}, {"m", 2, 1, LinkKind::Classical}};
  EXPECT_THROW(Topology(f, dup, 0, 1), UsageError);
  EXPECT_THROW(Topology::uniform(Field(7), 3, 7, 1, 1), UsageError);  // node index 7 == q
}

TEST(Topology, DerivativePointsFollowDaughterOrder) {
  std::vector<NetworkSpec> nets{{"a", 2, 1, LinkKind::Classical},
                                {"m", 2, 1, LinkKind::Its},
                                {"b", 2, 1, LinkKind::Classical}};
  const Topology t(Field(11), nets, 1, 2);
  EXPECT_EQ(t.derivative_point(0), 1u);
  EXPECT_EQ(t.derivative_point(2), 2u);
  EXPECT_THROW(t.derivative_point(1), UsageError);
  EXPECT_EQ(t.daughter_indices(), (std::vector<std::size_t>{0, 2}));
}

TEST(Deal, WorkedExampleShares) {
  const WorkedExample ex;
  // Oracle: integer evaluation of the hand-written polynomials.
  auto eval = [](int c0, int c1, int x) { return (c0 + c1 * x) % 11; };
  const int p1 = eval(4, 3, 1);  // Q_0(0) = P(1)
  const int dp = 3;              // Q_i(0) = P'(i) for linear P
  std::vector<int> mother, d1, d2;
  for (int x = 1; x <= 3; ++x) {
    mother.push_back(eval(p1, 2, x));
    d1.push_back(eval(dp, 5, x));
    d2.push_back(eval(dp, 1, x));
  }
  ASSERT_EQ(mother, (std::vector<int>{9, 0, 2}));
  ASSERT_EQ(d1, (std::vector<int>{8, 2, 7}));
  ASSERT_EQ(d2, (std::vector<int>{4, 5, 6}));

  const auto shares = ex.shares();
  EXPECT_EQ(values_of(shares.at("mother")), mother);
  EXPECT_EQ(values_of(shares.at("daughter1")), d1);
  EXPECT_EQ(values_of(shares.at("daughter2")), d2);
}

TEST(Deal, ShapeAndEpoch) {
  const Field f = Field::mersenne127();
  std::vector<NetworkSpec> nets{{"paris", 4, 2, LinkKind::Its},
                                {"tokyo", 3, 1, LinkKind::Classical},
                                {"geneva", 2, 0, LinkKind::Classical}};
  const Topology t(f, nets, 0, 2);
  SeededRandom rng(1);
  const auto chunks = ints(f, {10, 20, 30});
  const auto shares = deal(chunks, t, rng);
  std::size_t total = 0;
  for (const auto& [id, list] : shares) {
    for (const auto& s : list) {
      EXPECT_EQ(s.network_id, id);
      EXPECT_EQ(s.epoch, 0u);
      EXPECT_EQ(s.values.size(), 3u);
      ++total;
    }
  }
  EXPECT_EQ(total, 9u);
}

TEST(Deal, SingleDaughterHoldsConstantDerivative) {
  const Field f(11);
  const auto t = Topology::uniform(f, 2, 3, 1, 1);
  const std::vector<DealerRandomness> r{{ints(f, {3}), {ints(f, {2}), ints(f, {6})}}};
  const auto shares = deal_with(ints(f, {4}), t, r);
  // Daughter's inner secret is P'(1) = 3 regardless of x.
  std::vector<Point> pts;
  for (const auto& s : shares.at("daughter1")) pts.push_back({f.element(s.node_index), s.values[0]});
  pts.pop_back();
  EXPECT_EQ(lagrange_at_zero(pts), f.element(3));
}

TEST(Reconstruct, WorkedExampleQuorum) {
  const WorkedExample ex;
  auto all = ex.shares();
  ShareMap pick;
  pick["mother"] = {all["mother"][0], all["mother"][1]};
  pick["daughter1"] = {all["daughter1"][0], all["daughter1"][2]};
  auto r = reconstruct(pick, ex.topo);
  ASSERT_TRUE(std::holds_alternative<std::vector<FieldElement>>(r));
  EXPECT_EQ(std::get<std::vector<FieldElement>>(r), ints(ex.f, {4}));

  auto full = reconstruct(all, ex.topo);
  ASSERT_TRUE(std::holds_alternative<std::vector<FieldElement>>(full));
  EXPECT_EQ(std::get<std::vector<FieldElement>>(full), ints(ex.f, {4}));
}

TEST(Reconstruct, DaughtersWithoutMotherAreInfeasible) {
  const WorkedExample ex;
  auto all = ex.shares();
  all.erase("mother");
  auto r = reconstruct(all, ex.topo);
  ASSERT_TRUE(std::holds_alternative<Infeasible>(r));
  const auto& inf = std::get<Infeasible>(r);
  EXPECT_FALSE(inf.mother_met);
  EXPECT_EQ(inf.daughters_met, 2u);
  EXPECT_NE(inf.reason.find("missing mother"), std::string::npos);
}

TEST(Reconstruct, MotherWithoutEnoughDaughters) {
  const WorkedExample ex;
  auto all = ex.shares();
  ShareMap pick;
  pick["mother"] = all["mother"];
  pick["daughter2"] = {all["daughter2"][1]};
  auto r = reconstruct(pick, ex.topo);
  ASSERT_TRUE(std::holds_alternative<Infeasible>(r));
  EXPECT_EQ(std::get<Infeasible>(r).reason,
            "missing daughters: mother quorum 3/2 met; daughter quorums 0/1 met");
}

TEST(Reconstruct, InputErrors) {
  const WorkedExample ex;
  auto all = ex.shares();
  auto mixed = all;
  mixed["daughter1"][0].epoch = 1;
  EXPECT_THROW(reconstruct(mixed, ex.topo), EpochMismatch);
  auto unknown = all;
  unknown["nowhere"] = {};
  EXPECT_THROW(reconstruct(unknown, ex.topo), UsageError);
  auto dup = all;
  dup["mother"].push_back(dup["mother"][0]);
  EXPECT_THROW(reconstruct(dup, ex.topo), UsageError);
  EXPECT_TRUE(std::holds_alternative<Infeasible>(reconstruct(ShareMap{}, ex.topo)));
}

// Random topology with l <= 4, n_i <= 4, degrees <= 2.
Topology random_topology(const Field& f, RandomSource& rng) {
  const std::size_t l = 2 + rng.next_u64() % 3;
  std::vector<NetworkSpec> nets;
  const std::size_t mother = rng.next_u64() % l;
  for (std::size_t j = 0; j < l; ++j) {
    const std::size_t n = 1 + rng.next_u64() % 4;
    const std::size_t d = rng.next_u64() % std::min<std::size_t>(3, n);
    nets.push_back({"net" + std::to_string(j), n, d,
                    j == mother ? LinkKind::Its : LinkKind::Classical});
  }
  const std::size_t outer = 1 + rng.next_u64() % std::min<std::size_t>(2, l - 1);
  return Topology(f, nets, mother, outer);
}

TEST(Protocol, EndToEndRoundTripOnRandomTopologies) {
  const Field f = Field::mersenne127();
  SeededRandom rng(77);
  for (int t = 0; t < 60; ++t) {
    const auto topo = random_topology(f, rng);
    std::vector<std::uint8_t> msg(rng.next_u64() % 200);
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng.next_u64());
    const auto chunks = encode_secret(f, msg);
    auto shares = deal(chunks, topo, rng);

    // A qualifying subset: random quorum in the mother and outer_degree
    // randomly chosen daughters, each quorum a random node subset.
    auto daughters = topo.daughter_indices();
    for (std::size_t i = 0; i < daughters.size(); ++i)
      std::swap(daughters[i], daughters[i + rng.next_u64() % (daughters.size() - i)]);
    std::vector<std::size_t> used{topo.mother_index()};
    used.insert(used.end(), daughters.begin(),
                daughters.begin() + static_cast<std::ptrdiff_t>(topo.outer_degree()));
    ShareMap pick;
    for (std::size_t j : used) {
      auto list = shares.at(topo.network(j).id);
      for (std::size_t i = 0; i < list.size(); ++i)
        std::swap(list[i], list[i + rng.next_u64() % (list.size() - i)]);
      list.erase(list.begin() + static_cast<std::ptrdiff_t>(topo.network(j).inner_degree + 1),
                 list.end());
      pick[topo.network(j).id] = list;
    }
    auto r = reconstruct(pick, topo);
    ASSERT_TRUE(std::holds_alternative<std::vector<FieldElement>>(r));
    EXPECT_EQ(decode_secret(f, std::get<std::vector<FieldElement>>(r)), msg);
  }
}

// ---- refresh ----------------------------------------------------------------

TEST(Refresh, PreservesSecretAndShapes) {
  const Field f = Field::mersenne127();
  const auto topo = Topology::uniform(f, 3, 4, 2, 2);
  SeededRandom rng(8);
  const auto chunks = ints(f, {123, 456});
  auto shares = deal(chunks, topo, rng);
  for (std::size_t epoch = 0; epoch < 3; ++epoch) {
    const auto deltas = refresh(topo, epoch, chunks.size(), rng);
    for (const auto& net : topo.networks()) {
      ASSERT_EQ(deltas.at(net.id).size(), net.node_count);
      for (std::size_t i = 0; i < net.node_count; ++i)
        shares[net.id][i] = apply_refresh(shares[net.id][i], deltas.at(net.id)[i]);
    }
    auto r = reconstruct(shares, topo);
    ASSERT_TRUE(std::holds_alternative<std::vector<FieldElement>>(r));
    EXPECT_EQ(std::get<std::vector<FieldElement>>(r), chunks);
  }
  EXPECT_EQ(shares.at("mother")[0].epoch, 3u);
}

TEST(Refresh, MixingEpochsIsRejected) {
  const Field f = Field::mersenne127();
  const auto topo = Topology::uniform(f, 3, 3, 1, 1);
  SeededRandom rng(9);
  const auto chunks = ints(f, {5});
  const auto before = deal(chunks, topo, rng);
  const auto deltas = refresh(topo, 0, 1, rng);
  ShareMap mix;
  mix["mother"] = before.at("mother");
  for (std::size_t i = 0; i < 3; ++i)
    mix["daughter1"].push_back(apply_refresh(before.at("daughter1")[i], deltas.at("daughter1")[i]));
  EXPECT_THROW(reconstruct(mix, topo), EpochMismatch);
  EXPECT_THROW(apply_refresh(mix["daughter1"][0], deltas.at("daughter1")[0]), UsageError);
  EXPECT_THROW(apply_refresh(before.at("mother")[0], deltas.at("mother")[1]), UsageError);
}

// ---- secret encoding ----------------------------------------------------------

TEST(Encoding, Examples) {
  const Field f = Field::mersenne127();
  EXPECT_EQ(chunk_payload_bytes(f), 15u);
  const auto empty = encode_secret(f, {});
  EXPECT_EQ(empty.size(), 1u);
  EXPECT_TRUE(decode_secret(f, empty).empty());
  std::vector<std::uint8_t> sixteen(16, 0xab);
  EXPECT_EQ(encode_secret(f, sixteen).size(), 2u);  // ceil((16 + 4) / 15)
  EXPECT_EQ(decode_secret(f, encode_secret(f, sixteen)), sixteen);
  EXPECT_THROW(encode_secret(Field(257), sixteen), UsageError);
  EXPECT_EQ(chunk_payload_bytes(Field(65537)), 2u);
}

TEST(Encoding, RoundTripRandomMessages) {
  SeededRandom rng(12);
  for (const Field& f : {Field::mersenne127(), Field(65537), Field((BigInt(1) << 521) - 1)}) {
    for (int t = 0; t < 30; ++t) {
      std::vector<std::uint8_t> msg(rng.next_u64() % 4097);
      for (auto& b : msg) b = static_cast<std::uint8_t>(rng.next_u64());
      EXPECT_EQ(decode_secret(f, encode_secret(f, msg)), msg);
    }
  }
}

TEST(Encoding, CorruptChunksAreRejected) {
  const Field f = Field::mersenne127();
  std::vector<std::uint8_t> msg{1, 2, 3};
  auto chunks = encode_secret(f, msg);
  EXPECT_THROW(decode_secret(f, std::vector<FieldElement>{}), CorruptionError);
  auto too_big = chunks;
  too_big[0] = f.element(BigInt(1) << 120);  // beyond the 15-byte block
  EXPECT_THROW(decode_secret(f, too_big), CorruptionError);
  auto bad_len = chunks;
  bad_len[0] = f.element(BigInt(0xff) << 112);  // header claims ~4 GiB
  EXPECT_THROW(decode_secret(f, bad_len), CorruptionError);
  auto extra = chunks;
  extra.push_back(f.zero());
  EXPECT_THROW(decode_secret(f, extra), CorruptionError);
  EXPECT_THROW(f.from_hex("7fffffffffffffffffffffffffffffff"), CorruptionError);  // == q
}

// ---- access oracle --------------------------------------------------------------

std::vector<NodeRef> whole_network(const Topology& t, std::size_t j) {
  std::vector<NodeRef> out;
  for (std::size_t x = 1; x <= t.network(j).node_count; ++x) out.push_back({j, x});
  return out;
}

TEST(AccessOracle, Examples) {
  const WorkedExample ex;
  EXPECT_EQ(access_oracle(ex.topo, std::span<const NodeRef>{}), Verdict::NoInformation);
  std::vector<NodeRef> all;
  for (std::size_t j = 0; j < 3; ++j)
    for (auto n : whole_network(ex.topo, j)) all.push_back(n);
  EXPECT_EQ(access_oracle(ex.topo, all), Verdict::Reconstructs);
  EXPECT_EQ(access_oracle(ex.topo, whole_network(ex.topo, 1)), Verdict::NoInformation);
  EXPECT_EQ(access_oracle(ex.topo, whole_network(ex.topo, 0)), Verdict::NoInformation);
}

TEST(AccessOracle, FunctionalsReproduceDealtValues) {
  // Each row dotted with the randomness vector equals the stored value.
  const Field f(101);
  std::vector<NetworkSpec> nets{{"m", 3, 2, LinkKind::Its},
                                {"a", 3, 1, LinkKind::Classical},
                                {"b", 2, 1, LinkKind::Classical}};
  const Topology topo(f, nets, 0, 2);
  SeededRandom rng(14);
  const auto secret = f.random(rng);
  const auto r = sample_dealer_randomness(topo, rng);
  const auto values = deal_chunk(secret, topo, r);
  std::vector<FieldElement> vec{secret};
  vec.insert(vec.end(), r.outer.begin(), r.outer.end());
  for (const auto& b : r.inner) vec.insert(vec.end(), b.begin(), b.end());
  const FunctionalLayout layout(topo, 0);
  ASSERT_EQ(layout.columns(), vec.size());
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t x = 1; x <= nets[j].node_count; ++x) {
      const auto row = layout.row({HeldKind::Share, j, x, 0});
      FieldElement acc = f.zero();
      for (std::size_t c = 0; c < row.size(); ++c) acc += row[c] * vec[c];
      EXPECT_EQ(acc, values[j][x - 1]);
    }
  }
}

TEST(AccessOracle, AgreesWithReconstructOnEverySubset) {
  const Field f = Field::mersenne127();
  SeededRandom rng(15);
  std::vector<Topology> topos{Topology::uniform(f, 3, 3, 1, 1),
                              Topology::uniform(f, 3, 3, 2, 2),
                              Topology::uniform(f, 4, 2, 1, 2)};
  for (const auto& topo : topos) {
    const auto chunks = ints(f, {42});
    const auto shares = deal(chunks, topo, rng);
    std::vector<NodeRef> nodes;
    for (std::size_t j = 0; j < topo.network_count(); ++j)
      for (auto n : whole_network(topo, j)) nodes.push_back(n);
    for (std::uint32_t mask = 0; mask < (1u << nodes.size()); ++mask) {
      std::vector<NodeRef> held;
      ShareMap pick;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        held.push_back(nodes[i]);
        const auto& id = topo.network(nodes[i].network).id;
        pick[id].push_back(shares.at(id)[nodes[i].node - 1]);
      }
      const auto r = reconstruct(pick, topo);
      const bool ok = std::holds_alternative<std::vector<FieldElement>>(r);
      ASSERT_EQ(ok, access_oracle(topo, held) == Verdict::Reconstructs);
      if (ok) ASSERT_EQ(std::get<std::vector<FieldElement>>(r), chunks);
    }
  }
}

TEST(AccessOracle, WholeNetworkCompromiseRevealsNothing) {
  const Field f((BigInt(1) << 31) - 1);
  SeededRandom rng(16);
  for (int t = 0; t < 100; ++t) {
    const auto topo = random_topology(f, rng);
    for (std::size_t j = 0; j < topo.network_count(); ++j)
      EXPECT_EQ(access_oracle(topo, whole_network(topo, j)), Verdict::NoInformation);
  }
}

TEST(AccessOracle, RefreshDefeatsSuccessiveLeaks) {
  const Field f = Field::mersenne127();
  const auto topo = Topology::uniform(f, 2, 3, 1, 1);
  std::vector<Observation> held;
  for (std::size_t x = 1; x <= 3; ++x)
    for (std::size_t e = 0; e <= 1; ++e) held.push_back({HeldKind::Share, 1, x, e});
  held.push_back({HeldKind::Share, 0, 1, 0});  // mother node 1 before refresh
  held.push_back({HeldKind::Share, 0, 2, 1});  // mother node 2 after refresh
  EXPECT_EQ(access_oracle(topo, held), Verdict::NoInformation);
  auto same_epoch = held;
  same_epoch.back().epoch = 0;
  EXPECT_EQ(access_oracle(topo, same_epoch), Verdict::Reconstructs);
  // A node compromised across the refresh (sticky) also captures its delta,
  // which lets the adversary roll its share forward.
  auto sticky = held;
  sticky.push_back({HeldKind::Delta, 0, 1, 0});
  EXPECT_EQ(access_oracle(topo, sticky), Verdict::Reconstructs);
}

TEST(AccessOracle, ExtractionCoefficientsRecoverTheSecret) {
  const WorkedExample ex;
  const auto all = ex.shares();
  std::vector<Observation> held{{HeldKind::Share, 0, 1, 0},
                                {HeldKind::Share, 0, 3, 0},
                                {HeldKind::Share, 2, 2, 0},
                                {HeldKind::Share, 2, 3, 0}};
  const auto lambda = extraction_coefficients(ex.topo, held);
  ASSERT_TRUE(lambda);
  const FieldElement s = (*lambda)[0] * all.at("mother")[0].values[0] +
                         (*lambda)[1] * all.at("mother")[2].values[0] +
                         (*lambda)[2] * all.at("daughter2")[1].values[0] +
                         (*lambda)[3] * all.at("daughter2")[2].values[0];
  EXPECT_EQ(s, ex.f.element(4));
  held.pop_back();
  EXPECT_FALSE(extraction_coefficients(ex.topo, held));
}

// ---- thresholds ----------------------------------------------------------------

TEST(Thresholds, ClosedFormExamples) {
  const Field f = Field::mersenne127();
  const auto worked = compute_thresholds_formula(Topology::uniform(f, 3, 3, 1, 1));
  EXPECT_EQ(worked.t_networks, 2u);
  EXPECT_EQ(worked.t_nodes, 4u);
  EXPECT_EQ(worked.t_f0, 2u);
  EXPECT_EQ(worked.t_f1, 2u);
  EXPECT_EQ(worked.t_fail, 2u);
  EXPECT_EQ(compute_thresholds_formula(Topology::uniform(f, 3, 1, 0, 1)).t_f0, 1u);
  EXPECT_EQ(compute_thresholds_formula(Topology::uniform(f, 2, 3, 1, 1)).t_networks, 2u);
}

TEST(Thresholds, OracleWorkedExample) {
  const auto topo = Topology::uniform(Field::mersenne127(), 3, 3, 1, 1);
  const auto o = compute_thresholds_oracle(topo);
  EXPECT_EQ(o.values.t_nodes, 4u);
  EXPECT_EQ(o.values.t_networks, 2u);
  EXPECT_EQ(o.values.t_fail, 2u);
  EXPECT_EQ(o.values.t_f0, 2u);
  // Both daughters' quorums must go (2 nodes each); the closed form sums
  // over a single daughter.
  EXPECT_EQ(o.values.t_f1, 4u);
  EXPECT_EQ(o.t_f1_daughters, 2u);
  EXPECT_EQ(formula_f1_cardinality(topo), 1u);
  EXPECT_EQ(o.nodes_witness.size(), 4u);
  EXPECT_EQ(access_oracle(topo, o.nodes_witness), Verdict::Reconstructs);
}

TEST(Thresholds, DegreeZeroNetworksNeedOneNodeEach) {
  const auto topo = Topology::uniform(Field::mersenne127(), 4, 2, 0, 2);
  const auto o = compute_thresholds_oracle(topo);
  EXPECT_EQ(o.values.t_nodes, 3u);  // mother + 2 daughters, one node each
  EXPECT_EQ(o.values.t_networks, 3u);
}

TEST(Thresholds, OracleCapacityBound) {
  const auto topo = Topology::uniform(Field::mersenne127(), 3, 7, 1, 1);
  EXPECT_THROW(compute_thresholds_oracle(topo), CapacityError);
}

TEST(Thresholds, AvailabilityMatchesOracleWitness) {
  const Field f = Field::mersenne127();
  SeededRandom rng(18);
  for (int t = 0; t < 20; ++t) {
    const auto topo = random_topology(f, rng);
    const auto o = compute_thresholds_oracle(topo);
    const auto chunks = ints(f, {7});
    const auto shares = deal(chunks, topo, rng);
    auto surviving = [&](const std::vector<NodeRef>& dead) {
      ShareMap alive;
      for (std::size_t j = 0; j < topo.network_count(); ++j)
        for (const auto& s : shares.at(topo.network(j).id))
          if (std::find(dead.begin(), dead.end(), NodeRef{j, s.node_index}) == dead.end())
            alive[s.network_id].push_back(s);
      return std::holds_alternative<std::vector<FieldElement>>(reconstruct(alive, topo));
    };
    EXPECT_FALSE(surviving(o.fail_witness));
    EXPECT_EQ(o.fail_witness.size(), o.values.t_fail);
    // Every disabled set one smaller than t_fail leaves access.
    std::vector<NodeRef> nodes;
    for (std::size_t j = 0; j < topo.network_count(); ++j)
      for (auto n : whole_network(topo, j)) nodes.push_back(n);
    for (std::uint32_t mask = 0; mask < (1u << nodes.size()); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) + 1 != o.values.t_fail) continue;
      std::vector<NodeRef> dead;
      for (std::size_t i = 0; i < nodes.size(); ++i)
        if (mask & (1u << i)) dead.push_back(nodes[i]);
      ASSERT_TRUE(surviving(dead));
    }
  }
}

}  // namespace
}  // namespace multiss
