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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "multiss/errors.hpp"
#include "multiss/formats.hpp"
#include "multiss/oracle.hpp"
#include "multiss/protocol.hpp"
#include "multiss/simnet.hpp"
#include "multiss/sss.hpp"
#include "multiss/thresholds.hpp"

namespace py = pybind11;

// Python int <-> BigInt through a hex string.
namespace pybind11::detail {
template <>
struct type_caster<multiss::BigInt> {
  PYBIND11_TYPE_CASTER(multiss::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    auto obj = reinterpret_borrow<object>(src);
    const bool neg = obj < int_(0);
    if (neg) obj = -obj;
    const auto hex = py::str(py::module_::import("builtins").attr("format")(obj, "x")).cast<std::string>();
    value = multiss::parse_hex(hex);
    if (neg) value = -value;
    return true;
  }

  static handle cast(const multiss::BigInt& v, return_value_policy, handle) {
    const bool neg = v < 0;
    auto h = py::module_::import("builtins").attr("int")(multiss::to_hex(neg ? multiss::BigInt(-v) : v), 16);
    if (neg) h = -h;
    return h.release();
  }
};
}  // namespace pybind11::detail

namespace multiss {
namespace {

std::unique_ptr<RandomSource> rng_for(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

std::vector<BigInt> ints_of(const std::vector<FieldElement>& v) {
  std::vector<BigInt> out;
  for (const auto& e : v) out.push_back(e.value());
  return out;
}

std::vector<FieldElement> elems_of(const Field& f, const std::vector<BigInt>& v) {
  std::vector<FieldElement> out;
  for (const auto& x : v) out.push_back(f.element(x));
  return out;
}

struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PyShare {
  std::string network_id;
  std::size_t node_index;
  std::size_t epoch;
  std::vector<BigInt> values;
};

using PyShareMap = std::map<std::string, std::vector<PyShare>>;

PyShareMap to_py(const ShareMap& m) {
  PyShareMap out;
  for (const auto& [id, list] : m)
    for (const auto& s : list) out[id].push_back({s.network_id, s.node_index, s.epoch, ints_of(s.values)});
  return out;
}

ShareMap from_py(const PyShareMap& m, const Field& f) {
  ShareMap out;
  for (const auto& [id, list] : m)
    for (const auto& s : list) out[id].push_back({s.network_id, s.node_index, s.epoch, elems_of(f, s.values)});
  return out;
}

py::dict thresholds_dict(const Thresholds& t) {
  py::dict d;
  d["t_networks"] = t.t_networks;
  d["t_nodes"] = t.t_nodes;
  d["t_fail"] = t.t_fail;
  d["t_f0"] = t.t_f0;
  d["t_f1"] = t.t_f1;
  return d;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace
}  // namespace multiss

PYBIND11_MODULE(_multiss, m) {
  using namespace multiss;
  m.doc() = "Two-level secret sharing over a mother network and daughter networks";

  static py::exception<InsufficientShares> insufficient(m, "InsufficientShares");
  static py::exception<EpochMismatch> epoch_mismatch(m, "EpochMismatch");
  static py::exception<CorruptionError> corruption(m, "CorruptionError");
  static py::exception<CapacityError> capacity(m, "CapacityError");
  static py::exception<LoadError> load(m, "LoadError");
  py::register_exception<InfeasibleError>(m, "Infeasible");
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InsufficientShares& e) {
      insufficient(e.what());
    } catch (const EpochMismatch& e) {
      epoch_mismatch(e.what());
    } catch (const CorruptionError& e) {
      corruption(e.what());
    } catch (const CapacityError& e) {
      capacity(e.what());
    } catch (const LoadError& e) {
      load(e.what());
    }
  });

  const BigInt m127 = Field::mersenne127().modulus();
  m.attr("MERSENNE_127") = py::cast(m127);

  m.def("is_prime", [](const BigInt& q) { return is_probable_prime(q); }, py::arg("q"));

  m.def(
      "shamir_split",
      [](const BigInt& secret, std::size_t k, std::size_t n, const BigInt& modulus, std::optional<std::uint64_t> seed) {
        const Field f(modulus);
        auto rng = rng_for(seed);
        std::vector<std::pair<std::size_t, BigInt>> out;
        for (const auto& s : shamir_split(f.element(secret), k, n, *rng)) out.emplace_back(s.x, s.y.value());
        return out;
      },
      py::arg("secret"), py::arg("k"), py::arg("n"), py::arg("modulus") = m127, py::arg("seed") = py::none(),
      "Split `secret` into n points (x, y); any k recover it.");

  m.def(
      "shamir_reconstruct",
      [](const std::vector<std::pair<std::size_t, BigInt>>& shares, std::size_t k, const BigInt& modulus) {
        const Field f(modulus);
        std::vector<FlatShare> flat;
        for (const auto& [x, y] : shares) flat.push_back({x, f.element(y), k, 0});
        return shamir_reconstruct(flat).value();
      },
      py::arg("shares"), py::arg("k"), py::arg("modulus") = m127);

  m.def(
      "lagrange_at_zero",
      [](const std::vector<std::pair<BigInt, BigInt>>& pts, const BigInt& modulus) {
        const Field f(modulus);
        std::vector<Point> p;
        for (const auto& [x, y] : pts) p.push_back({f.element(x), f.element(y)});
        return lagrange_at_zero(p).value();
      },
      py::arg("points"), py::arg("modulus") = m127);

  m.def(
      "birkhoff_solve",
      [](const std::vector<std::tuple<BigInt, int, BigInt>>& cons, std::size_t degree, const BigInt& modulus)
          -> std::optional<std::vector<BigInt>> {
        const Field f(modulus);
        std::vector<BirkhoffConstraint> c;
        for (const auto& [x, order, v] : cons) {
          if (order != 0 && order != 1) throw UsageError("order must be 0 or 1");
          c.push_back({f.element(x), order == 0 ? Order::Value : Order::FirstDerivative, f.element(v)});
        }
        const auto p = birkhoff_solve(c, degree);
        if (!p) return std::nullopt;
        auto coeffs = ints_of(p->coeffs());
        coeffs.resize(degree + 1, BigInt(0));
        return coeffs;
      },
      py::arg("constraints"), py::arg("degree"), py::arg("modulus") = m127,
      "Constraints are (x, order, value) with order 0 for P(x) and 1 for P'(x). Returns coefficients, "
      "lowest first, or None when the system is singular.");

  py::class_<PyShare>(m, "NodeShare")
      .def(py::init<std::string, std::size_t, std::size_t, std::vector<BigInt>>(), py::arg("network_id"),
           py::arg("node_index"), py::arg("epoch"), py::arg("values"))
      .def_readwrite("network_id", &PyShare::network_id)
      .def_readwrite("node_index", &PyShare::node_index)
      .def_readwrite("epoch", &PyShare::epoch)
      .def_readwrite("values", &PyShare::values)
      .def("__repr__", [](const PyShare& s) {
        return "NodeShare(" + s.network_id + "/" + std::to_string(s.node_index) + ", epoch " +
               std::to_string(s.epoch) + ", " + std::to_string(s.values.size()) + " values)";
      });

  py::class_<Topology>(m, "Topology")
      .def_static("from_json", [](const std::string& text) { return parse_topology(text); }, py::arg("text"))
      .def_static(
          "uniform",
          [](std::size_t count, std::size_t nodes, std::size_t inner, std::size_t outer, const BigInt& modulus) {
            return Topology::uniform(Field(modulus), count, nodes, inner, outer);
          },
          py::arg("count"), py::arg("node_count"), py::arg("inner_degree"), py::arg("outer_degree"),
          py::arg("modulus") = m127)
      .def("to_json", [](const Topology& t) { return dump_topology(t); })
      .def("digest", [](const Topology& t) { return topology_digest(t); })
      .def_property_readonly("modulus", [](const Topology& t) { return t.field().modulus(); })
      .def_property_readonly("outer_degree", &Topology::outer_degree)
      .def_property_readonly("mother", [](const Topology& t) { return t.mother().id; })
      .def_property_readonly("network_ids",
                             [](const Topology& t) {
                               std::vector<std::string> ids;
                               for (const auto& n : t.networks()) ids.push_back(n.id);
                               return ids;
                             })
      .def_property_readonly("total_nodes", &Topology::total_nodes)
      .def("thresholds", [](const Topology& t) { return thresholds_dict(compute_thresholds_formula(t)); })
      .def("oracle_thresholds", [](const Topology& t) {
        const auto o = compute_thresholds_oracle(t);
        auto d = thresholds_dict(o.values);
        d["t_f1_daughters"] = o.t_f1_daughters;
        return d;
      });

  m.def(
      "deal",
      [](const Topology& t, const py::bytes& secret, std::optional<std::uint64_t> seed) {
        const std::string s = secret;
        const auto chunks = encode_secret(t.field(), std::vector<std::uint8_t>(s.begin(), s.end()));
        auto rng = rng_for(seed);
        return to_py(deal(chunks, t, *rng));
      },
      py::arg("topology"), py::arg("secret"), py::arg("seed") = py::none(),
      "Deal `secret` across every node; returns {network_id: [NodeShare, ...]}.");

  m.def(
      "reconstruct",
      [](const Topology& t, const PyShareMap& shares) {
        const auto r = reconstruct(from_py(shares, t.field()), t);
        if (const auto* inf = std::get_if<Infeasible>(&r)) throw InfeasibleError(inf->reason);
        const auto b = decode_secret(t.field(), std::get<std::vector<FieldElement>>(r));
        return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
      },
      py::arg("topology"), py::arg("shares"), "Raises Infeasible naming the unmet quorums.");

  m.def(
      "refresh",
      [](const Topology& t, const PyShareMap& shares, std::optional<std::uint64_t> seed) {
        const auto in = from_py(shares, t.field());
        std::optional<std::size_t> epoch, chunks;
        for (const auto& [id, list] : in)
          for (const auto& s : list) {
            if (epoch && *epoch != s.epoch) throw EpochMismatch("shares mix epochs");
            epoch = s.epoch;
            chunks = s.values.size();
          }
        if (!epoch) throw UsageError("no shares to refresh");
        auto rng = rng_for(seed);
        const auto deltas = refresh(t, *epoch, *chunks, *rng);
        ShareMap out;
        for (const auto& [id, list] : in)
          for (const auto& s : list) out[id].push_back(apply_refresh(s, deltas.at(id).at(s.node_index - 1)));
        return to_py(out);
      },
      py::arg("topology"), py::arg("shares"), py::arg("seed") = py::none());

  m.def(
      "access_oracle",
      [](const Topology& t, const std::vector<std::pair<std::string, std::size_t>>& nodes) {
        std::vector<NodeRef> refs;
        for (const auto& [id, x] : nodes) refs.push_back({t.require_index(id), x});
        return std::string(to_string(access_oracle(t, refs)));
      },
      py::arg("topology"), py::arg("nodes"), "'Reconstructs' or 'NoInformation' for the held (network, node) set.");

  m.def(
      "simulate",
      [](const std::string& scenario_json, std::uint64_t seed) {
        Json j;
        try {
          j = Json::parse(scenario_json);
        } catch (const Json::parse_error& e) {
          throw UsageError(e.what());
        }
        return json_to_py(run_scenario(parse_scenario(j), seed).json);
      },
      py::arg("scenario"), py::arg("seed"), "Run a scenario (JSON text); returns the report as a dict.");
}
