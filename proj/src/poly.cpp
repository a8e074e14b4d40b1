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

#include "multiss/poly.hpp"

#include <set>
#include <string>
#include <utility>

#include "multiss/errors.hpp"

namespace multiss {

namespace {

void check_nodes(std::span<const BirkhoffNode> nodes, std::size_t degree) {
  if (nodes.size() != degree + 1)
    throw UsageError("Birkhoff system needs degree+1 = " + std::to_string(degree + 1) +
                     " constraints, got " + std::to_string(nodes.size()));
  std::set<std::pair<BigInt, unsigned>> seen;
  for (const auto& n : nodes) {
    if (!seen.emplace(n.point.value(), static_cast<unsigned>(n.order)).second)
      throw UsageError("duplicate Birkhoff constraint (point " + n.point.to_hex() + ", order " +
                       std::to_string(static_cast<unsigned>(n.order)) + ")");
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("polynomial needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (!(c.field() == coeffs_.front().field())) throw UsageError("mixed moduli in polynomial");
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_integers(const Field& field, const std::vector<BigInt>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.push_back(field.element(v));
  if (c.empty()) c.push_back(field.zero());
  return Polynomial(std::move(c));
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  FieldElement acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  const auto& longer = coeffs_.size() >= o.coeffs_.size() ? coeffs_ : o.coeffs_;
  const auto& shorter = coeffs_.size() >= o.coeffs_.size() ? o.coeffs_ : coeffs_;
  std::vector<FieldElement> out = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out[i] += shorter[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const FieldElement& s) const {
  std::vector<FieldElement> out = coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

FieldElement evaluate(const Polynomial& p, const FieldElement& x) {
  if (!(p.field() == x.field())) throw UsageError("modulus mismatch in evaluation");
  return p(x);
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() == 1) return Polynomial({p.field().zero()});
  std::vector<FieldElement> out;
  out.reserve(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(p.field().element(i) * c[i]);
  return Polynomial(std::move(out));
}

Polynomial random_polynomial(std::size_t degree, const FieldElement& constant,
                             RandomSource& rng) {
  const Field& f = constant.field();
  std::vector<FieldElement> c{constant};
  for (std::size_t i = 1; i < degree; ++i) c.push_back(f.random(rng));
  if (degree > 0) c.push_back(f.random_nonzero(rng));
  return Polynomial(std::move(c));
}

Polynomial random_polynomial_uniform(std::size_t degree, const FieldElement& constant,
                                     RandomSource& rng) {
  const Field& f = constant.field();
  std::vector<FieldElement> c{constant};
  for (std::size_t i = 1; i <= degree; ++i) c.push_back(f.random(rng));
  return Polynomial(std::move(c));
}

std::vector<FieldElement> lagrange_weights_at_zero(std::span<const FieldElement> xs) {
  if (xs.empty()) throw UsageError("interpolation needs at least one point");
  const Field& f = xs.front().field();
  std::set<BigInt> seen;
  for (const auto& x : xs) {
    if (!(x.field() == f)) throw UsageError("modulus mismatch in interpolation points");
    if (x.is_zero()) throw UsageError("interpolation point x = 0 is reserved for the secret");
    if (!seen.insert(x.value()).second)
      throw UsageError("duplicate interpolation point x = " + x.to_hex());
  }
  // w_i = prod_{j != i} x_j / (x_j - x_i)
  std::vector<FieldElement> w;
  w.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    FieldElement num = f.one();
    FieldElement den = f.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      num *= xs[j];
      den *= xs[j] - xs[i];
    }
    w.push_back(num * den.inv());
  }
  return w;
}

FieldElement lagrange_at_zero(std::span<const Point> points) {
  std::vector<FieldElement> xs;
  xs.reserve(points.size());
  for (const auto& p : points) xs.push_back(p.x);
  const auto w = lagrange_weights_at_zero(xs);
  FieldElement acc = points.front().x.field().zero();
  for (std::size_t i = 0; i < points.size(); ++i) acc += w[i] * points[i].y;
  return acc;
}

Matrix birkhoff_matrix(std::span<const BirkhoffNode> nodes, std::size_t degree) {
  if (nodes.empty()) throw UsageError("Birkhoff system needs at least one constraint");
  const Field& f = nodes.front().point.field();
  Matrix m(f, 0, degree + 1);
  for (const auto& n : nodes) {
    if (!(n.point.field() == f)) throw UsageError("modulus mismatch in Birkhoff points");
    std::vector<FieldElement> row(degree + 1, f.zero());
    if (n.order == Order::Value) {
      FieldElement pw = f.one();
      for (std::size_t j = 0; j <= degree; ++j) {
        row[j] = pw;
        pw *= n.point;
      }
    } else {
      // d/dX X^j = j X^(j-1)
      FieldElement pw = f.one();
      for (std::size_t j = 1; j <= degree; ++j) {
        row[j] = f.element(j) * pw;
        pw *= n.point;
      }
    }
    m.append_row(row);
  }
  return m;
}

std::optional<Polynomial> birkhoff_solve(std::span<const BirkhoffConstraint> constraints,
                                         std::size_t degree) {
  std::vector<BirkhoffNode> nodes;
  std::vector<FieldElement> rhs;
  for (const auto& c : constraints) {
    nodes.push_back({c.point, c.order});
    rhs.push_back(c.value);
  }
  check_nodes(nodes, degree);
  auto sol = mat_solve(birkhoff_matrix(nodes, degree), rhs);
  if (auto* x = std::get_if<std::vector<FieldElement>>(&sol)) return Polynomial(std::move(*x));
  return std::nullopt;
}

std::optional<std::vector<FieldElement>> birkhoff_weights_at_zero(
    std::span<const BirkhoffNode> nodes, std::size_t degree) {
  check_nodes(nodes, degree);
  const Matrix m = birkhoff_matrix(nodes, degree);
  if (mat_rank(m) != degree + 1) return std::nullopt;
  // a = M^{-1} c, so a_0 = e_0^T M^{-1} c = w^T c with M^T w = e_0.
  std::vector<FieldElement> e0(degree + 1, m.field().zero());
  e0[0] = m.field().one();
  auto sol = mat_solve(m.transpose(), e0);
  return std::get<std::vector<FieldElement>>(std::move(sol));
}

}  // namespace multiss
