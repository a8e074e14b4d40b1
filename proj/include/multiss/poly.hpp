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
#include "multiss/random.hpp"

namespace multiss {

// Polynomial over F_q; coeffs()[i] is the coefficient of X^i. Always
// normalized: the highest coefficient is nonzero unless the polynomial is the
// zero polynomial, stored as a single zero.
class Polynomial {
 public:
  explicit Polynomial(std::vector<FieldElement> coeffs);
  // Convenience for tests and examples: coefficients given as integers.
  static Polynomial from_integers(const Field& field, const std::vector<BigInt>& coeffs);

  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  const Field& field() const { return coeffs_.front().field(); }
  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_.front().is_zero(); }

  // Horner evaluation.
  FieldElement operator()(const FieldElement& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial scaled(const FieldElement& s) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<FieldElement> coeffs_;
};

FieldElement evaluate(const Polynomial& p, const FieldElement& x);

// Formal derivative: coefficient i*c_i moves to index i-1.
Polynomial derivative(const Polynomial& p);

// Exact-degree random polynomial: constant term pinned, middle coefficients
// uniform, leading coefficient uniform over nonzero values.
Polynomial random_polynomial(std::size_t degree, const FieldElement& constant,
                             RandomSource& rng);

// Every non-constant coefficient uniform over F_q (degree <= `degree`). This
// is the distribution dealers must use for perfect secrecy: with a forced
// nonzero leading coefficient, a single share of a degree-1 polynomial
// already rules out one secret value.
Polynomial random_polynomial_uniform(std::size_t degree, const FieldElement& constant,
                                     RandomSource& rng);

struct Point {
  FieldElement x;
  FieldElement y;
};

// Value at 0 of the unique polynomial of degree < points.size() through the
// points. x values must be distinct and nonzero.
FieldElement lagrange_at_zero(std::span<const Point> points);

// Weights w with P(0) = sum_i w_i * P(x_i); same preconditions.
std::vector<FieldElement> lagrange_weights_at_zero(std::span<const FieldElement> xs);

enum class Order : unsigned { Value = 0, FirstDerivative = 1 };

struct BirkhoffConstraint {
  FieldElement point;
  Order order;
  FieldElement value;
};

struct BirkhoffNode {
  FieldElement point;
  Order order;
};

// Row per constraint: powers of the point (Value) or derivatives of the
// powers (FirstDerivative); degree+1 columns.
Matrix birkhoff_matrix(std::span<const BirkhoffNode> nodes, std::size_t degree);

// Unique polynomial of the given degree bound satisfying the constraints, or
// nullopt when the Birkhoff system is singular. Requires exactly degree+1
// constraints with no repeated (point, order) pair.
std::optional<Polynomial> birkhoff_solve(std::span<const BirkhoffConstraint> constraints,
                                         std::size_t degree);

// Weights w with P(0) = sum_i w_i * c_i for the constraint values c_i, or
// nullopt when the system is singular.
std::optional<std::vector<FieldElement>> birkhoff_weights_at_zero(
    std::span<const BirkhoffNode> nodes, std::size_t degree);

}  // namespace multiss
