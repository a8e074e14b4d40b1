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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "multiss/random.hpp"

namespace multiss {

using BigInt = boost::multiprecision::cpp_int;

class FieldElement;

// The prime field F_q. Cheap to copy (shared immutable parameters); two Field
// values compare equal iff their moduli are equal.
class Field {
 public:
  // Throws UsageError unless q is prime (64 Miller-Rabin rounds).
  explicit Field(const BigInt& q);

  // q = 2^127 - 1, the default for dealing real data.
  static Field mersenne127();

  const BigInt& modulus() const { return params_->q; }
  // Bit length of q.
  unsigned bits() const { return params_->bits; }

  // Reduces any integer (negative included) to its canonical representative.
  FieldElement element(const BigInt& v) const;
  FieldElement zero() const;
  FieldElement one() const;

  // Uniform over [0, q) by rejection sampling on bits(q)-bit candidates.
  FieldElement random(RandomSource& rng) const;
  // Uniform over [1, q).
  FieldElement random_nonzero(RandomSource& rng) const;

  // Parses the canonical hex form; values >= q raise CorruptionError.
  FieldElement from_hex(std::string_view hex) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.params_ == b.params_ || a.params_->q == b.params_->q;
  }

 private:
  struct Params {
    BigInt q;
    unsigned bits;
  };
  explicit Field(std::shared_ptr<const Params> p) : params_(std::move(p)) {}
  std::shared_ptr<const Params> params_;

  friend class FieldElement;
};

// Canonical element of F_q: 0 <= value < q. Arithmetic between elements of
// different fields throws UsageError.
class FieldElement {
 public:
  FieldElement(BigInt value, Field field);

  const BigInt& value() const { return value_; }
  const Field& field() const { return field_; }
  bool is_zero() const { return value_.is_zero(); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  // Multiplicative inverse; throws DivisionByZero for 0.
  FieldElement inv() const;
  FieldElement pow(const BigInt& e) const;

  // Lowercase big-endian hex, no leading zeros ("0" for zero).
  std::string to_hex() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

 private:
  void require_same_field(const FieldElement& o) const;

  BigInt value_;
  Field field_;
};

std::string to_hex(const BigInt& v);
// Strict parse of lowercase/uppercase hex digits; throws CorruptionError.
BigInt parse_hex(std::string_view hex);

// Deterministic probabilistic primality test (64 Miller-Rabin rounds).
bool is_probable_prime(const BigInt& n);

// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  // Builds from explicit rows; every row must have `cols` entries.
  static Matrix from_rows(Field field, std::size_t cols,
                          const std::vector<std::vector<FieldElement>>& rows);
  static Matrix identity(Field field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const FieldElement& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElement& v);
  std::vector<FieldElement> row(std::size_t r) const;
  void append_row(std::span<const FieldElement> row);
  Matrix transpose() const;
  std::vector<FieldElement> multiply(std::span<const FieldElement> v) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

struct NoSolution {};
struct Underdetermined {
  std::size_t rank;
};
using SolveResult =
    std::variant<std::vector<FieldElement>, NoSolution, Underdetermined>;

std::size_t mat_rank(const Matrix& m);

// Unique solution of m x = rhs when rank = cols and the system is consistent.
SolveResult mat_solve(const Matrix& m, std::span<const FieldElement> rhs);

// Some solution of m x = rhs (free variables set to zero), if consistent.
std::optional<std::vector<FieldElement>> solve_any(
    const Matrix& m, std::span<const FieldElement> rhs);

// True iff v is a linear combination of the rows of m.
bool in_row_span(const Matrix& m, std::span<const FieldElement> v);

// True iff the unit vector e_col lies in the row span of m (one elimination
// pass with `col` ordered last).
bool unit_in_row_span(const Matrix& m, std::size_t col);

// Coefficients c with sum_i c_i * row_i = v, if v lies in the row span.
std::optional<std::vector<FieldElement>> row_combination(
    const Matrix& m, std::span<const FieldElement> v);

}  // namespace multiss
