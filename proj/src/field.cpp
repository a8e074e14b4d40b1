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

#include "multiss/field.hpp"

#include <boost/integer/mod_inverse.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <random>
#include <utility>

#include "multiss/errors.hpp"

namespace multiss {

namespace {

unsigned bit_length(const BigInt& v) {
  return v.is_zero() ? 0u : static_cast<unsigned>(boost::multiprecision::msb(v)) + 1u;
}

// Row echelon form in place. Returns the pivot column of each nonzero row.
std::vector<std::size_t> echelon(std::vector<std::vector<BigInt>>& rows,
                                 std::size_t cols, const BigInt& q) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const BigInt inv = boost::integer::mod_inverse(rows[r][c], q);
    for (std::size_t j = c; j < cols; ++j) rows[r][j] = (rows[r][j] * inv) % q;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const BigInt f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (rows[r][j].is_zero()) continue;
        BigInt v = (rows[i][j] - f * rows[r][j]) % q;
        if (v < 0) v += q;
        rows[i][j] = std::move(v);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t inv64(std::uint64_t a, std::uint64_t q) {
  std::uint64_t result = 1;
  std::uint64_t e = q - 2;
  while (e) {
    if (e & 1) result = mulmod64(result, a, q);
    a = mulmod64(a, a, q);
    e >>= 1;
  }
  return result;
}

// Native-word elimination for moduli below 2^32; same contract as echelon().
std::vector<std::size_t> echelon_small(std::vector<std::vector<std::uint64_t>>& rows,
                                       std::size_t cols, std::uint64_t q) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const std::uint64_t inv = inv64(rows[r][c], q);
    for (std::size_t j = c; j < cols; ++j) rows[r][j] = mulmod64(rows[r][j], inv, q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = (rows[i][j] + q - mulmod64(f, rows[r][j], q)) % q;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

bool small_modulus(const Field& f) { return f.modulus() < (BigInt(1) << 32); }

// Pivot columns of m after moving column `last` (if any) to the end.
std::vector<std::size_t> pivots_of(const Matrix& m, std::optional<std::size_t> last) {
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (c != last) order.push_back(c);
  if (last) order.push_back(*last);
  if (small_modulus(m.field())) {
    const auto q = static_cast<std::uint64_t>(m.field().modulus());
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        rows[r][c] = static_cast<std::uint64_t>(m.at(r, order[c]).value());
    return echelon_small(rows, m.cols(), q);
  }
  std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, order[c]).value();
  return echelon(rows, m.cols(), m.field().modulus());
}

std::vector<std::vector<BigInt>> raw_rows(const Matrix& m) {
  std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).value();
  return out;
}

void require_field(const Matrix& m, std::span<const FieldElement> v) {
  for (const auto& e : v)
    if (!(e.field() == m.field())) throw UsageError("modulus mismatch between matrix and vector");
}

struct Reduced {
  std::vector<std::vector<BigInt>> rows;  // augmented, reduced row echelon
  std::vector<std::size_t> pivots;
  bool consistent;
};

Reduced reduce_augmented(const Matrix& m, std::span<const FieldElement> rhs) {
  if (rhs.size() != m.rows()) throw UsageError("rhs length does not match matrix rows");
  require_field(m, rhs);
  auto rows = raw_rows(m);
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(rhs[r].value());
  auto pivots = echelon(rows, m.cols() + 1, m.field().modulus());
  bool consistent = pivots.empty() || pivots.back() != m.cols();
  if (!consistent) pivots.pop_back();
  return {std::move(rows), std::move(pivots), consistent};
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  std::mt19937_64 gen(0x6d756c74697373ULL);
  return boost::multiprecision::miller_rabin_test(n, 64, gen);
}

std::string to_hex(const BigInt& v) {
  if (v.is_zero()) return "0";
  std::string s = v.str(0, std::ios_base::hex);
  for (auto& ch : s)
    if (ch >= 'A' && ch <= 'F') ch = static_cast<char>(ch - 'A' + 'a');
  return s;
}

BigInt parse_hex(std::string_view hex) {
  if (hex.empty()) throw CorruptionError("empty hex string");
  BigInt out = 0;
  for (char ch : hex) {
    int d;
    if (ch >= '0' && ch <= '9') d = ch - '0';
    else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
    else throw CorruptionError("invalid hex digit in '" + std::string(hex) + "'");
    out = (out << 4) | d;
  }
  return out;
}

// ---- Field -----------------------------------------------------------------

Field::Field(const BigInt& q) {
  if (!is_probable_prime(q)) throw UsageError("modulus " + to_hex(q) + " is not prime");
  params_ = std::make_shared<const Params>(Params{q, bit_length(q)});
}

Field Field::mersenne127() {
  static const auto params =
      std::make_shared<const Params>(Params{(BigInt(1) << 127) - 1, 127u});
  return Field(params);
}

FieldElement Field::element(const BigInt& v) const {
  BigInt r = v % params_->q;
  if (r < 0) r += params_->q;
  return FieldElement(std::move(r), *this);
}

FieldElement Field::zero() const { return FieldElement(0, *this); }
FieldElement Field::one() const { return FieldElement(1, *this); }

FieldElement Field::random(RandomSource& rng) const {
  const unsigned nbits = params_->bits;
  const unsigned words = (nbits + 63) / 64;
  for (;;) {
    BigInt candidate = 0;
    for (unsigned w = 0; w < words; ++w) candidate = (candidate << 64) | rng.next_u64();
    const unsigned excess = words * 64 - nbits;
    candidate >>= excess;
    if (candidate < params_->q) return FieldElement(std::move(candidate), *this);
  }
}

FieldElement Field::random_nonzero(RandomSource& rng) const {
  for (;;) {
    auto e = random(rng);
    if (!e.is_zero()) return e;
  }
}

FieldElement Field::from_hex(std::string_view hex) const {
  BigInt v = parse_hex(hex);
  if (v >= params_->q) throw CorruptionError("field element " + std::string(hex) + " >= modulus");
  return FieldElement(std::move(v), *this);
}

// ---- FieldElement ----------------------------------------------------------

FieldElement::FieldElement(BigInt value, Field field)
    : value_(std::move(value)), field_(std::move(field)) {
  if (value_ < 0 || value_ >= field_.modulus())
    throw UsageError("field element out of canonical range");
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (!(field_ == o.field_)) throw UsageError("modulus mismatch between field elements");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(o);
  BigInt r = value_ + o.value_;
  if (r >= field_.modulus()) r -= field_.modulus();
  return FieldElement(std::move(r), field_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(o);
  BigInt r = value_ - o.value_;
  if (r < 0) r += field_.modulus();
  return FieldElement(std::move(r), field_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement((value_ * o.value_) % field_.modulus(), field_);
}

FieldElement FieldElement::operator-() const {
  if (value_.is_zero()) return *this;
  return FieldElement(field_.modulus() - value_, field_);
}

FieldElement FieldElement::inv() const {
  if (value_.is_zero()) throw DivisionByZero();
  return FieldElement(boost::integer::mod_inverse(value_, field_.modulus()), field_);
}

FieldElement FieldElement::pow(const BigInt& e) const {
  return FieldElement(boost::multiprecision::powm(value_, e, field_.modulus()), field_);
}

std::string FieldElement::to_hex() const { return multiss::to_hex(value_); }

// ---- Matrix ----------------------------------------------------------------

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(rows * cols, field_.zero()) {}

Matrix Matrix::from_rows(Field field, std::size_t cols,
                         const std::vector<std::vector<FieldElement>>& rows) {
  Matrix m(std::move(field), 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

const FieldElement& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw UsageError("matrix index out of range");
  return entries_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
  if (r >= rows_ || c >= cols_) throw UsageError("matrix index out of range");
  if (!(v.field() == field_)) throw UsageError("modulus mismatch in matrix entry");
  entries_[r * cols_ + c] = v;
}

std::vector<FieldElement> Matrix::row(std::size_t r) const {
  if (r >= rows_) throw UsageError("matrix row out of range");
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::append_row(std::span<const FieldElement> row) {
  if (row.size() != cols_) throw UsageError("row length does not match matrix columns");
  for (const auto& e : row)
    if (!(e.field() == field_)) throw UsageError("modulus mismatch in matrix row");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
  return t;
}

std::vector<FieldElement> Matrix::multiply(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw UsageError("vector length does not match matrix columns");
  std::vector<FieldElement> out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

// ---- linear algebra --------------------------------------------------------

std::size_t mat_rank(const Matrix& m) { return pivots_of(m, std::nullopt).size(); }

bool unit_in_row_span(const Matrix& m, std::size_t col) {
  if (col >= m.cols()) throw UsageError("column index out of range");
  if (m.rows() == 0) return false;
  // The reordered column is a pivot iff it is independent of the others,
  // i.e. iff e_col is in the row span.
  const auto piv = pivots_of(m, col);
  return !piv.empty() && piv.back() == m.cols() - 1;
}

SolveResult mat_solve(const Matrix& m, std::span<const FieldElement> rhs) {
  auto red = reduce_augmented(m, rhs);
  if (!red.consistent) return NoSolution{};
  if (red.pivots.size() < m.cols()) return Underdetermined{red.pivots.size()};
  std::vector<FieldElement> x;
  x.reserve(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    x.emplace_back(red.rows[i][m.cols()], m.field());
  return x;
}

std::optional<std::vector<FieldElement>> solve_any(const Matrix& m,
                                                   std::span<const FieldElement> rhs) {
  auto red = reduce_augmented(m, rhs);
  if (!red.consistent) return std::nullopt;
  std::vector<FieldElement> x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < red.pivots.size(); ++i)
    x[red.pivots[i]] = FieldElement(red.rows[i][m.cols()], m.field());
  return x;
}

bool in_row_span(const Matrix& m, std::span<const FieldElement> v) {
  if (v.size() != m.cols()) throw UsageError("vector length does not match matrix columns");
  require_field(m, v);
  bool all_zero = true;
  for (const auto& e : v) all_zero = all_zero && e.is_zero();
  if (all_zero) return true;
  if (m.rows() == 0) return false;
  Matrix ext = m;
  ext.append_row(v);
  return mat_rank(ext) == mat_rank(m);
}

std::optional<std::vector<FieldElement>> row_combination(
    const Matrix& m, std::span<const FieldElement> v) {
  if (v.size() != m.cols()) throw UsageError("vector length does not match matrix columns");
  if (m.rows() == 0) {
    for (const auto& e : v)
      if (!e.is_zero()) return std::nullopt;
    return std::vector<FieldElement>{};
  }
  return solve_any(m.transpose(), v);
}

}  // namespace multiss
