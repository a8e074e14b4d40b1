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

#include "multiss/sss.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "multiss/errors.hpp"

namespace multiss {

namespace {

void check_counts(const Field& f, std::size_t k, std::size_t n) {
  if (k < 1) throw UsageError("threshold k must be at least 1");
  if (k > n)
    throw UsageError("threshold k = " + std::to_string(k) + " exceeds share count n = " +
                     std::to_string(n));
  if (BigInt(n) >= f.modulus()) throw UsageError("share count n must be below the modulus");
}

// Calls fn on each r-subset of [0, n) in lexicographic order until it
// returns true.
bool for_each_combination(std::size_t n, std::size_t r,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (r > n) return false;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    if (fn(idx)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<FlatShare> shamir_split(const FieldElement& secret, std::size_t k, std::size_t n,
                                    RandomSource& rng) {
  check_counts(secret.field(), k, n);
  return shamir_split_with(random_polynomial_uniform(k - 1, secret, rng), k, n);
}

std::vector<FlatShare> shamir_split_with(const Polynomial& p, std::size_t k, std::size_t n) {
  check_counts(p.field(), k, n);
  if (p.degree() + 1 > k) throw UsageError("dealer polynomial degree exceeds k - 1");
  std::vector<FlatShare> out;
  out.reserve(n);
  for (std::size_t x = 1; x <= n; ++x) out.push_back({x, p(p.field().element(x)), k, 0});
  return out;
}

FieldElement shamir_reconstruct(std::span<const FlatShare> shares, VerifyMode mode) {
  if (shares.empty()) throw InsufficientShares("no shares supplied");
  const std::size_t k = shares.front().threshold_k;
  const std::size_t epoch = shares.front().epoch;
  const Field f = shares.front().y.field();
  std::set<std::size_t> xs;
  for (const auto& s : shares) {
    if (s.epoch != epoch)
      throw EpochMismatch("shares from epochs " + std::to_string(epoch) + " and " +
                          std::to_string(s.epoch) + " cannot be combined");
    if (s.threshold_k != k) throw UsageError("shares disagree on threshold k");
    if (s.x == 0) throw UsageError("share x = 0 is invalid");
    if (!xs.insert(s.x).second) throw UsageError("duplicate share x = " + std::to_string(s.x));
  }
  if (shares.size() < k)
    throw InsufficientShares("need " + std::to_string(k) + " shares, have " +
                             std::to_string(shares.size()));

  std::vector<FlatShare> sorted(shares.begin(), shares.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const FlatShare& a, const FlatShare& b) { return a.x < b.x; });
  std::vector<Point> pts;
  for (std::size_t i = 0; i < k; ++i) pts.push_back({f.element(sorted[i].x), sorted[i].y});
  const FieldElement secret = lagrange_at_zero(pts);

  if (mode == VerifyMode::CheckAll && sorted.size() > k) {
    // Lagrange form evaluated at each extra x.
    for (std::size_t e = k; e < sorted.size(); ++e) {
      const FieldElement xe = f.element(sorted[e].x);
      FieldElement acc = f.zero();
      for (std::size_t i = 0; i < k; ++i) {
        FieldElement li = f.one();
        for (std::size_t j = 0; j < k; ++j) {
          if (j == i) continue;
          li *= (xe - pts[j].x) * (pts[i].x - pts[j].x).inv();
        }
        acc += li * pts[i].y;
      }
      if (!(acc == sorted[e].y))
        throw CorruptionError("share x = " + std::to_string(sorted[e].x) +
                              " is not on the interpolated polynomial");
    }
  }
  return secret;
}

std::vector<HierShare> hierarchical_split(const FieldElement& secret, std::size_t k,
                                          std::size_t managers, std::size_t employees,
                                          RandomSource& rng) {
  if (k < 2) throw UsageError("hierarchical threshold k must be at least 2");
  return hierarchical_split_with(random_polynomial_uniform(k - 1, secret, rng), k, managers,
                                 employees);
}

std::vector<HierShare> hierarchical_split_with(const Polynomial& p, std::size_t k,
                                               std::size_t managers, std::size_t employees) {
  if (k < 2) throw UsageError("hierarchical threshold k must be at least 2");
  if (managers < 1) throw UsageError("at least one manager is required");
  if (p.degree() + 1 > k) throw UsageError("dealer polynomial degree exceeds k - 1");
  const Field& f = p.field();
  if (BigInt(std::max(managers, employees)) >= f.modulus())
    throw UsageError("participant count must be below the modulus");
  const Polynomial dp = derivative(p);
  std::vector<HierShare> out;
  out.reserve(managers + employees);
  for (std::size_t x = 1; x <= managers; ++x)
    out.push_back({Rank::Manager, x, p(f.element(x)), k});
  for (std::size_t x = 1; x <= employees; ++x)
    out.push_back({Rank::Employee, x, dp(f.element(x)), k});
  return out;
}

std::optional<FieldElement> hierarchical_reconstruct(std::span<const HierShare> shares,
                                                     std::size_t k) {
  if (k < 1) throw UsageError("threshold k must be at least 1");
  std::vector<HierShare> managers;
  std::vector<HierShare> employees;
  std::set<std::pair<int, std::size_t>> seen;
  for (const auto& s : shares) {
    if (!seen.emplace(static_cast<int>(s.rank), s.x).second)
      throw UsageError("duplicate share (rank, x = " + std::to_string(s.x) + ")");
    (s.rank == Rank::Manager ? managers : employees).push_back(s);
  }
  if (managers.empty() || shares.size() < k) return std::nullopt;
  auto by_x = [](const HierShare& a, const HierShare& b) { return a.x < b.x; };
  std::sort(managers.begin(), managers.end(), by_x);
  std::sort(employees.begin(), employees.end(), by_x);

  const Field f = managers.front().y.field();
  std::optional<FieldElement> result;
  // Fewest managers first: one manager plus k-1 employees when available.
  for (std::size_t m = 1; m <= std::min(k, managers.size()) && !result; ++m) {
    const std::size_t e = k - m;
    if (e > employees.size()) continue;
    for_each_combination(managers.size(), m, [&](const std::vector<std::size_t>& mi) {
      return for_each_combination(employees.size(), e, [&](const std::vector<std::size_t>& ei) {
        std::vector<BirkhoffConstraint> cs;
        for (auto i : mi)
          cs.push_back({f.element(managers[i].x), Order::Value, managers[i].y});
        for (auto i : ei)
          cs.push_back({f.element(employees[i].x), Order::FirstDerivative, employees[i].y});
        if (auto p = birkhoff_solve(cs, k - 1)) {
          result = p->coeffs().front();
          return true;
        }
        return false;
      });
    });
  }
  return result;
}

std::vector<RefreshDelta> refresh_deltas(const Field& field, std::size_t k, std::size_t n,
                                         std::size_t from_epoch, RandomSource& rng) {
  check_counts(field, k, n);
  return refresh_deltas_with(random_polynomial_uniform(k - 1, field.zero(), rng), n,
                             from_epoch);
}

std::vector<RefreshDelta> refresh_deltas_with(const Polynomial& r, std::size_t n,
                                              std::size_t from_epoch) {
  if (!r.coeffs().front().is_zero())
    throw UsageError("refresh polynomial must vanish at zero");
  std::vector<RefreshDelta> out;
  out.reserve(n);
  for (std::size_t x = 1; x <= n; ++x) out.push_back({x, r(r.field().element(x)), from_epoch});
  return out;
}

FlatShare apply_refresh(const FlatShare& share, const RefreshDelta& delta) {
  if (share.x != delta.x)
    throw UsageError("refresh delta for x = " + std::to_string(delta.x) +
                     " applied to share x = " + std::to_string(share.x));
  if (share.epoch != delta.from_epoch)
    throw UsageError("refresh delta from epoch " + std::to_string(delta.from_epoch) +
                     " applied to share at epoch " + std::to_string(share.epoch));
  return {share.x, share.y + delta.delta, share.threshold_k, share.epoch + 1};
}

}  // namespace multiss
