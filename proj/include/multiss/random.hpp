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

#include <cstdint>
#include <random>
#include <string>

namespace multiss {

// Source of uniformly distributed 64-bit words. Implementations are not
// thread-safe; give each thread (or each simulation run) its own instance.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next_u64() = 0;
};

// Reproducible stream for tests and seeded CLI runs. std::mt19937_64 has a
// sequence fixed by the standard, so seeds replay identically everywhere.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next_u64() override { return engine_(); }

  // Textual engine state, for resuming a run from a saved file.
  std::string state() const;
  void restore(const std::string& state);

 private:
  std::mt19937_64 engine_;
};

// OS-backed cryptographic randomness (OpenSSL RAND_bytes). Default for dealing.
class SystemRandom final : public RandomSource {
 public:
  std::uint64_t next_u64() override;
};

}  // namespace multiss
