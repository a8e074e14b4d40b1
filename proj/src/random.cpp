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

#include "multiss/random.hpp"

#include <openssl/rand.h>

#include <array>
#include <sstream>
#include <stdexcept>

#include "multiss/errors.hpp"

namespace multiss {

std::uint64_t SystemRandom::next_u64() {
  std::array<unsigned char, 8> buf{};
  if (RAND_bytes(buf.data(), static_cast<int>(buf.size())) != 1) {
    throw std::runtime_error("RAND_bytes failed: no system entropy available");
  }
  std::uint64_t out = 0;
  for (unsigned char b : buf) out = (out << 8) | b;
  return out;
}

std::string SeededRandom::state() const {
  std::ostringstream os;
  os << engine_;
  return os.str();
}

void SeededRandom::restore(const std::string& state) {
  std::istringstream is(state);
  std::mt19937_64 e;
  is >> e;
  if (is.fail()) throw LoadError("bad generator state");
  engine_ = e;
}

}  // namespace multiss
