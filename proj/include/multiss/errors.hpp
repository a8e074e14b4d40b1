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

#include <stdexcept>
#include <string>

namespace multiss {

// Caller violated a precondition (bad counts, mismatched moduli, duplicate
// points, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inverse of zero in F_q") {}
};

class InsufficientShares : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shares from different refresh epochs were combined.
class EpochMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Data that decodes to something outside its valid range (chunk >= q, shares
// off the interpolated polynomial, bad length header).
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace multiss
