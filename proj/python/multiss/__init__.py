# Copyright 2026 The MULTISS Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Two-level secret sharing across a mother network and daughter networks."""

from ._multiss import (
    MERSENNE_127,
    CapacityError,
    CorruptionError,
    DivisionByZero,
    EpochMismatch,
    Infeasible,
    InsufficientShares,
    LoadError,
    NodeShare,
    Topology,
    UsageError,
    access_oracle,
    birkhoff_solve,
    deal,
    is_prime,
    lagrange_at_zero,
    reconstruct,
    refresh,
    shamir_reconstruct,
    shamir_split,
    simulate,
)

__all__ = [
    "MERSENNE_127",
    "CapacityError",
    "CorruptionError",
    "DivisionByZero",
    "EpochMismatch",
    "Infeasible",
    "InsufficientShares",
    "LoadError",
    "NodeShare",
    "Topology",
    "UsageError",
    "access_oracle",
    "birkhoff_solve",
    "deal",
    "is_prime",
    "lagrange_at_zero",
    "reconstruct",
    "refresh",
    "shamir_reconstruct",
    "shamir_split",
    "simulate",
]
