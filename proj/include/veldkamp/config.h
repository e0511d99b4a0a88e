// Copyright 2026 The Veldkamp Authors
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

namespace veldkamp {

/// Default upper bound on the qubit count. 2n bits must fit one machine word.
inline constexpr int kDefaultMaxQubits = 12;

/// Hard ceiling for the VELDKAMP_NMAX override (62 bits of a uint64_t).
inline constexpr int kAbsoluteMaxQubits = 31;

/// Lines are kept in memory up to this n and iterated lazily above it.
inline constexpr int kMaterializedLineQubits = 4;

/// Full hyperplane catalogs hold 2*4^n bitsets of 4^n bits each.
inline constexpr int kMaxCatalogQubits = 7;

/// Collinearity graphs are built as dense adjacency bitsets.
inline constexpr int kMaxGraphQubits = 6;

/// Pair scans over all hyperplanes (Veldkamp census) are offered up to here.
inline constexpr int kDefaultCensusMaxQubits = 5;

/// Effective qubit ceiling: kDefaultMaxQubits unless VELDKAMP_NMAX is set to a
/// value in [1, kAbsoluteMaxQubits]. Read once per process.
int max_qubits();

/// Census ceiling, never above max_qubits().
int census_max_qubits();

}  // namespace veldkamp
