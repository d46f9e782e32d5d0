// Copyright 2025 The qgridc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <set>

#include "qgridc/pauli_frame.hpp"

namespace qgridc {

/// Reordering job on the n x n grid: move the data qubit at (0, j) to
/// (pi(j), 0) for every j in T.
struct ReorderSpec {
    int n = 0;
    std::set<int> T;
    std::map<int, int> pi;  // injection T -> column
};

/// Throws std::invalid_argument when the spec violates its invariants
/// (pi not injective, or a pi(j)=0 row with untracked rows below it).
void validate_reorder_spec(const ReorderSpec& spec);

/// One interaction: a 1- or 2-qubit gate on data-qubit indices, in
/// application order (J is the index set; order matters for e.g. CNOT).
struct InteractionItem {
    std::vector<int32_t> qubits;
    GateSpec gate;
    std::optional<ClassicalCondition> condition;
    std::optional<MeasurementId> measurement_id;  // input id for Measure items
};

struct InteractionSpec {
    int n = 0;
    std::vector<InteractionItem> items;  // singletons must precede pairs
};

void validate_interaction_spec(const InteractionSpec& spec);

/// Appends H(a); CNOT(a->b): a fresh Phi_0 pair on adjacent (a, b).
void emit_bell_pair(CircuitBuilder& b, const GridPoint& pa, const GridPoint& pb);

/// Appends CNOT(a->b); H(a); measure both. Phase bit = a's outcome,
/// flip bit = b's.
BellOutcome emit_bell_measure(CircuitBuilder& b, const GridPoint& pa, const GridPoint& pb);

/// Conditional-X reset of measured qubits back to |0>.
void emit_reset(CircuitBuilder& b,
                const std::vector<std::pair<GridPoint, MeasurementId>>& measured);

/// Teleports the state at line[0] to line.back() along a straight line of
/// adjacent points, in a fixed constant-depth schedule. Odd distances finish
/// with one SWAP; distance 1 is just the SWAP.
void emit_chain(CircuitBuilder& b, const std::vector<GridPoint>& line);

/// Fixed frame size (physical timesteps) of one teleport phase.
inline constexpr int kChainFrameSlots = 8;

AdaptiveCircuit reorder(const ReorderSpec& spec);
AdaptiveCircuit interact(const InteractionSpec& spec);

/// Compiles a CCAC circuit onto the n x n grid, one interact block per input
/// timestep (Thm-1-style simulation). Input measurement ids are renumbered;
/// conditions are translated accordingly.
AdaptiveCircuit simulate_ccac(const AdaptiveCircuit& ccac);

/// Alg-2 target assignment: returns (T, pi) for an interaction spec.
ReorderSpec interaction_targets(const InteractionSpec& spec);

}  // namespace qgridc
