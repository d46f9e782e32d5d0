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

#include "qgridc/circuit.hpp"
#include "qgridc/metrics.hpp"

namespace qgridc {

/// One Alg-3 stage: the ops of Control-Clockwise(k) / zero-ferry / Rotate(k),
/// plus the base-case block on the innermost stage.
struct StageBlock {
    int ring_index = 0;
    std::vector<Timestep> timesteps;
};

struct CompactionPlan {
    int m = 0;
    int dim = 2;
    std::vector<StageBlock> stages;        // stage k = 0 .. (m-3)/2
    std::vector<Timestep> uncompute_suffix;  // mirror of everything except the CU
    BasicOp central_op;                    // the controlled-U itself
};

/// Control-Clockwise(k): corner / mid-side AND-combining ops of ring k,
/// appended to `into` as one logical timestep.
void control_clockwise(int ring_index, int m, std::vector<Timestep>& into);

/// Rotate(k): the disjoint in-ring swap layer.
void rotate(int ring_index, int m, std::vector<Timestep>& into);

/// The full plan for an m x m controlled-U (dim 2).
CompactionPlan plan_control_2d(int m, const GateSpec& u);

/// NANTC circuit applying U to the grid center iff every control of
/// control_layout(m, dim) is 1; all controls and ancillas restored.
AdaptiveCircuit control_circuit(int m, int dim, const GateSpec& u);

/// Reference dim-3 generalization (layer compaction + accumulator rail).
AdaptiveCircuit control_circuit_kd(int m, int dim, const GateSpec& u);

/// NANTC fanout: XORs the center qubit into every control_layout position,
/// ancillas restored. Outward copy-wave construction, Theta(n^{1/k}) depth.
AdaptiveCircuit fanout_circuit(int m, int dim);

}  // namespace qgridc
