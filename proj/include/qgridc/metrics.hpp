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

namespace qgridc {

struct CostReport {
    int64_t depth = 0;
    int64_t size = 0;
    int64_t width = 0;
    Model model = Model::CCNTC;
};

// Frozen physical decompositions (1-2 qubit gates, nearest-neighbor valid on
// the op's hub-and-spokes geometry). A logical timestep is scheduled as one
// fixed window of kLogicalWindow physical timesteps; ops fill a prefix of it.
inline constexpr int64_t kExpandDepthCCX = 7;     // 2-controlled X / U
inline constexpr int64_t kExpandDepthMCX3 = 18;   // 3-controlled X (paired relative-phase form)
inline constexpr int64_t kExpandDepthCU3 = 25;    // 3-controlled U
inline constexpr int64_t kLogicalWindow = 25;

/// Physical ops / physical depth a single op expands to.
int64_t expansion_size(const BasicOp& op);
int64_t expansion_depth(const BasicOp& op);

/// The frozen physical realization of one logical op, as a sequence of
/// physical layers (used by the realization tests and the stats tool).
/// Ops already physical come back as a single layer holding the op.
std::vector<std::vector<BasicOp>> expand_op(const BasicOp& op);

/// Physical timestep count; logical timesteps expand to the fixed window.
int64_t depth(const AdaptiveCircuit& c);
/// Total basic operations after logical-to-physical expansion.
int64_t size(const AdaptiveCircuit& c);
/// NANTC/CCAC: number of touched qubits. CCNTC: volume of the smallest
/// axis-aligned bounding hypercube of the touched points.
int64_t width(const AdaptiveCircuit& c);

/// Depth/size at logical granularity (each timestep 1, each op 1).
int64_t logical_depth(const AdaptiveCircuit& c);
int64_t logical_size(const AdaptiveCircuit& c);

/// Touched-qubit count regardless of model (Thm-2-style width accounting).
int64_t touched_count(const AdaptiveCircuit& c);

CostReport cost_report(const AdaptiveCircuit& c);

}  // namespace qgridc
