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

#include <Eigen/Dense>

#include "qgridc/sim.hpp"

namespace qgridc {

using DensityMatrix = Eigen::MatrixXcd;

inline constexpr int kDensityQubitLimit = 10;

/// |bits><bits| on n qubits.
DensityMatrix basis_density(int n, uint64_t bits);
DensityMatrix density_from_state(const std::vector<cxd>& amps);

/// rho -> (gate) rho (gate)^dagger; measurements become the dephasing channel
/// sum_b P_b rho P_b. Conditional ops are not supported here.
void apply_to_density(DensityMatrix& rho, const BasicOp& op, const QubitMap& map);

DensityMatrix run_density(const AdaptiveCircuit& c, const QubitMap& map, DensityMatrix rho);

/// (1/2) tr |a - b|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state over `keep` (ascending qubit indices), tracing out the rest.
DensityMatrix partial_trace_keep(const DensityMatrix& rho, int n, const std::vector<int>& keep);

/// Reduced single-qubit state.
DensityMatrix partial_trace_to(const DensityMatrix& rho, int n, int keep);

/// Reduced density matrix of a pure state over `keep`.
DensityMatrix reduced_from_state(const std::vector<cxd>& amps, int n, const std::vector<int>& keep);

bool is_valid_density(const DensityMatrix& rho, double tol = 1e-9);

}  // namespace qgridc
